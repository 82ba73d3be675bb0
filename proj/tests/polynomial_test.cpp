#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor/polynomial.hpp"

using namespace milnor;

namespace {

IntPolynomial u(const std::string& name) { return IntPolynomial::unknown(name); }

IntPolynomial random_poly(std::mt19937& rng) {
  static const std::vector<std::string> pool = {"a.2", "a.46", "b.4", "c.6", "c.24"};
  std::uniform_int_distribution<int> terms(0, 4), pick(0, static_cast<int>(pool.size()) - 1),
      exponent(1, 2), coeff(-5, 5), factors(0, 2);
  IntPolynomial p;
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    IntPolynomial term(coeff(rng));
    const int f = factors(rng);
    for (int k = 0; k < f; ++k) {
      IntPolynomial base = u(pool[pick(rng)]);
      for (int e = exponent(rng); e > 0; --e) term = term * base;
    }
    p = p + term;
  }
  return p;
}

}  // namespace

TEST_CASE("constants and unknowns") {
  CHECK(IntPolynomial().is_zero());
  CHECK(IntPolynomial(0).is_zero());
  CHECK(IntPolynomial(5).is_constant());
  CHECK(IntPolynomial(5).constant_value() == 5);
  CHECK(IntPolynomial(-3) == IntPolynomial(Integer(-3)));

  CHECK(!u("a.2").is_constant());
  CHECK_THROWS_AS(u("a.2").constant_value(), std::domain_error);
  CHECK_THROWS_AS(IntPolynomial::unknown(""), std::invalid_argument);

  CHECK(u("a.2").unknowns() == std::set<std::string>{"a.2"});
  CHECK((u("a.2") * u("b.4") + IntPolynomial(7)).unknowns() ==
        std::set<std::string>({"a.2", "b.4"}));
}

TEST_CASE("arithmetic") {
  const IntPolynomial a = u("a.2"), b = u("b.4");

  CHECK(a + (-a) == IntPolynomial());
  CHECK(a - a == IntPolynomial(0));
  CHECK(a * b == b * a);
  CHECK((a + b) * (a + b) == a * a + IntPolynomial(2) * a * b + b * b);
  CHECK(a * IntPolynomial(0) == IntPolynomial());
  CHECK(a * IntPolynomial(1) == a);

  CHECK((a + IntPolynomial(1)).total_degree() == 1);
  CHECK((a * a * b).total_degree() == 3);
  CHECK(IntPolynomial(4).total_degree() == 0);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(9001);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("evaluation") {
  const IntPolynomial p = u("a.2") * u("a.2") - IntPolynomial(3) * u("b.4") + IntPolynomial(1);

  CHECK(p.evaluate({{"a.2", 2}, {"b.4", 1}}) == 2);
  CHECK(p.evaluate({{"a.2", -2}, {"b.4", 0}}) == 5);
  CHECK(p.evaluate({}) == 1);  // missing unknowns are zero
  CHECK(IntPolynomial(9).evaluate({}) == 9);
  CHECK(u("a.2").evaluate({{"a.2", Integer("123456789012345678901234567890")}}) ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("canonical text form") {
  CHECK(IntPolynomial().str() == "0");
  CHECK(IntPolynomial(-7).str() == "-7");
  CHECK(u("a.2").str() == "a.2");
  CHECK((-u("a.2")).str() == "-a.2");
  CHECK((IntPolynomial(2) * u("a.2")).str() == "2*a.2");
  CHECK((u("a.2") * u("a.2")).str() == "a.2^2");
  CHECK((u("b.4") * u("a.2")).str() == "a.2*b.4");
  CHECK((u("a.2") + IntPolynomial(1)).str() == "1 + a.2");
  CHECK((u("a.2") * u("b.4") - u("c.6")).str() == "-c.6 + a.2*b.4");
}

TEST_CASE("graded-lex canonical order") {
  // degree first, then name sequence: a.2^2 expands to (a.2, a.2) < (a.2, b.4)
  const IntPolynomial p = u("a.2") * u("b.4") + u("a.2") * u("a.2") + u("b.4") + IntPolynomial(1);
  CHECK(p.str() == "1 + b.4 + a.2^2 + a.2*b.4");
}
