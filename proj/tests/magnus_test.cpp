#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor/magnus.hpp"
#include "milnor/parse.hpp"
#include "support/generators.hpp"
#include "support/tensor_oracle.hpp"

using namespace milnor;
using testsupport::oracle_expand;
using testsupport::random_nonidentity_word;
using testsupport::random_word;

namespace {

using S = Series<Integer>;

Word w(std::string_view expr, int n = 6) { return parse_word(expr, Alphabet::numbered(n)); }

Word random_relator(std::mt19937& rng, int vars, int conj_len) {
  std::uniform_int_distribution<int> index(1, vars);
  return milnor_relator(Generator::numbered(index(rng)), random_word(rng, vars, conj_len),
                        random_word(rng, vars, conj_len));
}

}  // namespace

TEST_CASE("expansion of single meridians") {
  CHECK(expand(w("m2"), 4) == S::one(4) + S::variable(4, 2));
  CHECK(expand(w("m1^-1"), 2) == S::one(2) - S::variable(2, 1));
  CHECK(expand(Word(), 3) == S::one(3));
  CHECK(expand(w("m1^-1"), 2).str() == "1 - x1");
}

TEST_CASE("expansion of a simple commutator") {
  const S got = expand(w("[m5,m6]"), 6);
  S expected = S::one(6);
  expected.add_term(Monomial({5, 6}), 1);
  expected.add_term(Monomial({6, 5}), -1);
  CHECK(got == expected);
  CHECK(got == oracle_expand(w("[m5,m6]"), 6));
}

TEST_CASE("expansion agrees with the tensor-algebra oracle") {
  for (std::string_view expr :
       {"[m1,m2]", "[[m1,m2],m3]", "m1 m2 m1^-1 m2^-1 m3", "[m2,[[m3,m4],[m5,m6]]]",
        "m1^-1 m2^-1 m1^-1 m2"})
    CHECK(expand(w(expr), 6) == oracle_expand(w(expr), 6));

  std::mt19937 rng(10001);
  std::uniform_int_distribution<int> vars(1, 4);
  for (int i = 0; i < 60; ++i) {
    const int n = vars(rng);
    Word word = random_word(rng, n, 10);
    CHECK(expand(word, n) == oracle_expand(word, n));
  }
}

TEST_CASE("expansion is a homomorphism") {
  std::mt19937 rng(10002);
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, 4, 8), v = random_word(rng, 4, 8);
    CHECK(expand(u * v, 4) == expand(u, 4) * expand(v, 4));
  }
}

TEST_CASE("expansion of an inverse is the series inverse") {
  std::mt19937 rng(10003);
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, 4, 8);
    CHECK(expand(u.inverse(), 4) == inverse(expand(u, 4)));
  }
}

TEST_CASE("milnor relators expand to 1") {
  std::mt19937 rng(10004);
  std::uniform_int_distribution<int> vars(1, 5);
  for (int i = 0; i < 200; ++i) {
    const int n = vars(rng);
    CHECK(expand(random_relator(rng, n, 6), n).is_one());
  }
}

TEST_CASE("lowest-degree part survives conjugation") {
  std::mt19937 rng(10005);
  int done = 0;
  while (done < 100) {
    Word s = random_nonidentity_word(rng, 4, 6);
    const S es = expand(s, 4);
    if (es.is_one()) continue;  // e.g. a relator; lowest part undefined
    Word t = random_word(rng, 4, 6);
    CHECK(lowest_degree_part(expand(conjugate(s, t), 4)) == lowest_degree_part(es));
    ++done;
  }
}

TEST_CASE("equality in the free Milnor group") {
  std::mt19937 rng(10006);
  for (int i = 0; i < 50; ++i) {
    Word word = random_word(rng, 4, 8);
    CHECK(mf_equal(word, word, 4));
    CHECK(mf_equal(word * random_relator(rng, 4, 4), word, 4));
  }
  CHECK(!mf_equal(w("m1", 2), w("m2", 2), 2));
  CHECK(!mf_equal(w("m1 m2", 2), w("m2 m1", 2), 2));
  CHECK(mf_equal(w("[m1^m2, m1^m3] m2", 3), w("m2", 3), 3));
}

TEST_CASE("triviality in the free Milnor group") {
  CHECK(is_trivial_mf(Word(), 3));
  CHECK(is_trivial_mf(milnor_relator(Generator::numbered(1), w("m2", 3), w("m3", 3)), 3));
  CHECK(!is_trivial_mf(w("[m1,m2]", 2), 2));
}

TEST_CASE("commutators longer than the class vanish, shorter ones persist") {
  CHECK(expand(w("[[m1,m2],m1]", 2), 2).is_one());
  CHECK(expand(w("[[m1,m2],m2]", 2), 2).is_one());
  CHECK(!expand(w("[[m1,m2],m3]", 3), 3).is_one());
  CHECK(lowest_degree_part(expand(w("[[m1,m2],m3]", 3), 3)).terms().begin()->first.degree() == 3);

  CHECK(nilpotency_class_check(2));
  CHECK(nilpotency_class_check(3));
  CHECK(nilpotency_class_check(4, 60));
}

TEST_CASE("expansion context validation") {
  ExpansionContext<Integer> ctx(3);

  try {
    expand(Word::generator(Generator::symbolic("a")) * w("m1", 3), ctx);
    FAIL("expected UnassignedGeneratorError");
  } catch (const UnassignedGeneratorError& e) {
    CHECK(e.generator() == "m_a");
  }
  CHECK_THROWS_AS(expand(Word::generator(Generator::numbered(7)), ctx), UnassignedGeneratorError);

  CHECK_THROWS_AS(ctx.assign(Generator::symbolic("a"), Series<Integer>::one(4)),
                  std::invalid_argument);  // wrong ambient ring
  CHECK_THROWS_AS(ctx.assign(Generator::symbolic("a"), Series<Integer>::variable(3, 1)),
                  std::invalid_argument);  // constant term != 1

  ctx.assign(Generator::symbolic("a"),
             Series<Integer>::one(3) - Series<Integer>::variable(3, 2));
  CHECK(expand(parse_word("m_a m2", Alphabet::numbered(3).add_symbol("a")), ctx).is_one());

  SECTION("assignments may override numbered defaults") {
    ExpansionContext<Integer> deleted(2);
    deleted.assign(Generator::numbered(1), Series<Integer>::one(2));
    CHECK(expand(w("m1", 2), deleted).is_one());
    CHECK(expand(w("[m2, m2^m1]", 2), deleted).is_one());
  }
}
