#pragma once

#include <concepts>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "milnor/integer.hpp"
#include "milnor/monomial.hpp"

namespace milnor {

/// Commutative unital ring with exact equality. Integer and IntPolynomial
/// are the instances used here.
template <typename C>
concept coefficient_ring =
    std::regular<C> && std::constructible_from<C, int> &&
    requires(const C& a, const C& b) {
      { a + b } -> std::convertible_to<C>;
      { a - b } -> std::convertible_to<C>;
      { a * b } -> std::convertible_to<C>;
      { -a } -> std::convertible_to<C>;
    };

template <typename C>
concept streamable = requires(std::ostream& os, const C& c) { os << c; };

/// Element of the reduced ring R_{x_1..x_n}: a finite sum of square-free
/// monomials with coefficients in C. Multiplication concatenates monomials
/// and kills any product with a repeated variable, so the ring is nilpotent
/// and inverses of 1 + (positive-degree part) are polynomial.
///
/// Terms are keyed in graded-lex order; no zero coefficient is ever stored.
template <coefficient_ring C>
class Series {
 public:
  explicit Series(int vars) : vars_(check_vars(vars)) {}

  static Series zero(int vars) { return Series(vars); }

  static Series one(int vars) {
    Series s(vars);
    s.terms_.emplace(Monomial(), C(1));
    return s;
  }

  /// The series x_index.
  static Series variable(int vars, int index) {
    Series s(vars);
    s.add_term(Monomial({index}), C(1));
    return s;
  }

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0 &&
           terms_.begin()->second == C(1);
  }

  const std::map<Monomial, C>& terms() const { return terms_; }

  C coefficient(const Monomial& m) const {
    if (m.max_index() > vars_) throw std::invalid_argument("monomial outside the ambient ring");
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  C constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Adds c * m into the series, dropping the term if it cancels to zero.
  void add_term(const Monomial& m, const C& c) {
    if (m.max_index() > vars_) throw std::invalid_argument("monomial outside the ambient ring");
    if (c == C(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  friend Series operator+(const Series& a, const Series& b) {
    check_same(a, b);
    Series out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    check_same(a, b);
    Series out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, C(-c));
    return out;
  }

  Series operator-() const {
    Series out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, C(-c));
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    check_same(a, b);
    Series out(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.support() & mb.support()) continue;  // repeated index: term dies
        out.add_term(*Monomial::concat(ma, mb), C(ca * cb));
      }
    }
    return out;
  }

  Series& operator+=(const Series& rhs) { return *this = *this + rhs; }
  Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Series&, const Series&) = default;

  /// Canonical text form: terms in graded-lex order, coefficients of
  /// magnitude one elided, e.g. "1 + x1.x2 - 2*x2.x1".
  std::string str() const
    requires streamable<C>
  {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if constexpr (std::same_as<C, Integer>) {
        bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        std::string body;
        if (m.degree() == 0)
          body = mag.str();
        else if (mag == 1)
          body = m.str();
        else
          body = mag.str() + "*" + m.str();
        if (out.empty())
          out = (negative ? "-" : "") + body;
        else
          out += (negative ? " - " : " + ") + body;
      } else {
        std::ostringstream os;
        os << "(" << c << ")";
        if (m.degree() > 0) os << "*" << m.str();
        if (!out.empty()) out += " + ";
        out += os.str();
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Series& s)
    requires streamable<C>
  {
    return os << s.str();
  }

 private:
  static int check_vars(int vars) {
    if (vars < 0 || vars > 63) throw std::invalid_argument("ambient variable count out of range 0..63");
    return vars;
  }

  static void check_same(const Series& a, const Series& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("mismatched ambient variable counts");
  }

  int vars_;
  std::map<Monomial, C> terms_;
};

/// Inverse of a series with constant term 1. The positive-degree part u is
/// nilpotent, so (1 + u)^-1 = 1 - u + u^2 - ... terminates.
template <coefficient_ring C>
Series<C> inverse(const Series<C>& s) {
  if (!(s.constant_term() == C(1)))
    throw std::domain_error("series inverse requires constant term 1");
  Series<C> out = Series<C>::one(s.vars());
  Series<C> pow = out;
  const Series<C> neg_u = out - s;  // -(s - 1)
  for (;;) {
    pow *= neg_u;
    if (pow.is_zero()) break;
    out += pow;
  }
  return out;
}

/// Sum of the terms of minimal positive degree.
template <coefficient_ring C>
Series<C> lowest_degree_part(const Series<C>& s) {
  int min_degree = 0;
  for (const auto& [m, c] : s.terms()) {
    if (m.degree() == 0) continue;
    if (min_degree == 0 || m.degree() < min_degree) min_degree = m.degree();
  }
  if (min_degree == 0) throw std::domain_error("series has no positive-degree terms");
  Series<C> out(s.vars());
  for (const auto& [m, c] : s.terms())
    if (m.degree() == min_degree) out.add_term(m, c);
  return out;
}

}  // namespace milnor
