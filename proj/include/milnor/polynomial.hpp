#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "milnor/integer.hpp"

namespace milnor {

/// Multivariate polynomial over Integer in named unknowns (e.g. "a.24"),
/// kept in canonical form: terms sorted graded-lexicographically by unknown
/// name, no zero coefficients stored. Serves as the coefficient ring for
/// parametric Magnus expansions.
class IntPolynomial {
 public:
  /// Sorted (name, exponent>=1) pairs; empty means the constant monomial.
  using Exponents = std::vector<std::pair<std::string, int>>;

  IntPolynomial() = default;

  IntPolynomial(int value) : IntPolynomial(Integer(value)) {}  // NOLINT: implicit by design

  IntPolynomial(Integer value) {
    if (value != 0) terms_.emplace(Exponents{}, std::move(value));
  }

  static IntPolynomial unknown(std::string name) {
    if (name.empty()) throw std::invalid_argument("unknown needs a nonempty name");
    IntPolynomial p;
    p.terms_.emplace(Exponents{{std::move(name), 1}}, Integer(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  /// Value of a constant polynomial; throws if unknowns are present.
  Integer constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.empty() ? Integer(0) : terms_.begin()->second;
  }

  int total_degree() const {
    int deg = 0;
    for (const auto& [mono, c] : terms_) deg = std::max(deg, degree_of(mono));
    return deg;
  }

  std::set<std::string> unknowns() const {
    std::set<std::string> names;
    for (const auto& [mono, c] : terms_)
      for (const auto& [name, e] : mono) names.insert(name);
    return names;
  }

  /// Substitutes integers for unknowns; names missing from the assignment
  /// are taken to be zero.
  Integer evaluate(const std::map<std::string, Integer>& assignment) const {
    Integer total = 0;
    for (const auto& [mono, c] : terms_) {
      Integer term = c;
      for (const auto& [name, e] : mono) {
        auto it = assignment.find(name);
        const Integer value = it == assignment.end() ? Integer(0) : it->second;
        for (int k = 0; k < e && term != 0; ++k) term *= value;
      }
      total += term;
    }
    return total;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out = a;
    for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
    return out;
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out = a;
    for (const auto& [mono, c] : b.terms_) out.add_term(mono, -c);
    return out;
  }

  IntPolynomial operator-() const {
    IntPolynomial out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
    return out;
  }

  IntPolynomial& operator+=(const IntPolynomial& rhs) { return *this = *this + rhs; }
  IntPolynomial& operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "a.2*b.46 - 2*c.4^2 + 3"-style canonical text, terms in storage order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
      bool negative = c < 0;
      Integer mag = negative ? Integer(-c) : c;
      std::string body;
      if (mono.empty()) {
        body = mag.str();
      } else {
        if (mag != 1) body = mag.str();
        for (const auto& [name, e] : mono) {
          if (!body.empty()) body += '*';
          body += name;
          if (e > 1) body += '^' + std::to_string(e);
        }
      }
      if (out.empty())
        out = (negative ? "-" : "") + body;
      else
        out += (negative ? " - " : " + ") + body;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.str();
  }

 private:
  static int degree_of(const Exponents& mono) {
    int d = 0;
    for (const auto& [name, e] : mono) d += e;
    return d;
  }

  static Exponents merge(const Exponents& a, const Exponents& b) {
    Exponents out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      int cmp = ia->first.compare(ib->first);
      if (cmp < 0)
        out.push_back(*ia++);
      else if (cmp > 0)
        out.push_back(*ib++);
      else {
        out.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    out.insert(out.end(), ia, a.end());
    out.insert(out.end(), ib, b.end());
    return out;
  }

  // Graded lexicographic order on the degree-expanded name sequence.
  struct MonoLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
      int da = degree_of(a), db = degree_of(b);
      if (da != db) return da < db;
      auto ia = a.begin();
      auto ib = b.begin();
      int used_a = 0, used_b = 0;
      while (ia != a.end() && ib != b.end()) {
        int cmp = ia->first.compare(ib->first);
        if (cmp != 0) return cmp < 0;
        int take = std::min(ia->second - used_a, ib->second - used_b);
        used_a += take;
        used_b += take;
        if (used_a == ia->second) {
          ++ia;
          used_a = 0;
        }
        if (used_b == ib->second) {
          ++ib;
          used_b = 0;
        }
      }
      return ia == a.end() && ib != b.end();
    }
  };

  void add_term(const Exponents& mono, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponents, Integer, MonoLess> terms_;
};

}  // namespace milnor
