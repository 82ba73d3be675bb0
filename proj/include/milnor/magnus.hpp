#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/series.hpp"
#include "milnor/word.hpp"

namespace milnor {

class UnassignedGeneratorError : public std::runtime_error {
 public:
  explicit UnassignedGeneratorError(std::string generator)
      : std::runtime_error("no series assigned to generator '" + generator + "'"),
        generator_(std::move(generator)) {}

  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

/// Assignment of a series with constant term 1 to each generator. Numbered
/// meridians m_i with i <= vars default to 1 + x_i; symbolic generators have
/// no default and must be assigned explicitly.
template <coefficient_ring C = Integer>
class ExpansionContext {
 public:
  explicit ExpansionContext(int vars) : vars_(vars) {}

  /// Context with only the default meridian assignments.
  static ExpansionContext standard(int vars) { return ExpansionContext(vars); }

  int vars() const { return vars_; }

  ExpansionContext& assign(const Generator& g, Series<C> s) {
    if (s.vars() != vars_) throw std::invalid_argument("assigned series has the wrong ambient ring");
    if (!(s.constant_term() == C(1)))
      throw std::invalid_argument("assigned series must have constant term 1");
    assignment_.insert_or_assign(g, std::move(s));
    return *this;
  }

  Series<C> series_for(const Generator& g) const {
    auto it = assignment_.find(g);
    if (it != assignment_.end()) return it->second;
    if (g.is_numbered() && g.index() <= vars_)
      return Series<C>::one(vars_) + Series<C>::variable(vars_, g.index());
    throw UnassignedGeneratorError(g.str());
  }

 private:
  int vars_;
  std::map<Generator, Series<C>> assignment_;
};

/// Magnus expansion of a word: the multiplicative extension of the context
/// assignment, with g^-1 going to the series inverse.
template <coefficient_ring C>
Series<C> expand(const Word& w, const ExpansionContext<C>& ctx) {
  Series<C> acc = Series<C>::one(ctx.vars());
  std::map<Generator, Series<C>> cache[2];  // per sign
  for (const Letter& l : w.letters()) {
    auto& side = cache[l.sign > 0 ? 0 : 1];
    auto it = side.find(l.gen);
    if (it == side.end()) {
      Series<C> s = ctx.series_for(l.gen);
      if (l.sign < 0) s = inverse(s);
      it = side.emplace(l.gen, std::move(s)).first;
    }
    acc *= it->second;
  }
  return acc;
}

inline Series<Integer> expand(const Word& w, int vars) {
  return expand(w, ExpansionContext<Integer>::standard(vars));
}

/// Equality in the free Milnor group on m1..mn, decided through the Magnus
/// embedding: u = v iff their expansions agree.
inline bool mf_equal(const Word& u, const Word& v, int vars) {
  return expand(u, vars) == expand(v, vars);
}

inline bool is_trivial_mf(const Word& w, int vars) { return expand(w, vars).is_one(); }

/// Witnesses nilpotency of class <= n in the reduced ring: expands sampled
/// (n+1)-fold left-normed commutators of meridians (repeats allowed) and
/// checks they all come out trivial. Exhaustive for n <= 3, sampled above.
inline bool nilpotency_class_check(int vars, int samples = 200) {
  if (vars < 1) throw std::invalid_argument("variable count must be >= 1");
  ExpansionContext<Integer> ctx(vars);
  auto tuple_trivial = [&](const std::vector<int>& tuple) {
    std::vector<Word> parts;
    parts.reserve(tuple.size());
    for (int i : tuple) parts.push_back(Word::generator(Generator::numbered(i)));
    return expand(left_normed_commutator(parts), ctx).is_one();
  };

  const int len = vars + 1;
  long long total = 1;
  for (int i = 0; i < len; ++i) total *= vars;
  if (vars <= 3) {
    std::vector<int> tuple(len, 1);
    for (long long code = 0; code < total; ++code) {
      long long rest = code;
      for (int i = 0; i < len; ++i) {
        tuple[i] = 1 + static_cast<int>(rest % vars);
        rest /= vars;
      }
      if (!tuple_trivial(tuple)) return false;
    }
    return true;
  }
  std::mt19937 rng(0x6d696c);
  std::uniform_int_distribution<int> pick(1, vars);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> tuple(len);
    for (int& i : tuple) i = pick(rng);
    if (!tuple_trivial(tuple)) return false;
  }
  return true;
}

}  // namespace milnor
