#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace milnor {

/// A square-free monomial in non-commuting variables: an ordered sequence of
/// pairwise-distinct variable indices. The empty sequence is the unit.
/// Indices are limited to 1..63 so the support fits one machine word.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int i : indices_) {
      if (i < 1 || i > 63) throw std::invalid_argument("variable index out of range 1..63");
      std::uint64_t bit = std::uint64_t{1} << i;
      if (mask_ & bit) throw std::invalid_argument("repeated variable index in monomial");
      mask_ |= bit;
    }
  }

  /// Concatenation, or nullopt when the supports overlap (the product is
  /// zero in the square-free ring).
  static std::optional<Monomial> concat(const Monomial& a, const Monomial& b) {
    if (a.mask_ & b.mask_) return std::nullopt;
    Monomial m;
    m.indices_ = a.indices_;
    m.indices_.insert(m.indices_.end(), b.indices_.begin(), b.indices_.end());
    m.mask_ = a.mask_ | b.mask_;
    return m;
  }

  int degree() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  std::uint64_t support() const { return mask_; }
  bool contains(int index) const { return (mask_ >> index) & 1; }

  int max_index() const {
    int n = 0;
    for (int i : indices_)
      if (i > n) n = i;
    return n;
  }

  /// "x2.x3" with the unit monomial written "1".
  std::string str() const {
    if (indices_.empty()) return "1";
    std::string out;
    for (int i : indices_) {
      if (!out.empty()) out += '.';
      out += 'x' + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.indices_ == b.indices_; }

  /// Graded lexicographic: by degree, then by index sequence.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.indices_.size() != b.indices_.size()) return a.indices_.size() < b.indices_.size();
    return a.indices_ < b.indices_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

 private:
  std::vector<int> indices_;
  std::uint64_t mask_ = 0;
};

}  // namespace milnor
