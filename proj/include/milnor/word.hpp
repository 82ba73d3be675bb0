#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace milnor {

/// A free-group generator: a numbered meridian (m1, m2, ...) or a symbolic
/// one (m_a, m_b, ...) from a declared alphabet.
class Generator {
 public:
  Generator() = default;

  static Generator numbered(int index) {
    if (index < 1) throw std::invalid_argument("generator index must be >= 1");
    Generator g;
    g.index_ = index;
    return g;
  }

  static Generator symbolic(std::string name) {
    if (name.empty()) throw std::invalid_argument("symbolic generator needs a nonempty name");
    Generator g;
    g.name_ = std::move(name);
    return g;
  }

  bool is_numbered() const { return index_ > 0; }
  int index() const { return index_; }
  const std::string& name() const { return name_; }

  std::string str() const {
    return is_numbered() ? "m" + std::to_string(index_) : "m_" + name_;
  }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  int index_ = 0;     // >= 1 for numbered generators, 0 for symbolic
  std::string name_;  // nonempty iff symbolic
};

/// One signed letter of a word; sign is +1 or -1.
struct Letter {
  Generator gen;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word, the normal form of a free-group element. The empty
/// word is the identity. Reduction is maintained as a class invariant, so two
/// words are equal in the free group iff they compare equal.
class Word {
 public:
  Word() = default;

  /// Builds the reduced form of an arbitrary letter sequence.
  explicit Word(std::vector<Letter> raw) {
    letters_.reserve(raw.size());
    for (Letter& l : raw) push_cancel(std::move(l));
  }

  static Word generator(Generator g, int sign = 1) {
    Word w;
    w.letters_.push_back({std::move(g), check_sign(sign)});
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(it->inverse());
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w;
    w.letters_ = a.letters_;
    for (const Letter& l : b.letters_) w.push_cancel(Letter(l));
    return w;
  }

  Word& operator*=(const Word& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Word&, const Word&) = default;

  /// Canonical serialization; parse_word round-trips it. Identity prints "1".
  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const Letter& l : letters_) {
      if (!out.empty()) out += ' ';
      out += l.gen.str();
      if (l.sign < 0) out += "^-1";
    }
    return out;
  }

  /// Largest numbered-generator index used, 0 if none.
  int max_meridian_index() const {
    int n = 0;
    for (const Letter& l : letters_)
      if (l.gen.is_numbered() && l.gen.index() > n) n = l.gen.index();
    return n;
  }

  bool uses_symbolic() const {
    for (const Letter& l : letters_)
      if (!l.gen.is_numbered()) return true;
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

 private:
  static int check_sign(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    return sign;
  }

  void push_cancel(Letter l) {
    check_sign(l.sign);
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(std::move(l));
  }

  std::vector<Letter> letters_;  // invariant: freely reduced
};

/// Free reduction of a raw letter sequence; idempotent.
inline Word reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }

/// [u, v] = u^-1 v^-1 u v. This orientation makes [fg,h] = [f,h]^g [g,h]
/// an exact identity of reduced words.
inline Word commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

/// u^g = g^-1 u g, paired with the commutator orientation above.
inline Word conjugate(const Word& u, const Word& g) { return g.inverse() * u * g; }

/// The relator [g^x, g^y] whose normal closure defines the Milnor group.
inline Word milnor_relator(const Generator& g, const Word& x, const Word& y) {
  Word base = Word::generator(g);
  return commutator(conjugate(base, x), conjugate(base, y));
}

/// [[...[w1, w2], w3], ..., wk]
inline Word left_normed_commutator(const std::vector<Word>& parts) {
  if (parts.empty()) return {};
  Word acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = commutator(acc, parts[i]);
  return acc;
}

}  // namespace milnor
