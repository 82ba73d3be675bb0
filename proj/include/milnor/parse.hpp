#pragma once

#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "milnor/word.hpp"

namespace milnor {

/// Syntax error with a 1-based character position into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An identifier that parses but is not in the declared alphabet.
class UnknownGeneratorError : public std::runtime_error {
 public:
  UnknownGeneratorError(std::string generator, std::size_t position)
      : std::runtime_error("unknown generator '" + generator + "' (at position " +
                           std::to_string(position) + ")"),
        generator_(std::move(generator)),
        position_(position) {}

  const std::string& generator() const { return generator_; }
  std::size_t position() const { return position_; }

 private:
  std::string generator_;
  std::size_t position_;
};

/// The finite set of generators an expression may mention.
class Alphabet {
 public:
  Alphabet() = default;

  /// m1 .. mn
  static Alphabet numbered(int n) {
    Alphabet a;
    for (int i = 1; i <= n; ++i) a.gens_.insert(Generator::numbered(i));
    return a;
  }

  Alphabet& add(Generator g) {
    gens_.insert(std::move(g));
    return *this;
  }

  Alphabet& add_symbol(std::string name) {
    gens_.insert(Generator::symbolic(std::move(name)));
    return *this;
  }

  bool contains(const Generator& g) const { return gens_.count(g) != 0; }
  const std::set<Generator>& generators() const { return gens_; }

 private:
  std::set<Generator> gens_;
};

namespace detail {

// Grammar:
//   word  := term { ("*" | whitespace) term }
//   term  := atom [ "^" ( "-1" | atom ) ] | atom "'"
//   atom  := identifier | "1" | "(" word ")" | "[" word "," word "]"
//   identifier := "m" digits | "m_" name
// "w^-1" and "w'" are the inverse, "u^v" is the conjugate v^-1 u v, "1" is
// the identity, and "#" starts a comment running to the end of the line.
class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = parse_sequence(/*allow_empty=*/true);
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t here() const { return pos_ + 1; }  // 1-based for messages

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, here()); }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  static bool is_stop(char c) { return c == ')' || c == ']' || c == ','; }

  Word parse_sequence(bool allow_empty) {
    Word acc;
    bool first = true;
    for (;;) {
      skip_space();
      if (at_end() || is_stop(peek())) break;
      if (peek() == '*') {
        if (first) fail("unexpected '*'");
        ++pos_;
        skip_space();
        if (at_end() || is_stop(peek())) fail("expected a term after '*'");
      }
      acc *= parse_term();
      first = false;
    }
    if (first && !allow_empty) fail("expected a word");
    return acc;
  }

  Word parse_term() {
    Word base = parse_atom();
    skip_space();
    if (!at_end() && peek() == '\'') {
      ++pos_;
      return base.inverse();
    }
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end()) fail("expected '-1' or an atom after '^'");
      if (peek() == '-') {
        ++pos_;
        if (at_end() || peek() != '1') fail("expected '-1' after '^'");
        ++pos_;
        return base.inverse();
      }
      return conjugate(base, parse_atom());
    }
    return base;
  }

  Word parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_sequence(/*allow_empty=*/false);
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_sequence(/*allow_empty=*/false);
      expect(',');
      Word v = parse_sequence(/*allow_empty=*/false);
      expect(']');
      return commutator(u, v);
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == 'm') return parse_identifier();
    fail("expected a generator, '1', '(' or '['");
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word parse_identifier() {
    std::size_t start = here();
    ++pos_;  // 'm'
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
      if (digits.size() > 9) throw ParseError("generator index too large", start);
      Generator g = Generator::numbered(std::stoi(digits));
      if (!alphabet_.contains(g)) throw UnknownGeneratorError(g.str(), start);
      return Word::generator(g);
    }
    if (!at_end() && peek() == '_') {
      ++pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += text_[pos_++];
      if (name.empty()) throw ParseError("expected a name after 'm_'", start);
      Generator g = Generator::symbolic(name);
      if (!alphabet_.contains(g)) throw UnknownGeneratorError(g.str(), start);
      return Word::generator(g);
    }
    throw ParseError("expected digits or '_' after 'm'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Alphabet& alphabet_;
};

}  // namespace detail

/// Parses a word expression over the given alphabet. Empty input denotes the
/// identity. Throws ParseError on bad syntax and UnknownGeneratorError for
/// identifiers outside the alphabet.
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return detail::WordParser(text, alphabet).parse();
}

}  // namespace milnor
