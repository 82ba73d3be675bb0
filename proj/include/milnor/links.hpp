#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/magnus.hpp"
#include "milnor/parse.hpp"

namespace milnor {

/// Bad index data: out-of-range meridians, repeated invariant indices, a
/// target inside its own index sequence.
class IndexError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// String-link-style presentation: one longitude word in the meridians
/// m1..mn per component. Invariants computed from it are honest integers.
struct LinkPresentation {
  int components = 0;
  std::vector<Word> longitudes;
  std::string name;
};

inline void validate(const LinkPresentation& pres) {
  if (pres.components < 1) throw IndexError("presentation needs at least one component");
  if (static_cast<int>(pres.longitudes.size()) != pres.components)
    throw IndexError("presentation needs exactly one longitude per component");
  for (const Word& w : pres.longitudes) {
    if (w.uses_symbolic()) throw IndexError("longitudes must use numbered meridians only");
    if (w.max_meridian_index() > pres.components)
      throw IndexError("longitude mentions a meridian beyond the component count");
  }
}

/// mu(seq; target): the coefficient of x_{seq} in the expansion of the
/// target component's longitude. Indices must be distinct and avoid the
/// target.
inline Integer mu(const LinkPresentation& pres, const std::vector<int>& seq, int target) {
  validate(pres);
  if (target < 1 || target > pres.components) throw IndexError("target component out of range");
  if (seq.empty()) throw IndexError("index sequence must be nonempty");
  std::uint64_t seen = 0;
  for (int i : seq) {
    if (i < 1 || i > pres.components) throw IndexError("index out of range");
    if (i == target) throw IndexError("target may not appear in the index sequence");
    std::uint64_t bit = std::uint64_t{1} << i;
    if (seen & bit) throw IndexError("repeated index in the sequence");
    seen |= bit;
  }
  Monomial m(seq);
  return expand(pres.longitudes[target - 1], pres.components).coefficient(m);
}

struct EssentialWitness {
  std::vector<int> seq;
  int target = 0;
  Integer value;
};

/// First non-vanishing invariant in canonical order, if any. The expansion
/// of longitude j is taken with m_j sent to 1, i.e. in the reduced ring on
/// the other components' variables.
inline std::optional<EssentialWitness> essential_witness(const LinkPresentation& pres) {
  validate(pres);
  const int n = pres.components;
  for (int j = 1; j <= n; ++j) {
    ExpansionContext<Integer> ctx(n);
    ctx.assign(Generator::numbered(j), Series<Integer>::one(n));
    Series<Integer> s = expand(pres.longitudes[j - 1], ctx);
    for (const auto& [m, c] : s.terms()) {
      if (m.degree() == 0) continue;
      return EssentialWitness{m.indices(), j, c};
    }
  }
  return std::nullopt;
}

/// A link presentation is homotopically trivial iff every longitude expands
/// to 1 after deleting its own variable; equivalently, all distinct-index
/// invariants vanish.
inline bool is_homotopically_trivial(const LinkPresentation& pres) {
  return !essential_witness(pres).has_value();
}

/// Built-in presentations: "unlink(n)", "hopf", "borromean", "whitehead".
inline LinkPresentation builtin_link(const std::string& name) {
  auto word = [](int n, std::string_view expr) { return parse_word(expr, Alphabet::numbered(n)); };
  if (name == "hopf") return {2, {word(2, "m2"), word(2, "m1")}, name};
  if (name == "borromean")
    return {3, {word(3, "[m2,m3]"), word(3, "[m3,m1]"), word(3, "[m1,m2]")}, name};
  if (name == "whitehead") return {2, {word(2, "[m2, m2^m1]"), Word()}, name};
  if (name.rfind("unlink(", 0) == 0 && name.back() == ')') {
    const std::string digits = name.substr(7, name.size() - 8);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() <= 2) {
      int n = std::stoi(digits);
      if (n >= 1 && n <= 63) return {n, std::vector<Word>(n), name};
    }
  }
  throw std::invalid_argument("unknown builtin link '" + name + "'");
}

/// Reads the link file format:
///   components: <n>
///   longitude <j>: <word-expr>      (one line per component, any order)
/// Blank lines and '#' comments are skipped. Malformed structure raises
/// ParseError; meridians beyond n raise UnknownGeneratorError.
inline LinkPresentation parse_link_text(std::string_view text, std::string name = "") {
  LinkPresentation pres;
  pres.name = std::move(name);
  std::vector<bool> seen;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);

    std::istringstream in{std::string(line)};
    std::string keyword;
    in >> keyword;
    if (!have_header) {
      int n = 0;
      std::string extra;
      if (keyword != "components:" || !(in >> n) || n < 1 || n > 63 || (in >> extra))
        fail("expected 'components: <n>'");
      pres.components = n;
      pres.longitudes.assign(n, Word());
      seen.assign(n, false);
      have_header = true;
      continue;
    }
    int j = 0;
    std::string colon;
    if (keyword != "longitude" || !(in >> j)) fail("expected 'longitude <j>: <word>'");
    std::string rest;
    std::getline(in, rest);
    std::size_t c = rest.find_first_not_of(" \t");
    if (c == std::string_view::npos || rest[c] != ':') fail("expected ':' after the component number");
    rest = rest.substr(c + 1);
    if (j < 1 || j > pres.components) fail("component number out of range");
    if (seen[j - 1]) fail("duplicate longitude for component " + std::to_string(j));
    try {
      pres.longitudes[j - 1] = parse_word(rest, Alphabet::numbered(pres.components));
    } catch (const UnknownGeneratorError& e) {
      throw UnknownGeneratorError(e.generator(), line_no);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    seen[j - 1] = true;
  }
  if (!have_header) throw ParseError("empty link file", 0);
  for (int j = 1; j <= pres.components; ++j)
    if (!seen[j - 1]) {
      line_no = 0;
      fail("missing longitude for component " + std::to_string(j));
    }
  return pres;
}

inline LinkPresentation read_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open link file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_link_text(buf.str(), path);
}

}  // namespace milnor
