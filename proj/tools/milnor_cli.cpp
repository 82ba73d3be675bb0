// Command-line front end: Magnus expansions, Milnor-group equality,
// mu-invariants and homotopy-triviality of link presentations, and the
// relative-slice obstruction verifier.
//
// Exit codes: 0 success / equal / trivial / obstructed; 1 distinct /
// essential / vanishing witness; 2 syntax or file-format errors; 3 unknown
// generators and index violations.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "milnor/milnor.hpp"

namespace {

constexpr int kExitDistinct = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitIndex = 3;

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (int i : v) {
    if (!out.empty()) out += sep;
    out += std::to_string(i);
  }
  return out;
}

int cmd_expand(const std::string& expr, int vars) {
  milnor::Word w = milnor::parse_word(expr, milnor::Alphabet::numbered(vars));
  std::cout << milnor::expand(w, vars).str() << '\n';
  return 0;
}

int cmd_equal(const std::string& lhs, const std::string& rhs, int vars) {
  const milnor::Alphabet alphabet = milnor::Alphabet::numbered(vars);
  bool equal = milnor::mf_equal(milnor::parse_word(lhs, alphabet),
                                milnor::parse_word(rhs, alphabet), vars);
  std::cout << (equal ? "equal" : "distinct") << '\n';
  return equal ? 0 : kExitDistinct;
}

int cmd_mu(const std::string& path, const std::vector<int>& seq, int target) {
  const milnor::LinkPresentation pres = milnor::read_link_file(path);
  std::cout << milnor::mu(pres, seq, target) << '\n';
  return 0;
}

int cmd_trivial(const std::string& path) {
  const milnor::LinkPresentation pres = milnor::read_link_file(path);
  if (auto witness = milnor::essential_witness(pres)) {
    std::cout << "essential (mu[" << join(witness->seq, ',') << ";" << witness->target
              << "] = " << witness->value << ")\n";
    return kExitDistinct;
  }
  std::cout << "homotopically-trivial\n";
  return 0;
}

int cmd_verify_ab(bool standard, const std::string& format, const std::string& l1_expr) {
  const milnor::Word l1 = l1_expr.empty()
                              ? milnor::obstruction::build_l1()
                              : milnor::parse_word(l1_expr, milnor::obstruction::l1_alphabet());
  const auto report = milnor::obstruction::verify({.standard = standard}, l1);
  std::cout << (format == "machine" ? milnor::obstruction::report_machine(report)
                                    : milnor::obstruction::report_text(report));
  return report.verdict == milnor::obstruction::Verdict::nonzero_constant ? 0 : kExitDistinct;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Milnor-group calculus: Magnus expansions, mu-invariants,\n"
               "and the relative-slice obstruction verifier"};
  app.require_subcommand(1);

  std::string expr, lhs, rhs, link_path, format = "text", l1_expr;
  std::vector<int> seq;
  int vars = 0, target = 0;
  bool standard = true;

  auto* expand = app.add_subcommand("expand", "Magnus expansion of a word in the reduced ring");
  expand->add_option("expr", expr, "word expression, e.g. \"[m1,m2]\"")->required();
  expand->add_option("--vars", vars, "number of meridians m1..mn")->required()->check(CLI::Range(1, 63));

  auto* equal = app.add_subcommand("equal", "decide equality in the free Milnor group");
  equal->add_option("lhs", lhs, "first word")->required();
  equal->add_option("rhs", rhs, "second word")->required();
  equal->add_option("--vars", vars, "number of meridians m1..mn")->required()->check(CLI::Range(1, 63));

  auto* mu = app.add_subcommand("mu", "mu-invariant of a link presentation");
  mu->add_option("--link", link_path, "link presentation file")->required();
  mu->add_option("--seq", seq, "distinct meridian indices, e.g. 1,2")->required()->delimiter(',');
  mu->add_option("--target", target, "component whose longitude is expanded")->required();

  auto* trivial = app.add_subcommand("trivial", "homotopy-triviality verdict for a link presentation");
  trivial->add_option("--link", link_path, "link presentation file")->required();

  auto* verify = app.add_subcommand(
      "verify-ab", "expand l1 = [m_a m2,[[m3,m_b m4],[m5,m6 m_c]]] with generic handle\n"
                   "meridians and report whether the x2.x3.x4.x6.x5 coefficient can cancel");
  verify->add_flag("--standard,!--no-standard", standard,
                   "pin the linear coefficients x2 of m_a, x4 of m_b, x6 of m_c to zero");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  verify->add_option("--l1-expr", l1_expr, "alternative word over m2..m6, m_a, m_b, m_c");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) return cmd_expand(expr, vars);
    if (*equal) return cmd_equal(lhs, rhs, vars);
    if (*mu) return cmd_mu(link_path, seq, target);
    if (*trivial) return cmd_trivial(link_path);
    if (*verify) return cmd_verify_ab(standard, format, l1_expr);
  } catch (const milnor::UnknownGeneratorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIndex;
  } catch (const milnor::IndexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIndex;
  } catch (const milnor::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSyntax;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSyntax;
  }
  return 0;
}
