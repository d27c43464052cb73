#include "cremona/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cremona/centralizer.hpp"
#include "cremona/nagata.hpp"
#include "cremona/text.hpp"
#include "cremona/verify_suite.hpp"

namespace cremona::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::ArityMismatch:
      return kParseFailure;
    default:
      return kDomainFailure;
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read word file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with polynomial automorphisms of affine 3-space", "cremona"};
  app.require_subcommand(1);

  std::size_t dim = 3;
  std::string expr;
  std::string map_a;
  std::string map_b;
  std::string word_path;
  std::string q_expr;
  std::string derivation_text;
  std::uint32_t k = 0;
  std::string beta;
  std::string gamma;
  std::uint64_t seed = suite::SuiteOptions{}.seed;
  bool timings = false;

  auto* parse = app.add_subcommand("parse", "Parse a polynomial and print its canonical form");
  parse->add_option("--dim", dim, "Number of variables")->check(CLI::PositiveNumber);
  parse->add_option("expr", expr)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Print f o g");
  compose_cmd->add_option("--dim", dim)->check(CLI::PositiveNumber);
  compose_cmd->add_option("f", map_a)->required();
  compose_cmd->add_option("g", map_b)->required();

  auto* invert = app.add_subcommand("invert", "Invert a word of generators");
  invert->add_option("--word", word_path, "Word file")->required();
  invert->add_option("--dim", dim)->check(CLI::PositiveNumber);

  auto* exp_cmd = app.add_subcommand("exp", "Print exp(qD)");
  exp_cmd->add_option("--q", q_expr, "Kernel element q")->required();
  exp_cmd->add_option("--derivation", derivation_text, "D as (D(x), D(y), D(z))");

  auto* commutes_cmd = app.add_subcommand("commutes", "Test whether f o g = g o f");
  commutes_cmd->add_option("f", map_a)->required();
  commutes_cmd->add_option("g", map_b)->required();

  auto* kernel = app.add_subcommand("kernel-coords", "Write f as c(z, p)");
  kernel->add_option("expr", expr)->required();

  auto* decompose = app.add_subcommand("decompose", "Split a centralizer element of exp(D)");
  decompose->add_option("map", map_a)->required();

  auto* character = app.add_subcommand("character", "Evaluate lambda_k(beta, gamma)");
  character->add_option("--k", k)->required();
  character->add_option("--beta", beta)->required();
  character->add_option("--gamma", gamma)->required();

  auto* verify = app.add_subcommand("verify-paper", "Run every identity check");
  verify->add_option("--seed", seed);
  verify->add_flag("--timings", timings, "Append the wall time of each check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  }

  try {
    if (parse->parsed()) {
      out << text::format_polynomial(text::parse_polynomial(expr, dim)) << '\n';
    } else if (compose_cmd->parsed()) {
      out << text::format_map(compose(text::parse_map(map_a, dim), text::parse_map(map_b, dim)))
          << '\n';
    } else if (invert->parsed()) {
      const AutWord inverse = invert_word(text::parse_word(read_file(word_path), dim));
      out << text::format_word(inverse) << "# map: " << text::format_map(evaluate(inverse)) << '\n';
    } else if (exp_cmd->parsed()) {
      const Derivation d = derivation_text.empty()
                               ? nagata::standard_objects().D
                               : Derivation(text::parse_map(derivation_text, 3).components());
      out << text::format_map(ExponentialGenerator(text::parse_polynomial(q_expr, 3), d).to_map())
          << '\n';
    } else if (commutes_cmd->parsed()) {
      out << (commutes(text::parse_map(map_a, 3), text::parse_map(map_b, 3)) ? "true" : "false")
          << '\n';
    } else if (kernel->parsed()) {
      out << text::format_kernel(kernel_coordinates(text::parse_polynomial(expr, 3))) << '\n';
    } else if (decompose->parsed()) {
      const auto d = centralizer::decompose(text::parse_map(map_a, 3));
      out << "alpha: " << d.alpha << '\n'
          << "w: " << text::format_polynomial(d.w) << '\n'
          << "q: " << text::format_kernel(d.q) << '\n';
    } else if (character->parsed()) {
      const nagata::TorusElement t(Rational::parse(beta), Rational::parse(gamma));
      out << nagata::character_lambda({k}, t) << '\n';
    } else if (verify->parsed()) {
      suite::SuiteOptions options;
      options.seed = seed;
      const auto lines = suite::run_verification_suite(options);
      const bool ok = std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.passed; });
      for (const auto& line : lines) {
        out << (line.passed ? "PASS  " : "FAIL  ") << line.name;
        if (timings) out << "  [" << line.elapsed.count() << " s]";
        if (!line.passed) out << "\n      " << line.detail;
        out << '\n';
      }
      out << (ok ? "all checks passed" : "verification FAILED") << '\n';
      return ok ? kSuccess : kVerificationFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kSuccess;
}

}  // namespace cremona::cli
