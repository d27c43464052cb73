#include "cremona/verify_suite.hpp"

#include <functional>

#include "cremona/centralizer.hpp"
#include "cremona/error.hpp"
#include "cremona/nagata.hpp"
#include "cremona/sampling.hpp"
#include "cremona/text.hpp"

namespace cremona::suite {

namespace {

using centralizer::Decomposition;
using nagata::standard_objects;

// Returns an empty string on success, otherwise a description of the failure.
using Check = std::function<std::string()>;

std::string nagata_formula() {
  const auto& so = standard_objects();
  const Polynomial x = Polynomial::variable(3, 0);
  const Polynomial y = Polynomial::variable(3, 1);
  const Polynomial z = Polynomial::variable(3, 2);
  const Polynomial& p = so.p;
  const PolyMap displayed({x + y * p + Rational(1, 2) * z * p * p, y + z * p, z});
  const PolyMap computed(exp_map(so.D.scaled(p)));
  if (!(computed == displayed)) return "exp(pD) = " + text::format_map(computed);
  if (total_degree(computed[0]) != 5u || total_degree(computed[1]) != 3u ||
      total_degree(computed[2]) != 1u) {
    return "component degrees differ from (5, 3, 1)";
  }
  return {};
}

std::string kernel_fact(const SuiteOptions& opt, sampling::Rng& rng) {
  const auto& so = standard_objects();
  if (!apply(so.D, so.p).is_zero()) return "D(p) != 0";
  for (std::size_t i = 0; i < opt.kernel_samples; ++i) {
    const KernelPolynomial c = sampling::random_kernel_polynomial(rng, 4, 5);
    const Polynomial f = c.expand();
    if (!apply(so.D, f).is_zero()) return "D(c(z, p)) != 0 for c = " + text::format_kernel(c);
    const KernelPolynomial back = kernel_coordinates(f);
    if (!(back == c)) {
      return "kernel_coordinates(" + text::format_kernel(c) + ") = " + text::format_kernel(back);
    }
  }
  return {};
}

std::string describe(const Decomposition& d) {
  return "(alpha = " + d.alpha.str() + ", w = " + text::format_polynomial(d.w) +
         ", q = " + text::format_kernel(d.q) + ")";
}

std::string decomposition_round_trips(const SuiteOptions& opt, sampling::Rng& rng) {
  const Decomposition nagata{Rational(1), Polynomial(3), KernelPolynomial::P()};
  const Decomposition got = centralizer::decompose(standard_objects().h);
  if (!(got == nagata)) return "decompose(h) = " + describe(got);
  for (std::size_t i = 0; i < opt.decomposition_samples; ++i) {
    const Decomposition d = sampling::random_decomposition(rng);
    const PolyMap f = centralizer::reconstruct(d);
    const Decomposition back = centralizer::decompose(f);
    if (!(back == d)) return "decompose(reconstruct" + describe(d) + ") = " + describe(back);
    if (!(centralizer::reconstruct(back) == f)) {
      return "reconstruct(decompose(f)) != f for " + describe(d);
    }
  }
  return {};
}

std::string semidirect_normality(const SuiteOptions& opt, sampling::Rng& rng) {
  for (std::size_t i = 0; i < opt.normality_samples; ++i) {
    const Decomposition sample = sampling::random_decomposition(rng);
    const PolyMap c = nagata::scalar_element(sample.alpha);
    const PolyMap c_inv = nagata::scalar_element(sample.alpha.inverse());
    const PolyMap f2 = nagata::f2_element(sample.w);
    const PolyMap f2_inv = nagata::f2_element(-sample.w);
    const PolyMap f1 = nagata::exp_kernel(sample.q.expand());

    const auto in_f2 = centralizer::decompose(compose(c, compose(f2, c_inv)));
    if (!in_f2.alpha.is_one() || !in_f2.q.is_zero()) {
      return "c F2 c^-1 leaves F2: " + describe(in_f2);
    }
    const auto c_f1 = centralizer::decompose(compose(c, compose(f1, c_inv)));
    if (!c_f1.alpha.is_one() || !c_f1.w.is_zero()) {
      return "c F1 c^-1 leaves F1: " + describe(c_f1);
    }
    const auto f2_f1 = centralizer::decompose(compose(f2, compose(f1, f2_inv)));
    if (!f2_f1.alpha.is_one() || !f2_f1.w.is_zero()) {
      return "f2 F1 f2^-1 leaves F1: " + describe(f2_f1);
    }
  }
  return {};
}

std::string torus_characters(const SuiteOptions& opt, sampling::Rng& rng) {
  for (std::uint32_t k = 0; k <= 3; ++k) {
    for (std::size_t i = 0; i < opt.character_samples; ++i) {
      const auto t = sampling::random_torus_element(rng);
      const Rational s = sampling::random_nonzero_rational(rng);
      const nagata::UnipotentElement u(nagata::k_monomial(k), s);
      const Rational lambda = nagata::character_lambda({k}, t);
      const nagata::UnipotentElement expected(nagata::k_monomial(k), lambda * s);
      const PolyMap symbolic = compose(t.inverse().to_map(), compose(u.to_map(), t.to_map()));
      if (!(nagata::torus_conjugate(t, u) == expected) || !(symbolic == expected.to_map())) {
        return "k = " + std::to_string(k) + ", beta = " + t.beta().str() +
               ", gamma = " + t.gamma().str() + ", s = " + s.str();
      }
    }
  }
  return {};
}

std::string flow_commutation(const SuiteOptions& opt, sampling::Rng& rng) {
  const auto& so = standard_objects();
  if (!centralizer::commutes_with_formal_flow(so.h)) return "h does not commute with exp(tD)";
  if (!centralizer::commutes_with_formal_flow(so.h_prime)) return "h' does not commute with exp(tD)";
  const std::size_t samples = std::max<std::size_t>(1, opt.decomposition_samples / 4);
  for (std::size_t i = 0; i < samples; ++i) {
    const Decomposition d = sampling::random_decomposition(rng);
    if (!centralizer::commutes_with_formal_flow(centralizer::reconstruct(d))) {
      return "reconstruct" + describe(d) + " does not commute with exp(tD)";
    }
  }
  return {};
}

std::string group_laws(const SuiteOptions& opt, sampling::Rng& rng) {
  const PolyMap id = PolyMap::identity(3);
  for (std::size_t i = 0; i < opt.word_samples; ++i) {
    const AutWord w = sampling::random_tame_word(rng, 3, 6, 3);
    const AutWord inv = invert_word(w);
    const std::size_t cut = w.factors().size() / 2;
    const AutWord left(3, {w.factors().begin(), w.factors().begin() + static_cast<long>(cut)});
    const AutWord right(3, {w.factors().begin() + static_cast<long>(cut), w.factors().end()});
    const PolyMap ew = evaluate(w);
    if (!(compose(evaluate(left), evaluate(right)) == ew)) {
      return "evaluate is not multiplicative on\n" + text::format_word(w);
    }
    if (!(evaluate(w.concat(inv)) == id) || !(evaluate(inv.concat(w)) == id)) {
      return "invert_word is not a two-sided inverse on\n" + text::format_word(w);
    }
  }
  return {};
}

std::string parser_round_trip(const SuiteOptions& opt, sampling::Rng& rng) {
  for (std::size_t i = 0; i < opt.parser_samples; ++i) {
    const Polynomial p = sampling::random_polynomial(rng, 3, 6, 8);
    const std::string printed = text::format_polynomial(p);
    if (!(text::parse_polynomial(printed, 3) == p)) return "round trip fails on " + printed;
    if (text::format_polynomial(p) != printed) return "formatter is not deterministic";
  }
  return {};
}

std::string negative_controls() {
  const auto& so = standard_objects();
  const Polynomial x = Polynomial::variable(3, 0);
  const Polynomial y = Polynomial::variable(3, 1);
  const Polynomial z = Polynomial::variable(3, 2);
  if (centralizer::is_in_centralizer(PolyMap({x + y, y, z}))) return "(x+y, y, z) in Cent(h')";
  try {
    (void)nagata::lambda_degree(so.p + so.p * so.p * z * z);
    return "lambda_degree(p + p^2 z^2) succeeded";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotMonomialInK) return std::string("unexpected error ") + e.what();
  }
  const auto report = is_locally_nilpotent(Derivation({x, Polynomial(3), Polynomial(3)}));
  if (report.verdict != NilpotencyVerdict::NotNilpotentWitness || !report.witness) {
    return "x d/dx was not refuted";
  }
  if (nagata::exp_kernel(Rational(2) * z) == nagata::exp_kernel(z)) return "exp(2zD) = exp(zD)";
  return {};
}

}  // namespace

std::vector<SuiteLine> run_verification_suite(const SuiteOptions& options) {
  sampling::Rng rng(options.seed);
  std::vector<std::pair<std::string, Check>> checks;
  checks.emplace_back("Nagata automorphism: exp(pD) = (x + y p + 1/2 z p^2, y + z p, z)",
                      [] { return nagata_formula(); });
  checks.emplace_back("kernel: D(p) = 0 and c(z, p) -> c round trips",
                      [&] { return kernel_fact(options, rng); });
  checks.emplace_back("Cent(h') = C x| (F2 x| F1): decompose/reconstruct are inverse",
                      [&] { return decomposition_round_trips(options, rng); });
  checks.emplace_back("semidirect normality of F2 and F1",
                      [&] { return semidirect_normality(options, rng); });
  checks.emplace_back("torus characters lambda_k = (beta gamma)^(2k+1), k <= 3",
                      [&] { return torus_characters(options, rng); });

  std::vector<SuiteLine> lines;
  auto run = [&lines](const std::string& name, const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    SuiteLine line{name, false, {}, {}};
    try {
      line.detail = check();
      line.passed = line.detail.empty();
    } catch (const std::exception& e) {
      line.detail = std::string("exception: ") + e.what();
    }
    line.elapsed = std::chrono::steady_clock::now() - start;
    lines.push_back(std::move(line));
  };
  for (const auto& [name, check] : checks) run(name, check);

  {
    const auto start = std::chrono::steady_clock::now();
    const auto report = centralizer::verify_theorem_identities();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    for (const auto& c : report.checks) {
      lines.push_back(SuiteLine{c.name, c.passed, c.detail,
                                elapsed / static_cast<double>(report.checks.size())});
    }
  }

  run("every sampled centralizer element commutes with exp(tD)",
      [&] { return flow_commutation(options, rng); });
  run("tame words: evaluate is a homomorphism, invert_word is a two-sided inverse",
      [&] { return group_laws(options, rng); });
  run("parser: parse(format(p)) = p", [&] { return parser_round_trip(options, rng); });
  run("negative controls", [] { return negative_controls(); });
  return lines;
}

}  // namespace cremona::suite
