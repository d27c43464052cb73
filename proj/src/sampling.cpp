#include "cremona/sampling.hpp"

#include <array>

#include "cremona/error.hpp"

namespace cremona::sampling {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Monomial random_monomial(Rng& rng, std::size_t dimension, std::uint32_t max_degree) {
  const auto degree = static_cast<std::uint32_t>(uniform(rng, 0, max_degree));
  std::vector<std::uint32_t> e(dimension, 0);
  for (std::uint32_t k = 0; k < degree; ++k) {
    ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(dimension) - 1))];
  }
  return Monomial(std::move(e));
}

}  // namespace

Rational random_rational(Rng& rng, long max_numerator, long max_denominator) {
  return Rational(uniform(rng, -max_numerator, max_numerator), uniform(rng, 1, max_denominator));
}

Rational random_nonzero_rational(Rng& rng, long max_numerator, long max_denominator) {
  const long n = uniform(rng, 1, max_numerator) * (uniform(rng, 0, 1) == 0 ? -1 : 1);
  return Rational(n, uniform(rng, 1, max_denominator));
}

Polynomial random_polynomial(Rng& rng, std::size_t dimension, std::uint32_t max_degree,
                             std::size_t max_terms) {
  Polynomial::TermMap terms;
  const auto count = uniform(rng, 0, static_cast<long>(max_terms));
  for (long i = 0; i < count; ++i) {
    terms.insert_or_assign(random_monomial(rng, dimension, max_degree), random_rational(rng));
  }
  return Polynomial(dimension, std::move(terms));
}

Polynomial random_z_polynomial(Rng& rng, std::uint32_t max_degree) {
  Polynomial::TermMap terms;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    if (uniform(rng, 0, 1) == 0) continue;
    terms.emplace(Monomial{0, 0, d}, random_rational(rng));
  }
  return Polynomial(3, std::move(terms));
}

KernelPolynomial random_kernel_polynomial(Rng& rng, std::uint32_t max_degree,
                                          std::size_t max_terms) {
  return KernelPolynomial(random_polynomial(rng, 2, max_degree, max_terms));
}

centralizer::Decomposition random_decomposition(Rng& rng) {
  static const std::array<Rational, 7> alphas{Rational(1),  Rational(-1), Rational(2),
                                              Rational(-2), Rational(3),  Rational(-3),
                                              Rational(1, 2)};
  centralizer::Decomposition d;
  d.alpha = alphas[static_cast<std::size_t>(uniform(rng, 0, alphas.size() - 1))];
  d.w = random_z_polynomial(rng, 4);
  d.q = random_kernel_polynomial(rng, 3);
  return d;
}

nagata::TorusElement random_torus_element(Rng& rng) {
  return nagata::TorusElement(random_nonzero_rational(rng), random_nonzero_rational(rng));
}

Generator random_tame_generator(Rng& rng, std::size_t dimension, std::uint32_t tail_degree) {
  if (uniform(rng, 0, 1) == 0) {
    while (true) {
      std::vector<std::vector<Rational>> m(dimension, std::vector<Rational>(dimension));
      for (auto& row : m) {
        for (auto& v : row) v = random_rational(rng, 2, 2);
      }
      std::vector<Rational> b(dimension);
      for (auto& v : b) v = random_rational(rng, 2, 2);
      try {
        return AffineGenerator(std::move(m), std::move(b));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidGenerator) throw;
      }
    }
  }
  std::vector<Polynomial> comps;
  comps.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    // Tail in x_{i+1}..x_n: sample in the trailing variables, then shift.
    const std::size_t free_vars = dimension - i - 1;
    Polynomial tail(dimension);
    if (free_vars > 0) {
      const Polynomial small = random_polynomial(rng, free_vars, tail_degree, 3);
      Polynomial::TermMap shifted;
      for (const auto& [m, c] : small.terms()) {
        std::vector<std::uint32_t> e(dimension, 0);
        for (std::size_t j = 0; j < free_vars; ++j) e[i + 1 + j] = m[j];
        shifted.emplace(Monomial(std::move(e)), c);
      }
      tail = Polynomial(dimension, std::move(shifted));
    } else {
      tail = Polynomial::constant(dimension, random_rational(rng));
    }
    comps.push_back(Polynomial::term(Monomial::variable(dimension, i),
                                     random_nonzero_rational(rng, 2, 2)) +
                    tail);
  }
  return TriangularGenerator(std::move(comps));
}

AutWord random_tame_word(Rng& rng, std::size_t dimension, std::size_t max_length,
                         std::uint32_t tail_degree) {
  const auto length = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_length)));
  std::vector<Generator> factors;
  factors.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    factors.push_back(random_tame_generator(rng, dimension, tail_degree));
  }
  return AutWord(dimension, std::move(factors));
}

}  // namespace cremona::sampling
