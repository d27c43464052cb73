#pragma once

#include <cstdint>
#include <random>

#include "cremona/autgroup.hpp"
#include "cremona/centralizer.hpp"
#include "cremona/nagata.hpp"

// Seeded random objects for property checks. Coefficients are small
// rationals so that exact arithmetic stays cheap.
namespace cremona::sampling {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long max_numerator = 5, long max_denominator = 3);
Rational random_nonzero_rational(Rng& rng, long max_numerator = 5, long max_denominator = 3);

/// Up to `max_terms` terms of total degree <= max_degree.
Polynomial random_polynomial(Rng& rng, std::size_t dimension, std::uint32_t max_degree,
                             std::size_t max_terms);

/// A polynomial in z alone with degree <= max_degree, as an element of Q[x, y, z].
Polynomial random_z_polynomial(Rng& rng, std::uint32_t max_degree);

/// c(Z, P) of total degree <= max_degree.
KernelPolynomial random_kernel_polynomial(Rng& rng, std::uint32_t max_degree,
                                          std::size_t max_terms = 4);

/// alpha in {+-1, +-2, +-3, 1/2}, w in Q[z] of degree <= 4, q of degree <= 3.
centralizer::Decomposition random_decomposition(Rng& rng);

nagata::TorusElement random_torus_element(Rng& rng);

/// An affine generator with an invertible matrix, or a triangular generator
/// whose tails have degree <= tail_degree.
Generator random_tame_generator(Rng& rng, std::size_t dimension, std::uint32_t tail_degree);

/// Between 1 and max_length tame generators.
AutWord random_tame_word(Rng& rng, std::size_t dimension, std::size_t max_length,
                         std::uint32_t tail_degree);

}  // namespace cremona::sampling
