#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/autgroup.hpp"
#include "cremona/derivation.hpp"
#include "cremona/polynomial.hpp"

// Text grammar for polynomials and maps.
//
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := "-" factor | base ("^" uint)?
//   base     := rational | var | "(" expr ")"
//   rational := int ("/" uint)?
//   map      := "(" expr ("," expr)* ")"
//
// Multiplication is always explicit ("2*x"), and "^" binds tighter than
// unary minus, so "-y^2" is -(y^2).
namespace cremona::text {

/// x, y, z for n = 3; x1, ..., xn otherwise.
std::vector<std::string> default_variable_names(std::size_t dimension);

Polynomial parse_polynomial(std::string_view source, std::size_t dimension,
                            const std::vector<std::string>& names = {});

PolyMap parse_map(std::string_view source, std::size_t dimension,
                  const std::vector<std::string>& names = {});

/// Terms in increasing total degree, lexicographic (x before y before z)
/// within a degree; coefficients as reduced fractions.
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names = {});

std::string format_map(const PolyMap& m, const std::vector<std::string>& names = {});

/// Formats c(Z, P).
std::string format_kernel(const KernelPolynomial& q);

/// Word files list one generator per line, in functional order:
///   affine <n*n matrix entries, row-major> <n translation entries>
///   triangular (e1, ..., en)
///   exp <scale> <q-expr>        (exp(scale * q * D), D the Nagata derivation)
///   scalar <alpha>
/// Blank lines and lines starting with '#' are ignored.
AutWord parse_word(std::string_view source, std::size_t dimension);

std::string format_word(const AutWord& w);

}  // namespace cremona::text
