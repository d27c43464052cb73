#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Exponent vector of a single term; its length is the ambient dimension.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dimension) : exponents_(dimension, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exponents) : exponents_(exponents) {}
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }
  std::uint64_t degree() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Canonical term order: increasing total degree, then lexicographic with
/// x1 > x2 > ... > xn inside a degree. Iteration order of a Polynomial is
/// also its printed order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Values are immutable; zero coefficients are never stored, so
/// equality of term maps is equality of polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  /// The zero polynomial in `dimension` variables.
  explicit Polynomial(std::size_t dimension);
  /// Drops zero coefficients; throws DimensionMismatch on a bad monomial.
  Polynomial(std::size_t dimension, TermMap terms);

  static Polynomial constant(std::size_t dimension, const Rational& c);
  static Polynomial variable(std::size_t dimension, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);
  static Polynomial from_terms(
      std::size_t dimension,
      std::initializer_list<std::pair<Rational, Monomial>> terms);

  std::size_t dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Highest power of variable `index` occurring in any term; 0 for zero.
  std::uint32_t degree_in(std::size_t index) const;
  bool depends_on(std::size_t index) const { return degree_in(index) > 0; }

  /// Coefficient of var^k, as a polynomial in the same ring (var-free).
  Polynomial coefficient_of(std::size_t index, std::uint32_t power) const;

  /// Appends `extra` variables that do not occur in this polynomial.
  Polynomial embed(std::size_t new_dimension) const;
  /// Drops trailing variables; they must not occur.
  Polynomial restrict_to(std::size_t new_dimension) const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial pow(std::uint32_t exponent) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Rational& c) { return c * f; }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.dimension_ == g.dimension_ && f.terms_ == g.terms_;
  }

 private:
  std::size_t dimension_;
  TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

/// Replaces variable i of `f` by images[i]. All images share one dimension,
/// which becomes the dimension of the result.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

Polynomial partial_derivative(const Polynomial& f, std::size_t index);

/// Maximum exponent sum over the terms; nullopt stands for minus infinity
/// (the zero polynomial).
std::optional<std::uint64_t> total_degree(const Polynomial& f);

/// The variables x1..xn of an n-dimensional ring.
std::vector<Polynomial> coordinate_images(std::size_t dimension);

}  // namespace cremona
