#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cremona/derivation.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// An explicit polynomial map a -> (f1(a), ..., fn(a)). No invertibility
/// promise is attached; automorphisms are built as words of generators.
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial> components);

  static PolyMap identity(std::size_t dimension);

  std::size_t dimension() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }

  /// Applies the map to a point.
  std::vector<Rational> operator()(std::span<const Rational> point) const;

  /// Same map on a larger ring, acting as the identity on the new variables.
  PolyMap embed(std::size_t new_dimension) const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// (f o g)(a) = f(g(a)); component i is f_i(g_1, ..., g_n).
PolyMap compose(const PolyMap& f, const PolyMap& g);

bool commutes(const PolyMap& f, const PolyMap& g);

/// Invertible affine map x -> M x + b.
class AffineGenerator {
 public:
  AffineGenerator(std::vector<std::vector<Rational>> matrix, std::vector<Rational> translation);

  static AffineGenerator translation(std::size_t dimension, std::size_t index,
                                     const Rational& amount);

  std::size_t dimension() const { return translation_.size(); }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  const std::vector<Rational>& translation() const { return translation_; }

  PolyMap to_map() const;
  AffineGenerator inverse() const;

  friend bool operator==(const AffineGenerator&, const AffineGenerator&) = default;

 private:
  std::vector<std::vector<Rational>> matrix_;
  std::vector<Rational> translation_;
};

/// Component i is c_i x_i + h_i(x_{i+1}, ..., x_n) with c_i != 0.
class TriangularGenerator {
 public:
  explicit TriangularGenerator(std::vector<Polynomial> components);

  std::size_t dimension() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }

  PolyMap to_map() const { return PolyMap(components_); }
  TriangularGenerator inverse() const;

  friend bool operator==(const TriangularGenerator&, const TriangularGenerator&) = default;

 private:
  std::vector<Polynomial> components_;
};

/// exp(scale * q * D) with D locally nilpotent and D(q) = 0.
class ExponentialGenerator {
 public:
  ExponentialGenerator(Polynomial q, Derivation d, Rational scale = Rational(1));

  std::size_t dimension() const { return derivation_.dimension(); }
  const Polynomial& q() const { return q_; }
  const Derivation& derivation() const { return derivation_; }
  const Rational& scale() const { return scale_; }

  PolyMap to_map() const;
  ExponentialGenerator inverse() const;

  friend bool operator==(const ExponentialGenerator&, const ExponentialGenerator&) = default;

 private:
  Polynomial q_;
  Derivation derivation_;
  Rational scale_;
};

/// x -> alpha x with alpha != 0.
class ScalarGenerator {
 public:
  ScalarGenerator(std::size_t dimension, Rational alpha);

  std::size_t dimension() const { return dimension_; }
  const Rational& alpha() const { return alpha_; }

  PolyMap to_map() const;
  ScalarGenerator inverse() const { return ScalarGenerator(dimension_, alpha_.inverse()); }

  friend bool operator==(const ScalarGenerator&, const ScalarGenerator&) = default;

 private:
  std::size_t dimension_;
  Rational alpha_;
};

using Generator =
    std::variant<AffineGenerator, TriangularGenerator, ExponentialGenerator, ScalarGenerator>;

std::size_t dimension_of(const Generator& g);
PolyMap to_map(const Generator& g);
Generator inverse(const Generator& g);

/// Factors in functional order: the word g1 g2 ... gm denotes g1 o g2 o ... o gm.
class AutWord {
 public:
  explicit AutWord(std::size_t dimension, std::vector<Generator> factors = {});

  std::size_t dimension() const { return dimension_; }
  const std::vector<Generator>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  AutWord concat(const AutWord& other) const;

  friend bool operator==(const AutWord&, const AutWord&) = default;

 private:
  std::size_t dimension_;
  std::vector<Generator> factors_;
};

PolyMap evaluate(const AutWord& w);
AutWord invert_word(const AutWord& w);

enum class TameShape { Affine, Triangular, Neither };

/// Shape of a single map as a tame generator. A map that is both affine and
/// triangular is reported as Affine.
TameShape is_tame_generator(const PolyMap& m);

}  // namespace cremona
