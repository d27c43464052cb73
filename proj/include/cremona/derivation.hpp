#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

inline constexpr std::size_t kDefaultIterationBound = 64;

/// A derivation of Q[x1..xn], stored as its values on the generators.
/// D(f) = sum_i D(x_i) * df/dx_i.
class Derivation {
 public:
  explicit Derivation(std::vector<Polynomial> images);

  static Derivation zero(std::size_t dimension);
  /// d/dx_index.
  static Derivation partial(std::size_t dimension, std::size_t index);

  std::size_t dimension() const { return images_.size(); }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

  /// q*D. Stays locally nilpotent whenever D is and D(q) = 0.
  Derivation scaled(const Polynomial& q) const;
  /// Extends to a larger ring, sending the new variables to zero.
  Derivation embed(std::size_t new_dimension) const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> images_;
};

Polynomial apply(const Derivation& d, const Polynomial& f);

/// Least m <= bound with D^m(f) = 0; throws BoundExceeded otherwise.
std::size_t nilpotency_index(const Derivation& d, const Polynomial& f,
                             std::size_t bound = kDefaultIterationBound);

enum class NilpotencyVerdict { LocallyNilpotentUpToBound, NotNilpotentWitness, Inconclusive };

struct NilpotencyWitness {
  std::size_t variable;
  // D^iteration(x_variable) is a nonzero multiple of D^cycle_start(x_variable).
  std::size_t iteration;
  std::size_t cycle_start;
};

struct NilpotencyReport {
  NilpotencyVerdict verdict;
  std::optional<NilpotencyWitness> witness;
};

NilpotencyReport is_locally_nilpotent(const Derivation& d,
                                      std::size_t bound = kDefaultIterationBound);

/// Components sum_k D^k(x_i)/k! of exp(D).
std::vector<Polynomial> exp_map(const Derivation& d, std::size_t bound = kDefaultIterationBound);

/// exp(tD) with t adjoined as variable n of an (n+1)-variable ring.
std::vector<Polynomial> formal_flow(const Derivation& d,
                                    std::size_t bound = kDefaultIterationBound);

/// An element c(Z, P) of the ring Q[Z, P]; Z is variable 0, P is variable 1.
/// Stands for c(z, xz - y^2/2), an element of the kernel of the Nagata
/// derivation z d/dy + y d/dx.
class KernelPolynomial {
 public:
  static constexpr std::size_t kZ = 0;
  static constexpr std::size_t kP = 1;

  KernelPolynomial() : coords_(2) {}
  explicit KernelPolynomial(Polynomial coords);

  static KernelPolynomial Z();
  static KernelPolynomial P();
  static KernelPolynomial monomial(std::uint32_t z_power, std::uint32_t p_power,
                                   const Rational& c = Rational(1));

  const Polynomial& coords() const { return coords_; }
  bool is_zero() const { return coords_.is_zero(); }

  /// c(z, xz - y^2/2) in Q[x, y, z].
  Polynomial expand() const;

  friend KernelPolynomial operator+(const KernelPolynomial& a, const KernelPolynomial& b) {
    return KernelPolynomial(a.coords_ + b.coords_);
  }
  friend KernelPolynomial operator*(const Rational& c, const KernelPolynomial& a) {
    return KernelPolynomial(c * a.coords_);
  }
  friend bool operator==(const KernelPolynomial&, const KernelPolynomial&) = default;

 private:
  Polynomial coords_;
};

/// Rewrites f in Q[x, y, z] as c(z, p) with p = xz - y^2/2. Throws
/// NotInKernelRing when f is not of that form.
KernelPolynomial kernel_coordinates(const Polynomial& f);

}  // namespace cremona
