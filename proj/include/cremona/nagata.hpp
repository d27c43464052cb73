#pragma once

#include <cstdint>

#include "cremona/autgroup.hpp"
#include "cremona/derivation.hpp"

namespace cremona::nagata {

// Variable indices of Q[x, y, z].
inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kY = 1;
inline constexpr std::size_t kZ = 2;

/// The fixed cast in dimension 3:
///   D  = z d/dy + y d/dx       E = d/dx
///   p  = xz - y^2/2            h = exp(pD) (Nagata)      h' = exp(D)
struct StandardObjects {
  Derivation D;
  Derivation E;
  Polynomial p;
  PolyMap h;
  PolyMap h_prime;
};

const StandardObjects& standard_objects();

/// exp(q D) for q in ker D.
PolyMap exp_kernel(const Polynomial& q);

/// exp(w E) = (x + w(z), y, z); w must lie in Q[z] = ker E n ker D.
PolyMap f2_element(const Polynomial& w);

/// (alpha x, alpha y, alpha z).
PolyMap scalar_element(const Rational& alpha);

/// True iff q = c(z, p) with c in P * Q[P Z^2].
bool is_in_K(const Polynomial& q);

/// (beta^2/gamma x, beta y, gamma z).
class TorusElement {
 public:
  TorusElement(Rational beta, Rational gamma);

  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }

  PolyMap to_map() const;
  TorusElement inverse() const { return TorusElement(beta_.inverse(), gamma_.inverse()); }

 private:
  Rational beta_;
  Rational gamma_;
};

/// exp(scale * q(z, p) * D).
class UnipotentElement {
 public:
  explicit UnipotentElement(KernelPolynomial q, Rational scale = Rational(1))
      : q_(std::move(q)), scale_(std::move(scale)) {}

  const KernelPolynomial& q() const { return q_; }
  const Rational& scale() const { return scale_; }
  /// scale * q, the element of ker D that determines the map.
  KernelPolynomial generator() const { return scale_ * q_; }

  PolyMap to_map() const;

  /// Two representations are equal when they generate the same map.
  friend bool operator==(const UnipotentElement& a, const UnipotentElement& b) {
    return a.generator() == b.generator();
  }

 private:
  KernelPolynomial q_;
  Rational scale_;
};

struct CharacterIndex {
  std::uint32_t k = 0;
};

/// lambda_k(t) = (beta gamma)^(2k+1).
Rational character_lambda(CharacterIndex k, const TorusElement& t);

/// The conjugate t^-1 o u o t, computed monomial by monomial in kernel
/// coordinates: Z^a P^b picks up beta^(2b-1) gamma^(a+1). On
/// exp(s p (pz^2)^k D) this is multiplication of s by lambda_k(t).
UnipotentElement torus_conjugate(const TorusElement& t, const UnipotentElement& u);

/// exp(qD) -> exp(a q D).
UnipotentElement scale_unipotent(const Rational& a, const UnipotentElement& u);

/// k with q a nonzero multiple of p (pz^2)^k; throws NotMonomialInK.
CharacterIndex lambda_degree(const Polynomial& q);

/// p (pz^2)^k in kernel coordinates, i.e. Z^(2k) P^(k+1).
KernelPolynomial k_monomial(std::uint32_t k);

}  // namespace cremona::nagata
