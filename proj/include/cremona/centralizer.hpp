#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/autgroup.hpp"
#include "cremona/derivation.hpp"

namespace cremona::centralizer {

/// f = (alpha x, alpha y, alpha z) o exp(w E) o exp(q(z, p) D).
struct Decomposition {
  Rational alpha{1};
  Polynomial w{3};
  KernelPolynomial q;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// f o h' = h' o f with h' = exp(D).
bool is_in_centralizer(const PolyMap& f);

/// Splits a centralizer element into its scalar, F2 and F1 parts.
///
/// Throws NotInCentralizer when f does not commute with h'. Any later
/// failure is MalformedCentralizerElement: a map that commutes with h' but
/// does not have the shape (r + s x + q y, s y + q z, s z) with r, q in
/// ker D would contradict the structure theorem, so callers should treat it
/// as a bug rather than as bad input.
Decomposition decompose(const PolyMap& f);

PolyMap reconstruct(const Decomposition& d);

/// Centralizer membership plus commutation with (a^3 x, a y, a^-1 z) for a
/// formal parameter a.
bool is_in_H(const PolyMap& f);

/// f o exp(tD) = exp(tD) o f in Q[x, y, z, t].
bool commutes_with_formal_flow(const PolyMap& f);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::optional<IdentityCheck> first_failure() const;
};

/// Exact checks of the identity chain behind the fixed-point argument for h:
///   (i)   (x-1, y, z) o exp(pD) o (x+1, y, z) = exp((p+z)D) = exp(pD) o exp(zD)
///   (ii)  exp(a(p+z)D) = exp(apD) o exp(azD), a formal
///   (iii) exp(azD) = exp(zD) holds at a = 1 and forces a = 1
///   (iv)  torus conjugation rescales exp(s p (pz^2)^k D) by lambda_k, k <= 3
/// The checks are independent and run concurrently.
IdentityReport verify_theorem_identities();

}  // namespace cremona::centralizer
