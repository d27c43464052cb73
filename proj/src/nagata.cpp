#include "cremona/nagata.hpp"

#include "cremona/error.hpp"

namespace cremona::nagata {

namespace {

StandardObjects build_standard_objects() {
  const Polynomial x = Polynomial::variable(3, kX);
  const Polynomial y = Polynomial::variable(3, kY);
  const Polynomial z = Polynomial::variable(3, kZ);
  Derivation D({y, z, Polynomial(3)});
  Derivation E = Derivation::partial(3, kX);
  Polynomial p = x * z - Rational(1, 2) * y * y;
  PolyMap h(exp_map(D.scaled(p)));
  PolyMap h_prime(exp_map(D));
  return StandardObjects{std::move(D), std::move(E), std::move(p), std::move(h),
                         std::move(h_prime)};
}

}  // namespace

const StandardObjects& standard_objects() {
  static const StandardObjects objects = build_standard_objects();
  return objects;
}

PolyMap exp_kernel(const Polynomial& q) {
  const auto& D = standard_objects().D;
  if (!apply(D, q).is_zero()) {
    throw Error(ErrorKind::NotInKernelRing, "exp(qD) needs D(q) = 0");
  }
  return PolyMap(exp_map(D.scaled(q)));
}

PolyMap f2_element(const Polynomial& w) {
  if (w.dimension() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "F2 elements live in dimension 3");
  }
  if (w.depends_on(kX) || w.depends_on(kY)) {
    throw Error(ErrorKind::NotInKerEKerD, "w must be a polynomial in z alone");
  }
  return PolyMap({Polynomial::variable(3, kX) + w, Polynomial::variable(3, kY),
                  Polynomial::variable(3, kZ)});
}

PolyMap scalar_element(const Rational& alpha) { return ScalarGenerator(3, alpha).to_map(); }

bool is_in_K(const Polynomial& q) {
  KernelPolynomial c;
  try {
    c = kernel_coordinates(q);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInKernelRing) return false;
    throw;
  }
  for (const auto& [m, coeff] : c.coords().terms()) {
    const auto a = m[KernelPolynomial::kZ];
    const auto b = m[KernelPolynomial::kP];
    if (b < 1 || a != 2 * (b - 1)) return false;
  }
  return true;
}

TorusElement::TorusElement(Rational beta, Rational gamma)
    : beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (beta_.is_zero() || gamma_.is_zero()) {
    throw Error(ErrorKind::InvalidGenerator, "torus parameters must be nonzero");
  }
}

PolyMap TorusElement::to_map() const {
  return PolyMap({Polynomial::term(Monomial{1, 0, 0}, beta_ * beta_ / gamma_),
                  Polynomial::term(Monomial{0, 1, 0}, beta_),
                  Polynomial::term(Monomial{0, 0, 1}, gamma_)});
}

PolyMap UnipotentElement::to_map() const { return exp_kernel(generator().expand()); }

Rational character_lambda(CharacterIndex k, const TorusElement& t) {
  return (t.beta() * t.gamma()).pow(2L * k.k + 1);
}

UnipotentElement torus_conjugate(const TorusElement& t, const UnipotentElement& u) {
  // Under x -> x beta^2/gamma, y -> beta y, z -> gamma z the invariant p
  // scales by beta^2 and the derivation D by gamma/beta.
  auto weight = [&](std::uint32_t a, std::uint32_t b) {
    return t.beta().pow(2L * b - 1) * t.gamma().pow(static_cast<long>(a) + 1);
  };
  const auto& terms = u.q().coords().terms();
  if (terms.size() == 1) {
    const auto& m = terms.begin()->first;
    return UnipotentElement(u.q(), weight(m[KernelPolynomial::kZ], m[KernelPolynomial::kP]) *
                                       u.scale());
  }
  Polynomial::TermMap out;
  for (const auto& [m, c] : terms) {
    out.emplace(m, weight(m[KernelPolynomial::kZ], m[KernelPolynomial::kP]) * c);
  }
  return UnipotentElement(KernelPolynomial(Polynomial(2, std::move(out))), u.scale());
}

UnipotentElement scale_unipotent(const Rational& a, const UnipotentElement& u) {
  return UnipotentElement(u.q(), a * u.scale());
}

CharacterIndex lambda_degree(const Polynomial& q) {
  if (q.is_zero() || !is_in_K(q)) {
    throw Error(ErrorKind::NotMonomialInK, "q is not a nonzero element of p Q[pz^2]");
  }
  const KernelPolynomial c = kernel_coordinates(q);
  if (c.coords().size() != 1) {
    throw Error(ErrorKind::NotMonomialInK, "q mixes several powers of pz^2");
  }
  return CharacterIndex{c.coords().terms().begin()->first[KernelPolynomial::kP] - 1};
}

KernelPolynomial k_monomial(std::uint32_t k) { return KernelPolynomial::monomial(2 * k, k + 1); }

}  // namespace cremona::nagata
