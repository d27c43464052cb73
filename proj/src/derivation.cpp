#include "cremona/derivation.hpp"

#include <string>

#include "cremona/error.hpp"

namespace cremona {

namespace {

constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;
constexpr std::size_t kZ3 = 2;

Polynomial invariant_p() {
  return Polynomial::from_terms(3, {{Rational(1), Monomial{1, 0, 1}},
                                    {Rational(-1, 2), Monomial{0, 2, 0}}});
}

void require_dimension(const Derivation& d, const Polynomial& f) {
  if (d.dimension() != f.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "derivation in " + std::to_string(d.dimension()) +
                    " variables applied to a polynomial in " + std::to_string(f.dimension()));
  }
}

// True when a = c*b for some nonzero rational c; both nonzero.
bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  const Rational ratio = a.terms().begin()->second / b.terms().begin()->second;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ratio * ib->second) return false;
  }
  return true;
}

}  // namespace

Derivation::Derivation(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "derivation of a ring with no variables");
  }
  for (const auto& img : images_) {
    if (img.dimension() != images_.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "derivation image in " + std::to_string(img.dimension()) +
                      " variables, expected " + std::to_string(images_.size()));
    }
  }
}

Derivation Derivation::zero(std::size_t dimension) {
  return Derivation(std::vector<Polynomial>(dimension, Polynomial(dimension)));
}

Derivation Derivation::partial(std::size_t dimension, std::size_t index) {
  std::vector<Polynomial> images(dimension, Polynomial(dimension));
  images.at(index) = Polynomial::constant(dimension, Rational(1));
  return Derivation(std::move(images));
}

Derivation Derivation::scaled(const Polynomial& q) const {
  if (q.dimension() != dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "scaling factor lives in another ring");
  }
  std::vector<Polynomial> out;
  out.reserve(images_.size());
  for (const auto& img : images_) out.push_back(q * img);
  return Derivation(std::move(out));
}

Derivation Derivation::embed(std::size_t new_dimension) const {
  std::vector<Polynomial> out;
  out.reserve(new_dimension);
  for (const auto& img : images_) out.push_back(img.embed(new_dimension));
  while (out.size() < new_dimension) out.emplace_back(new_dimension);
  return Derivation(std::move(out));
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
  require_dimension(d, f);
  Polynomial out(f.dimension());
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    if (d.image(i).is_zero() || !f.depends_on(i)) continue;
    out = out + d.image(i) * partial_derivative(f, i);
  }
  return out;
}

std::size_t nilpotency_index(const Derivation& d, const Polynomial& f, std::size_t bound) {
  require_dimension(d, f);
  Polynomial current = f;
  for (std::size_t m = 0;; ++m) {
    if (current.is_zero()) return m;
    if (m == bound) {
      throw Error(ErrorKind::BoundExceeded,
                  "D^" + std::to_string(bound) + "(f) is still nonzero");
    }
    current = apply(d, current);
  }
}

NilpotencyReport is_locally_nilpotent(const Derivation& d, std::size_t bound) {
  bool exhausted = false;
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    std::vector<Polynomial> orbit;
    Polynomial current = Polynomial::variable(d.dimension(), i);
    bool vanished = false;
    for (std::size_t k = 0; k <= bound; ++k) {
      if (current.is_zero()) {
        vanished = true;
        break;
      }
      // A repeat up to a nonzero scalar means the orbit never reaches zero.
      for (std::size_t j = 0; j < orbit.size(); ++j) {
        if (proportional(current, orbit[j])) {
          return {NilpotencyVerdict::NotNilpotentWitness, NilpotencyWitness{i, k, j}};
        }
      }
      orbit.push_back(current);
      if (k < bound) current = apply(d, current);
    }
    if (!vanished) exhausted = true;
  }
  if (exhausted) return {NilpotencyVerdict::Inconclusive, std::nullopt};
  return {NilpotencyVerdict::LocallyNilpotentUpToBound, std::nullopt};
}

std::vector<Polynomial> exp_map(const Derivation& d, std::size_t bound) {
  const std::size_t n = d.dimension();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial sum(n);
    Polynomial iterate = Polynomial::variable(n, i);
    Rational factorial(1);
    for (std::size_t k = 0;; ++k) {
      if (iterate.is_zero()) break;
      if (k == bound) {
        throw Error(ErrorKind::BoundExceeded,
                    "exponential series of x" + std::to_string(i + 1) +
                        " does not terminate within " + std::to_string(bound) + " terms");
      }
      if (k > 0) factorial *= Rational(static_cast<long>(k));
      sum = sum + factorial.inverse() * iterate;
      iterate = apply(d, iterate);
    }
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<Polynomial> formal_flow(const Derivation& d, std::size_t bound) {
  const std::size_t n = d.dimension();
  const Derivation lifted = d.embed(n + 1);
  auto flow = exp_map(lifted.scaled(Polynomial::variable(n + 1, n)), bound);
  flow.pop_back();
  return flow;
}

KernelPolynomial::KernelPolynomial(Polynomial coords) : coords_(std::move(coords)) {
  if (coords_.dimension() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "kernel coordinates live in Q[Z, P]");
  }
}

KernelPolynomial KernelPolynomial::Z() { return monomial(1, 0); }
KernelPolynomial KernelPolynomial::P() { return monomial(0, 1); }

KernelPolynomial KernelPolynomial::monomial(std::uint32_t z_power, std::uint32_t p_power,
                                            const Rational& c) {
  return KernelPolynomial(Polynomial::term(Monomial{z_power, p_power}, c));
}

Polynomial KernelPolynomial::expand() const {
  const std::vector<Polynomial> images{Polynomial::variable(3, kZ3), invariant_p()};
  return substitute(coords_, images);
}

KernelPolynomial kernel_coordinates(const Polynomial& f) {
  if (f.dimension() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "kernel coordinates need a polynomial in x, y, z");
  }
  const Polynomial p = invariant_p();
  Polynomial::TermMap coords;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const std::uint32_t d = rest.degree_in(kX);
    // The x^d part of c(z, p) is c_d(z) z^d x^d.
    const Polynomial lead = rest.coefficient_of(kX, d);
    if (lead.depends_on(kY)) {
      throw Error(ErrorKind::NotInKernelRing,
                  "coefficient of x^" + std::to_string(d) + " involves y");
    }
    Polynomial::TermMap czd;
    for (const auto& [m, c] : lead.terms()) {
      if (m[kZ3] < d) {
        throw Error(ErrorKind::NotInKernelRing,
                    "coefficient of x^" + std::to_string(d) + " is not divisible by z^" +
                        std::to_string(d));
      }
      coords.emplace(Monomial{m[kZ3] - d, d}, c);
      czd.emplace(Monomial{0, 0, m[kZ3] - d}, c);
    }
    rest = rest - Polynomial(3, std::move(czd)) * p.pow(d);
  }
  return KernelPolynomial(Polynomial(2, std::move(coords)));
}

}  // namespace cremona
