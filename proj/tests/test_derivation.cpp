#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/derivation.hpp"
#include "cremona/error.hpp"
#include "cremona/sampling.hpp"
#include "oracle.hpp"

using namespace cremona;
using oracle::poly;

namespace {

const Polynomial x = Polynomial::variable(3, 0);
const Polynomial y = Polynomial::variable(3, 1);
const Polynomial z = Polynomial::variable(3, 2);
const Polynomial zero3(3);
const Polynomial p = x * z - Rational(1, 2) * y * y;
const Derivation D({y, z, zero3});
const Derivation E = Derivation::partial(3, 0);
const Derivation euler_x({x, zero3, zero3});

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

Polynomial specialize_last(const Polynomial& f, const Rational& value) {
  const std::size_t n = f.dimension() - 1;
  std::vector<Polynomial> images = coordinate_images(n);
  images.push_back(Polynomial::constant(n, value));
  return substitute(f, images);
}

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(D, p).is_zero());
  CHECK(apply(D, x) == y);
  CHECK(apply(D, y) == z);
  CHECK(apply(D, z).is_zero());
  CHECK(apply(E, x) == Polynomial::constant(3, 1));
  CHECK(apply(E, y).is_zero());
  CHECK(kind_of([] { return apply(D, Polynomial::variable(2, 0)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("derivations satisfy the Leibniz rule") {
  sampling::Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> images;
    for (int k = 0; k < 3; ++k) images.push_back(sampling::random_polynomial(rng, 3, 2, 3));
    const Derivation d(images);
    const auto f = sampling::random_polynomial(rng, 3, 3, 4);
    const auto g = sampling::random_polynomial(rng, 3, 3, 4);
    CHECK(apply(d, f * g) == apply(d, f) * g + f * apply(d, g));
    CHECK(apply(d, f + g) == apply(d, f) + apply(d, g));
  }
}

TEST_CASE("nilpotency_index") {
  CHECK(nilpotency_index(D, x, 10) == 3);
  CHECK(nilpotency_index(D, zero3, 10) == 0);
  CHECK(nilpotency_index(D, p, 10) == 1);
  CHECK(kind_of([] { return nilpotency_index(euler_x, x, 10); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("is_locally_nilpotent") {
  CHECK(is_locally_nilpotent(D, 10).verdict == NilpotencyVerdict::LocallyNilpotentUpToBound);
  CHECK(is_locally_nilpotent(Derivation::zero(3), 1).verdict ==
        NilpotencyVerdict::LocallyNilpotentUpToBound);

  const auto report = is_locally_nilpotent(euler_x, 10);
  CHECK(report.verdict == NilpotencyVerdict::NotNilpotentWitness);
  REQUIRE(report.witness);
  CHECK(report.witness->variable == 0);
  CHECK(report.witness->iteration == 1);
  CHECK(report.witness->cycle_start == 0);

  // D(x) = 2x repeats up to a scalar.
  CHECK(is_locally_nilpotent(Derivation({Rational(2) * x, zero3, zero3})).verdict ==
        NilpotencyVerdict::NotNilpotentWitness);

  // Degree grows along x -> y^2 -> 2yz^2 -> 2z^4 -> 0, yet D is locally
  // nilpotent; growth alone must not produce a witness.
  const Derivation growing({y * y, z * z, zero3});
  CHECK(is_locally_nilpotent(growing, 10).verdict ==
        NilpotencyVerdict::LocallyNilpotentUpToBound);

  // x -> x^2 -> 2x^3 -> ... never repeats: out of bound without a certificate.
  CHECK(is_locally_nilpotent(Derivation({x * x, zero3, zero3}), 6).verdict ==
        NilpotencyVerdict::Inconclusive);
}

TEST_CASE("exp_map") {
  CHECK(exp_map(D) ==
        std::vector<Polynomial>{x + y + Rational(1, 2) * z, y + z, z});
  // Nagata: (x + y p + z p^2 / 2, y + z p, z), frozen after expansion.
  const auto h = exp_map(D.scaled(p));
  CHECK(h[0] == poly(3, {{Rational(1), Monomial{1, 0, 0}},
                         {Rational(1), Monomial{1, 1, 1}},
                         {Rational(-1, 2), Monomial{0, 3, 0}},
                         {Rational(1, 2), Monomial{2, 0, 3}},
                         {Rational(-1, 2), Monomial{1, 2, 2}},
                         {Rational(1, 8), Monomial{0, 4, 1}}}));
  CHECK(h[1] == poly(3, {{Rational(1), Monomial{0, 1, 0}},
                         {Rational(1), Monomial{1, 0, 2}},
                         {Rational(-1, 2), Monomial{0, 2, 1}}}));
  CHECK(h[2] == z);
  CHECK(exp_map(Derivation::zero(3)) == coordinate_images(3));
  CHECK(kind_of([] { return exp_map(euler_x, 12); }) == ErrorKind::BoundExceeded);
}

TEST_CASE("exp(-D) inverts exp(D) for locally nilpotent D") {
  sampling::Rng rng(19);
  std::vector<Derivation> cases{D, E};
  for (int i = 0; i < 6; ++i) {
    cases.push_back(D.scaled(sampling::random_kernel_polynomial(rng, 2, 3).expand()));
  }
  for (const auto& d : cases) {
    const auto forward = exp_map(d);
    const auto backward = exp_map(d.scaled(Polynomial::constant(3, -1)));
    std::vector<Polynomial> round;
    for (const auto& c : backward) round.push_back(substitute(c, forward));
    CHECK(round == coordinate_images(3));
  }
}

TEST_CASE("formal_flow") {
  const Polynomial x4 = Polynomial::variable(4, 0);
  const Polynomial y4 = Polynomial::variable(4, 1);
  const Polynomial z4 = Polynomial::variable(4, 2);
  const Polynomial t = Polynomial::variable(4, 3);
  CHECK(formal_flow(D) ==
        std::vector<Polynomial>{x4 + t * y4 + Rational(1, 2) * t * t * z4, y4 + t * z4, z4});
  CHECK(formal_flow(E) == std::vector<Polynomial>{x4 + t, y4, z4});

  for (const auto& d : {D, E, D.scaled(p)}) {
    const auto flow = formal_flow(d);
    std::vector<Polynomial> at_zero;
    std::vector<Polynomial> at_one;
    for (const auto& c : flow) {
      at_zero.push_back(specialize_last(c, 0));
      at_one.push_back(specialize_last(c, 1));
    }
    CHECK(at_zero == coordinate_images(3));
    CHECK(at_one == exp_map(d));
  }
}

TEST_CASE("the flow of D is additive in the parameter") {
  sampling::Rng rng(23);
  const auto flow = formal_flow(D);
  for (int i = 0; i < 20; ++i) {
    const Rational s = sampling::random_rational(rng);
    const Rational s2 = sampling::random_rational(rng);
    std::vector<Polynomial> at_s, at_s2, at_sum;
    for (const auto& c : flow) {
      at_s.push_back(specialize_last(c, s));
      at_s2.push_back(specialize_last(c, s2));
      at_sum.push_back(specialize_last(c, s + s2));
    }
    std::vector<Polynomial> composed;
    for (const auto& c : at_s) composed.push_back(substitute(c, at_s2));
    CHECK(composed == at_sum);
  }
}

TEST_CASE("kernel_coordinates") {
  CHECK(kernel_coordinates(p) == KernelPolynomial::P());
  // z^2 p + 3z = x z^3 - y^2 z^2 / 2 + 3z  ->  Z^2 P + 3Z
  const Polynomial f = poly(3, {{Rational(1), Monomial{1, 0, 3}},
                                {Rational(-1, 2), Monomial{0, 2, 2}},
                                {Rational(3), Monomial{0, 0, 1}}});
  CHECK(f == z * z * p + Rational(3) * z);
  CHECK(kernel_coordinates(f) == KernelPolynomial::monomial(2, 1) +
                                     KernelPolynomial::monomial(1, 0, Rational(3)));
  CHECK(kind_of([] { return kernel_coordinates(y); }) == ErrorKind::NotInKernelRing);
  CHECK(kind_of([] { return kernel_coordinates(x); }) == ErrorKind::NotInKernelRing);
  CHECK(kind_of([] { return kernel_coordinates(Polynomial::variable(2, 0)); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kernel_coordinates(zero3).is_zero());
}

TEST_CASE("kernel_coordinates round trips and is sound") {
  sampling::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const auto c = sampling::random_kernel_polynomial(rng, 4, 5);
    CHECK(kernel_coordinates(c.expand()) == c);
  }
  // Random inputs: whenever the rewrite succeeds, the input is in ker D.
  int accepted = 0;
  for (int i = 0; i < 300; ++i) {
    auto f = sampling::random_polynomial(rng, 3, 3, 3);
    if (i % 3 == 0) f = f + sampling::random_kernel_polynomial(rng, 2, 3).expand();
    try {
      const auto c = kernel_coordinates(f);
      ++accepted;
      CHECK(apply(D, f).is_zero());
      CHECK(c.expand() == f);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotInKernelRing);
    }
  }
  CHECK(accepted > 0);
}
