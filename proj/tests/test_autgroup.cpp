#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/autgroup.hpp"
#include "cremona/error.hpp"
#include "cremona/nagata.hpp"
#include "cremona/sampling.hpp"
#include "oracle.hpp"

using namespace cremona;

namespace {

const Polynomial x = Polynomial::variable(3, 0);
const Polynomial y = Polynomial::variable(3, 1);
const Polynomial z = Polynomial::variable(3, 2);
const Polynomial one = Polynomial::constant(3, 1);

const nagata::StandardObjects& objs() { return nagata::standard_objects(); }

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

AutWord single(Generator g) { return AutWord(3, {std::move(g)}); }

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(single(ExponentialGenerator(objs().p, objs().D))) == objs().h);
  CHECK(evaluate(AutWord(3)) == PolyMap::identity(3));

  const AutWord conj(3, {AffineGenerator::translation(3, 0, -1),
                         ExponentialGenerator(objs().p, objs().D),
                         AffineGenerator::translation(3, 0, 1)});
  const Polynomial pz = objs().p + z;
  CHECK(evaluate(conj) ==
        PolyMap({x + pz * y + Rational(1, 2) * pz * pz * z, y + pz * z, z}));
}

TEST_CASE("compose") {
  const PolyMap h_prime_inv = ExponentialGenerator(one, objs().D, -1).to_map();
  CHECK(compose(objs().h_prime, h_prime_inv) == PolyMap::identity(3));
  CHECK(compose(PolyMap({x + one, y, z}), PolyMap({x - one, y, z})) == PolyMap::identity(3));
  CHECK(compose(objs().h, nagata::exp_kernel(z)) == nagata::exp_kernel(objs().p + z));
  CHECK(kind_of([] { return compose(PolyMap::identity(3), PolyMap::identity(2)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("compose agrees with evaluating one map after the other") {
  sampling::Rng rng(31);
  std::mt19937_64 points(5);
  for (int i = 0; i < 30; ++i) {
    const PolyMap f = evaluate(sampling::random_tame_word(rng, 3, 3, 2));
    const PolyMap g = evaluate(sampling::random_tame_word(rng, 3, 3, 2));
    CHECK(oracle::agree_pointwise(compose(f, g), f, g, points, 4));
  }
}

TEST_CASE("invert_word") {
  const auto inv = invert_word(single(ExponentialGenerator(objs().p, objs().D)));
  CHECK(inv == single(ExponentialGenerator(objs().p, objs().D, -1)));

  const auto tri = invert_word(single(TriangularGenerator({x + y * y, y + one, z})));
  const Polynomial ym1 = y - one;
  CHECK(evaluate(tri) == PolyMap({x - ym1 * ym1, y - one, z}));

  CHECK(invert_word(single(ScalarGenerator(3, 2))) ==
        single(ScalarGenerator(3, Rational(1, 2))));
  CHECK(invert_word(AutWord(3)) == AutWord(3));
}

TEST_CASE("commutes") {
  CHECK(commutes(objs().h, objs().h_prime));
  CHECK_FALSE(commutes(PolyMap({x + y, y, z}), objs().h_prime));
  CHECK(commutes(objs().h, PolyMap::identity(3)));
  CHECK(kind_of([] { return commutes(PolyMap::identity(3), PolyMap::identity(4)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("is_tame_generator") {
  CHECK(is_tame_generator(PolyMap({Rational(2) * x + y + one, y - z, z})) == TameShape::Affine);
  CHECK(is_tame_generator(PolyMap({x + y * y, y + z * z * z, z})) == TameShape::Triangular);
  CHECK(is_tame_generator(objs().h) == TameShape::Neither);
  // Degree one but singular.
  CHECK(is_tame_generator(PolyMap({x + y, x + y, z})) == TameShape::Neither);
  // Zero leading coefficient on x.
  CHECK(is_tame_generator(PolyMap({y * y, y, z})) == TameShape::Neither);
}

TEST_CASE("generator construction validates its invariants") {
  using M = std::vector<std::vector<Rational>>;
  CHECK(kind_of([] { return AffineGenerator(M{{1, 1}, {2, 2}}, {0, 0}); }) ==
        ErrorKind::InvalidGenerator);
  CHECK(kind_of([] { return TriangularGenerator({y, x, z}); }) == ErrorKind::InvalidGenerator);
  CHECK(kind_of([] { return TriangularGenerator({x + x * y, y, z}); }) ==
        ErrorKind::InvalidGenerator);
  CHECK(kind_of([] { return ExponentialGenerator(x, objs().D); }) == ErrorKind::InvalidGenerator);
  const Derivation euler({x, Polynomial(3), Polynomial(3)});
  CHECK(kind_of([&] { return ExponentialGenerator(z, euler); }) == ErrorKind::InvalidGenerator);
  CHECK(kind_of([] { return ScalarGenerator(3, 0); }) == ErrorKind::InvalidGenerator);
  CHECK(kind_of([] { return AutWord(3, {ScalarGenerator(2, 2)}); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("affine inverse is the matrix inverse") {
  using M = std::vector<std::vector<Rational>>;
  const AffineGenerator a(M{{2, 1, 0}, {0, 1, -1}, {0, 0, 1}}, {1, 0, 3});
  CHECK(compose(a.to_map(), a.inverse().to_map()) == PolyMap::identity(3));
  CHECK(compose(a.inverse().to_map(), a.to_map()) == PolyMap::identity(3));
}

TEST_CASE("group laws on random tame words") {
  sampling::Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    const auto u = sampling::random_tame_word(rng, 3, 3, 3);
    const auto v = sampling::random_tame_word(rng, 3, 3, 3);
    const auto w = sampling::random_tame_word(rng, 3, 2, 3);
    CHECK(evaluate(u.concat(v)) == compose(evaluate(u), evaluate(v)));
    CHECK(evaluate(u.concat(v).concat(w)) == evaluate(u.concat(v.concat(w))));
    CHECK(evaluate(u.concat(invert_word(u))) == PolyMap::identity(3));
    CHECK(evaluate(invert_word(u).concat(u)) == PolyMap::identity(3));
  }
}

TEST_CASE("scalar generators commute") {
  sampling::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto a = ScalarGenerator(3, sampling::random_nonzero_rational(rng)).to_map();
    const auto b = ScalarGenerator(3, sampling::random_nonzero_rational(rng)).to_map();
    CHECK(commutes(a, b));
  }
}

TEST_CASE("triangular generators invert exactly") {
  sampling::Rng rng(43);
  int seen = 0;
  for (int i = 0; i < 200 && seen < 50; ++i) {
    const Generator g = sampling::random_tame_generator(rng, 3, 3);
    if (!std::holds_alternative<TriangularGenerator>(g)) continue;
    ++seen;
    const auto& t = std::get<TriangularGenerator>(g);
    CHECK(compose(t.to_map(), t.inverse().to_map()) == PolyMap::identity(3));
    CHECK(compose(t.inverse().to_map(), t.to_map()) == PolyMap::identity(3));
  }
  CHECK(seen > 0);
}

TEST_CASE("evaluation works in other dimensions") {
  const Polynomial a = Polynomial::variable(2, 0);
  const Polynomial b = Polynomial::variable(2, 1);
  const AutWord w(2, {TriangularGenerator({a + b * b, b}), ScalarGenerator(2, 3)});
  CHECK(evaluate(w) == PolyMap({Rational(3) * a + Rational(9) * b * b, Rational(3) * b}));
  CHECK(evaluate(w.concat(invert_word(w))) == PolyMap::identity(2));
}
