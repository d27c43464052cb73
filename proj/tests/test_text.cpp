#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/error.hpp"
#include "cremona/nagata.hpp"
#include "cremona/sampling.hpp"
#include "cremona/text.hpp"
#include "oracle.hpp"

using namespace cremona;
using namespace cremona::text;

namespace {

const Polynomial x = Polynomial::variable(3, 0);
const Polynomial y = Polynomial::variable(3, 1);
const Polynomial z = Polynomial::variable(3, 2);
const Polynomial& p = nagata::standard_objects().p;

struct Where {
  ErrorKind kind;
  std::size_t line;
  std::size_t column;
};

Where parse_error_at(const auto& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  } catch (const Error& e) {
    return {e.kind(), 0, 0};
  }
  FAIL("expected an error");
  return {ErrorKind::DivisionByZero, 0, 0};
}

}  // namespace

TEST_CASE("parse_polynomial") {
  CHECK(parse_polynomial("x*z - 1/2*y^2", 3) == p);
  CHECK(parse_polynomial("0", 3).is_zero());
  CHECK(parse_polynomial("  x *  z-1/2 * y ^ 2 ", 3) == p);
  CHECK(parse_polynomial("-y^2", 3) == -(y * y));
  CHECK(parse_polynomial("(-y)^2", 3) == y * y);
  CHECK(parse_polynomial("2*(x + y)^2 - x*x", 3) == x * x + Rational(4) * x * y + Rational(2) * y * y);
  CHECK(parse_polynomial("x - y - z", 3) == x - y - z);
  CHECK(parse_polynomial("-4/6", 3) == Polynomial::constant(3, Rational(-2, 3)));
  CHECK(parse_polynomial("--x", 3) == x);
  CHECK(parse_polynomial("x2*x4", 4) == Polynomial::variable(4, 1) * Polynomial::variable(4, 3));
  CHECK(parse_polynomial("u - v", 2, {"u", "v"}) ==
        Polynomial::variable(2, 0) - Polynomial::variable(2, 1));
}

TEST_CASE("parse errors carry positions") {
  const auto implicit = parse_error_at([] { return parse_polynomial("2x", 3); });
  CHECK(implicit.kind == ErrorKind::ParseError);
  CHECK(implicit.line == 1);
  CHECK(implicit.column == 2);

  const auto unknown = parse_error_at([] { return parse_polynomial("x + w", 3); });
  CHECK(unknown.kind == ErrorKind::UnknownVariable);
  CHECK(unknown.column == 5);

  const auto second_line = parse_error_at([] { return parse_polynomial("x +\n  * y", 3); });
  CHECK(second_line.kind == ErrorKind::ParseError);
  CHECK(second_line.line == 2);
  CHECK(second_line.column == 3);

  CHECK(parse_error_at([] { return parse_polynomial("", 3); }).kind == ErrorKind::ParseError);
  CHECK(parse_error_at([] { return parse_polynomial("(x + y", 3); }).kind == ErrorKind::ParseError);
  CHECK(parse_error_at([] { return parse_polynomial("x^-1", 3); }).kind == ErrorKind::ParseError);
  CHECK(parse_error_at([] { return parse_polynomial("1/0", 3); }).kind == ErrorKind::ParseError);
  CHECK(parse_error_at([] { return parse_polynomial("x y", 3); }).kind == ErrorKind::ParseError);
  CHECK(parse_error_at([] { return parse_polynomial("x4", 3); }).kind == ErrorKind::UnknownVariable);
}

TEST_CASE("parse_map") {
  CHECK(parse_map("(x+1, y, z)", 3) == PolyMap({x + Polynomial::constant(3, 1), y, z}));
  CHECK(parse_map("(x, y, z)", 3) == PolyMap::identity(3));
  CHECK(parse_error_at([] { return parse_map("(x, y)", 3); }).kind == ErrorKind::ArityMismatch);
  CHECK(parse_error_at([] { return parse_map("(x, y, z, x)", 3); }).kind ==
        ErrorKind::ArityMismatch);
  CHECK(parse_error_at([] { return parse_map("x, y, z", 3); }).kind == ErrorKind::ParseError);
  CHECK(parse_error_at([] { return parse_map("(x, y, z) x", 3); }).kind == ErrorKind::ParseError);
}

TEST_CASE("format_polynomial") {
  CHECK(format_polynomial(p) == "x*z - 1/2*y^2");
  CHECK(format_polynomial(Polynomial(3)) == "0");
  CHECK(format_polynomial(nagata::standard_objects().h[1]) == "y + x*z^2 - 1/2*y^2*z");
  CHECK(format_polynomial(Polynomial::constant(3, -1)) == "-1");
  CHECK(format_polynomial(-x + Polynomial::constant(3, 3)) == "3 - x");
  CHECK(format_polynomial(Polynomial::variable(4, 2)) == "x3");
  CHECK(format_map(nagata::standard_objects().h_prime) == "(x + y + 1/2*z, y + z, z)");
  CHECK(format_kernel(KernelPolynomial::monomial(2, 1) +
                      KernelPolynomial::monomial(1, 0, Rational(3))) == "3*Z + Z^2*P");
}

TEST_CASE("parse inverts format on random polynomials") {
  sampling::Rng rng(97);
  for (int i = 0; i < 500; ++i) {
    const auto f = sampling::random_polynomial(rng, 3, 6, 8);
    const std::string s = format_polynomial(f);
    CHECK(parse_polynomial(s, 3) == f);
    CHECK(format_polynomial(f) == s);
  }
  for (int i = 0; i < 50; ++i) {
    const auto f = sampling::random_polynomial(rng, 5, 4, 6);
    CHECK(parse_polynomial(format_polynomial(f), 5) == f);
  }
}

TEST_CASE("map formatting round trips") {
  sampling::Rng rng(101);
  for (int i = 0; i < 30; ++i) {
    const PolyMap m = evaluate(sampling::random_tame_word(rng, 3, 3, 2));
    CHECK(parse_map(format_map(m), 3) == m);
  }
}

TEST_CASE("word files") {
  const std::string src =
      "# translate, Nagata, translate back\n"
      "affine 1 0 0 0 1 0 0 0 1 -1 0 0\n"
      "\n"
      "exp 1 x*z - 1/2*y^2\n"
      "affine 1 0 0 0 1 0 0 0 1 1 0 0\n"
      "triangular (x + y^2, y + 1, z)\n"
      "scalar 1/2\n";
  const AutWord w = parse_word(src, 3);
  REQUIRE(w.factors().size() == 5);
  CHECK(std::holds_alternative<ExponentialGenerator>(w.factors()[1]));
  CHECK(parse_word(format_word(w), 3) == w);

  const AutWord three = parse_word(
      "affine 1 0 0 0 1 0 0 0 1 -1 0 0\nexp 1 x*z - 1/2*y^2\naffine 1 0 0 0 1 0 0 0 1 1 0 0\n", 3);
  CHECK(evaluate(three) == nagata::exp_kernel(p + z));

  const auto bad_kw = parse_error_at([] { return parse_word("scalar 2\n  rotate 1\n", 3); });
  CHECK(bad_kw.kind == ErrorKind::ParseError);
  CHECK(bad_kw.line == 2);
  CHECK(bad_kw.column == 3);

  const auto bad_expr = parse_error_at([] { return parse_word("triangular (x + 2y, y, z)\n", 3); });
  CHECK(bad_expr.kind == ErrorKind::ParseError);
  CHECK(bad_expr.line == 1);
  CHECK(bad_expr.column == 18);

  CHECK(parse_error_at([] { return parse_word("affine 1 0 0 1\n", 3); }).kind ==
        ErrorKind::ArityMismatch);
  CHECK(parse_error_at([] { return parse_word("exp 1 y\n", 3); }).kind ==
        ErrorKind::InvalidGenerator);
  CHECK(parse_error_at([] { return parse_word("scalar 0\n", 3); }).kind ==
        ErrorKind::InvalidGenerator);
}
