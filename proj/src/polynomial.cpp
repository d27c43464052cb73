#include "cremona/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cremona/error.hpp"

namespace cremona {

namespace {

void require_same_dimension(const Polynomial& f, const Polynomial& g, const char* op) {
  if (f.dimension() != g.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + " of polynomials in " + std::to_string(f.dimension()) +
                    " and " + std::to_string(g.dimension()) + " variables");
  }
}

void accumulate(Polynomial::TermMap& terms, const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

// Horner evaluation in variable `index`, recursing on the remaining
// variables: f = sum_e x_index^e f_e and
// f(images) = (...(f_d * img + f_{d-1}) * img + ...) + f_0.
// Only products with a single image occur, which keeps intermediate sizes
// close to the size of the result.
Polynomial substitute_from(const Polynomial& f, std::span<const Polynomial> images,
                           std::size_t index, std::size_t target) {
  if (f.is_zero()) return Polynomial(target);
  while (index < f.dimension() && !f.depends_on(index)) ++index;
  if (index == f.dimension()) return Polynomial::constant(target, f.constant_term());

  std::map<std::uint32_t, Polynomial::TermMap, std::greater<>> slices;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    const auto power = e[index];
    e[index] = 0;
    slices[power].emplace(Monomial(std::move(e)), c);
  }
  Polynomial acc(target);
  std::uint32_t current = slices.begin()->first;
  for (auto& [power, terms] : slices) {
    for (; current > power; --current) acc = acc * images[index];
    acc = acc + substitute_from(Polynomial(f.dimension(), std::move(terms)), images, index + 1,
                                target);
  }
  for (; current > 0; --current) acc = acc * images[index];
  return acc;
}

}  // namespace

Monomial Monomial::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) {
    throw Error(ErrorKind::IndexOutOfRange,
                "variable " + std::to_string(index) + " in dimension " +
                    std::to_string(dimension));
  }
  Monomial m(dimension);
  m.exponents_[index] = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exponents_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {}

Polynomial::Polynomial(std::size_t dimension, TermMap terms)
    : dimension_(dimension), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [m, c] : terms_) {
    if (m.dimension() != dimension_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "monomial of length " + std::to_string(m.dimension()) +
                      " in a polynomial of dimension " + std::to_string(dimension_));
    }
  }
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
  TermMap t;
  t.emplace(Monomial(dimension), c);
  return Polynomial(dimension, std::move(t));
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t index) {
  return term(Monomial::variable(dimension, index), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  TermMap t;
  t.emplace(m, c);
  return Polynomial(m.dimension(), std::move(t));
}

Polynomial Polynomial::from_terms(
    std::size_t dimension, std::initializer_list<std::pair<Rational, Monomial>> terms) {
  TermMap t;
  for (const auto& [c, m] : terms) {
    if (m.dimension() != dimension) {
      throw Error(ErrorKind::DimensionMismatch, "monomial length differs from dimension");
    }
    accumulate(t, m, c);
  }
  return Polynomial(dimension, std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(dimension_)); }

std::uint32_t Polynomial::degree_in(std::size_t index) const {
  if (index >= dimension_) {
    throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(index));
  }
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
  return d;
}

Polynomial Polynomial::coefficient_of(std::size_t index, std::uint32_t power) const {
  if (index >= dimension_) {
    throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(index));
  }
  TermMap out;
  for (const auto& [m, c] : terms_) {
    if (m[index] != power) continue;
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    e[index] = 0;
    out.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(dimension_, std::move(out));
}

Polynomial Polynomial::embed(std::size_t new_dimension) const {
  if (new_dimension < dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "cannot embed into a smaller ring");
  }
  TermMap out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    e.resize(new_dimension, 0);
    out.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(new_dimension, std::move(out));
}

Polynomial Polynomial::restrict_to(std::size_t new_dimension) const {
  if (new_dimension > dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "cannot restrict to a larger ring");
  }
  TermMap out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = new_dimension; i < dimension_; ++i) {
      if (m[i] != 0) {
        throw Error(ErrorKind::DimensionMismatch,
                    "variable " + std::to_string(i) + " occurs; cannot drop it");
      }
    }
    std::vector<std::uint32_t> e(m.exponents().begin(),
                                 m.exponents().begin() + static_cast<long>(new_dimension));
    out.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(new_dimension, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != dimension_) {
    throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, expected " +
                                              std::to_string(dimension_));
  }
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (m[i] != 0) t *= point[i].pow(m[i]);
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result = constant(dimension_, Rational(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  TermMap out = terms_;
  for (auto& [m, c] : out) c = -c;
  return Polynomial(dimension_, std::move(out));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_dimension(f, g, "sum");
  Polynomial::TermMap out = f.terms_;
  for (const auto& [m, c] : g.terms_) accumulate(out, m, c);
  return Polynomial(f.dimension_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_dimension(f, g, "difference");
  Polynomial::TermMap out = f.terms_;
  for (const auto& [m, c] : g.terms_) accumulate(out, m, -c);
  return Polynomial(f.dimension_, std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_dimension(f, g, "product");
  Polynomial::TermMap out;
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) accumulate(out, mf * mg, cf * cg);
  }
  return Polynomial(f.dimension_, std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  if (c.is_zero()) return Polynomial(f.dimension_);
  Polynomial::TermMap out = f.terms_;
  for (auto& [m, v] : out) v *= c;
  return Polynomial(f.dimension_, std::move(out));
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.dimension()) {
    throw Error(ErrorKind::ArityMismatch,
                std::to_string(images.size()) + " images for a polynomial in " +
                    std::to_string(f.dimension()) + " variables");
  }
  if (images.empty()) return f;
  const std::size_t target = images.front().dimension();
  for (const auto& img : images) {
    if (img.dimension() != target) {
      throw Error(ErrorKind::DimensionMismatch, "substitution images differ in dimension");
    }
  }

  return substitute_from(f, images, 0, target);
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.dimension()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "partial derivative in variable " + std::to_string(index) + " of a ring with " +
                    std::to_string(f.dimension()) + " variables");
  }
  Polynomial::TermMap out;
  for (const auto& [m, c] : f.terms()) {
    const auto e = m[index];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
    exps[index] = e - 1;
    accumulate(out, Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
  }
  return Polynomial(f.dimension(), std::move(out));
}

std::optional<std::uint64_t> total_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  // Terms are ordered by increasing degree.
  return f.terms().rbegin()->first.degree();
}

std::vector<Polynomial> coordinate_images(std::size_t dimension) {
  std::vector<Polynomial> out;
  out.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) out.push_back(Polynomial::variable(dimension, i));
  return out;
}

}  // namespace cremona
