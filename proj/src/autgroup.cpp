#include "cremona/autgroup.hpp"

#include <string>

#include "cremona/error.hpp"

namespace cremona {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan elimination; nullopt when the matrix is singular.
std::optional<Matrix> invert_matrix(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Checks component i has the shape c x_i + h(x_{i+1}, ..., x_n), c != 0.
// Returns the leading coefficients c_i, or nullopt.
std::optional<std::vector<Rational>> triangular_leads(const std::vector<Polynomial>& comps) {
  const std::size_t n = comps.size();
  std::vector<Rational> leads;
  leads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (comps[i].dimension() != n) return std::nullopt;
    for (const auto& [m, c] : comps[i].terms()) {
      for (std::size_t j = 0; j < i; ++j) {
        if (m[j] != 0) return std::nullopt;
      }
      if (m[i] != 0 && !(m == Monomial::variable(n, i))) return std::nullopt;
    }
    const Rational lead = comps[i].coefficient(Monomial::variable(n, i));
    if (lead.is_zero()) return std::nullopt;
    leads.push_back(lead);
  }
  return leads;
}

bool is_affine(const PolyMap& m) {
  const std::size_t n = m.dimension();
  Matrix linear(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto deg = total_degree(m[i]);
    if (deg && *deg > 1) return false;
    for (std::size_t j = 0; j < n; ++j) linear[i][j] = m[i].coefficient(Monomial::variable(n, j));
  }
  return invert_matrix(linear).has_value();
}

}  // namespace

PolyMap::PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.dimension() != components_.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "map component in " + std::to_string(c.dimension()) +
                      " variables, expected " + std::to_string(components_.size()));
    }
  }
}

PolyMap PolyMap::identity(std::size_t dimension) { return PolyMap(coordinate_images(dimension)); }

std::vector<Rational> PolyMap::operator()(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

PolyMap PolyMap::embed(std::size_t new_dimension) const {
  std::vector<Polynomial> out;
  out.reserve(new_dimension);
  for (const auto& c : components_) out.push_back(c.embed(new_dimension));
  for (std::size_t i = components_.size(); i < new_dimension; ++i) {
    out.push_back(Polynomial::variable(new_dimension, i));
  }
  return PolyMap(std::move(out));
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (f.dimension() != g.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "composing maps of dimensions " + std::to_string(f.dimension()) + " and " +
                    std::to_string(g.dimension()));
  }
  std::vector<Polynomial> out;
  out.reserve(f.dimension());
  for (const auto& c : f.components()) out.push_back(substitute(c, g.components()));
  return PolyMap(std::move(out));
}

bool commutes(const PolyMap& f, const PolyMap& g) { return compose(f, g) == compose(g, f); }

AffineGenerator::AffineGenerator(Matrix matrix, std::vector<Rational> translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  const std::size_t n = translation_.size();
  if (n == 0 || matrix_.size() != n) {
    throw Error(ErrorKind::InvalidGenerator, "affine generator needs an n x n matrix");
  }
  for (const auto& row : matrix_) {
    if (row.size() != n) {
      throw Error(ErrorKind::InvalidGenerator, "affine generator needs an n x n matrix");
    }
  }
  if (!invert_matrix(matrix_)) {
    throw Error(ErrorKind::InvalidGenerator, "affine generator has a singular matrix");
  }
}

AffineGenerator AffineGenerator::translation(std::size_t dimension, std::size_t index,
                                             const Rational& amount) {
  Matrix m(dimension, std::vector<Rational>(dimension));
  for (std::size_t i = 0; i < dimension; ++i) m[i][i] = Rational(1);
  std::vector<Rational> b(dimension);
  b.at(index) = amount;
  return AffineGenerator(std::move(m), std::move(b));
}

PolyMap AffineGenerator::to_map() const {
  const std::size_t n = dimension();
  std::vector<Polynomial> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial::TermMap t;
    for (std::size_t j = 0; j < n; ++j) t.emplace(Monomial::variable(n, j), matrix_[i][j]);
    t.emplace(Monomial(n), translation_[i]);
    out.emplace_back(n, std::move(t));
  }
  return PolyMap(std::move(out));
}

AffineGenerator AffineGenerator::inverse() const {
  const std::size_t n = dimension();
  Matrix inv = *invert_matrix(matrix_);
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i] -= inv[i][j] * translation_[j];
  }
  return AffineGenerator(std::move(inv), std::move(b));
}

TriangularGenerator::TriangularGenerator(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  if (components_.empty() || !triangular_leads(components_)) {
    throw Error(ErrorKind::InvalidGenerator,
                "triangular generator needs components c_i x_i + h_i(x_{i+1}, ..., x_n)");
  }
}

TriangularGenerator TriangularGenerator::inverse() const {
  // Solve y = T(x) from the last coordinate upward:
  // x_i = (y_i - h_i(x_{i+1}, ..., x_n)) / c_i.
  const std::size_t n = dimension();
  const auto leads = *triangular_leads(components_);
  std::vector<Polynomial> solved = coordinate_images(n);
  for (std::size_t k = n; k-- > 0;) {
    const Polynomial tail =
        components_[k] - Polynomial::term(Monomial::variable(n, k), leads[k]);
    // tail only involves x_{k+1}..x_n, whose solutions are already in place;
    // entries at or below k are never read by the substitution.
    solved[k] = leads[k].inverse() * (Polynomial::variable(n, k) - substitute(tail, solved));
  }
  return TriangularGenerator(std::move(solved));
}

ExponentialGenerator::ExponentialGenerator(Polynomial q, Derivation d, Rational scale)
    : q_(std::move(q)), derivation_(std::move(d)), scale_(std::move(scale)) {
  if (q_.dimension() != derivation_.dimension()) {
    throw Error(ErrorKind::InvalidGenerator, "q and D live in different rings");
  }
  if (!apply(derivation_, q_).is_zero()) {
    throw Error(ErrorKind::InvalidGenerator, "q is not in the kernel of D");
  }
  if (is_locally_nilpotent(derivation_).verdict != NilpotencyVerdict::LocallyNilpotentUpToBound) {
    throw Error(ErrorKind::InvalidGenerator, "D is not locally nilpotent within the bound");
  }
}

PolyMap ExponentialGenerator::to_map() const {
  return PolyMap(exp_map(derivation_.scaled(scale_ * q_)));
}

ExponentialGenerator ExponentialGenerator::inverse() const {
  return ExponentialGenerator(q_, derivation_, -scale_);
}

ScalarGenerator::ScalarGenerator(std::size_t dimension, Rational alpha)
    : dimension_(dimension), alpha_(std::move(alpha)) {
  if (dimension_ == 0) throw Error(ErrorKind::InvalidGenerator, "scalar in dimension 0");
  if (alpha_.is_zero()) throw Error(ErrorKind::InvalidGenerator, "scalar generator with alpha = 0");
}

PolyMap ScalarGenerator::to_map() const {
  std::vector<Polynomial> out;
  out.reserve(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    out.push_back(Polynomial::term(Monomial::variable(dimension_, i), alpha_));
  }
  return PolyMap(std::move(out));
}

std::size_t dimension_of(const Generator& g) {
  return std::visit([](const auto& v) { return v.dimension(); }, g);
}

PolyMap to_map(const Generator& g) {
  return std::visit([](const auto& v) { return v.to_map(); }, g);
}

Generator inverse(const Generator& g) {
  return std::visit([](const auto& v) -> Generator { return v.inverse(); }, g);
}

AutWord::AutWord(std::size_t dimension, std::vector<Generator> factors)
    : dimension_(dimension), factors_(std::move(factors)) {
  for (const auto& g : factors_) {
    if (dimension_of(g) != dimension_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator of dimension " + std::to_string(dimension_of(g)) +
                      " in a word of dimension " + std::to_string(dimension_));
    }
  }
}

AutWord AutWord::concat(const AutWord& other) const {
  if (other.dimension_ != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "concatenating words of different dimensions");
  }
  std::vector<Generator> out = factors_;
  out.insert(out.end(), other.factors_.begin(), other.factors_.end());
  return AutWord(dimension_, std::move(out));
}

PolyMap evaluate(const AutWord& w) {
  // Right fold: each step substitutes the accumulated map into one small
  // generator, so affine steps cost a linear combination.
  PolyMap result = PolyMap::identity(w.dimension());
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) {
    result = compose(to_map(*it), result);
  }
  return result;
}

AutWord invert_word(const AutWord& w) {
  std::vector<Generator> out;
  out.reserve(w.factors().size());
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it) out.push_back(inverse(*it));
  return AutWord(w.dimension(), std::move(out));
}

TameShape is_tame_generator(const PolyMap& m) {
  if (is_affine(m)) return TameShape::Affine;
  if (triangular_leads(m.components())) return TameShape::Triangular;
  return TameShape::Neither;
}

}  // namespace cremona
