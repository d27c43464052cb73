#include <cctype>
#include <sstream>
#include <variant>

#include "cremona/error.hpp"
#include "cremona/nagata.hpp"
#include "cremona/text.hpp"

namespace cremona::text {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::pair<std::string_view, std::string_view> split_first(std::string_view s) {
  s = trim(s);
  const auto space = s.find_first_of(" \t");
  if (space == std::string_view::npos) return {s, {}};
  return {s.substr(0, space), trim(s.substr(space + 1))};
}

Rational parse_rational_field(std::string_view field, std::size_t line, std::size_t column) {
  try {
    return Rational::parse(field);
  } catch (const Error&) {
    throw ParseError(ErrorKind::ParseError, "malformed rational '" + std::string(field) + "'",
                     line, column);
  }
}

// Runs an expression parser on a fragment starting at `column` of `line`,
// translating error positions to file coordinates.
template <typename Fn>
auto at_position(std::size_t line, std::size_t column, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), "in generator", line, column + e.column() - 1);
  }
}

// `line_text` is the full source line; columns are reported against it.
Generator parse_generator(std::string_view line_text, std::size_t line, std::size_t dimension) {
  const auto [keyword, rest] = split_first(line_text);
  const std::size_t rest_column =
      rest.empty() ? line_text.size() + 1
                   : static_cast<std::size_t>(rest.data() - line_text.data()) + 1;
  const std::size_t keyword_column =
      static_cast<std::size_t>(keyword.data() - line_text.data()) + 1;
  if (keyword == "affine") {
    std::vector<Rational> values;
    std::string_view remaining = rest;
    while (!remaining.empty()) {
      auto [field, tail] = split_first(remaining);
      values.push_back(parse_rational_field(field, line, rest_column));
      remaining = tail;
    }
    if (values.size() != dimension * dimension + dimension) {
      throw Error(ErrorKind::ArityMismatch,
                  "affine generator needs " + std::to_string(dimension * dimension + dimension) +
                      " entries, got " + std::to_string(values.size()));
    }
    std::vector<std::vector<Rational>> matrix(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
      matrix[i].assign(values.begin() + static_cast<long>(i * dimension),
                       values.begin() + static_cast<long>((i + 1) * dimension));
    }
    std::vector<Rational> translation(values.end() - static_cast<long>(dimension), values.end());
    return AffineGenerator(std::move(matrix), std::move(translation));
  }
  if (keyword == "triangular") {
    return TriangularGenerator(
        at_position(line, rest_column, [&] { return parse_map(rest, dimension); }).components());
  }
  if (keyword == "exp") {
    if (dimension != 3) {
      throw Error(ErrorKind::InvalidGenerator, "exp generators use the Nagata derivation (n = 3)");
    }
    const auto [scale, q] = split_first(rest);
    const std::size_t q_column =
        q.empty() ? rest_column + rest.size()
                  : rest_column + static_cast<std::size_t>(q.data() - rest.data());
    return ExponentialGenerator(
        at_position(line, q_column, [&] { return parse_polynomial(q, 3); }),
        nagata::standard_objects().D, parse_rational_field(scale, line, rest_column));
  }
  if (keyword == "scalar") {
    return ScalarGenerator(dimension, parse_rational_field(rest, line, rest_column));
  }
  throw ParseError(ErrorKind::ParseError, "unknown generator '" + std::string(keyword) + "'",
                   line, keyword_column);
}

}  // namespace

AutWord parse_word(std::string_view source, std::size_t dimension) {
  std::vector<Generator> factors;
  std::size_t line = 0;
  while (!source.empty()) {
    ++line;
    const auto newline = source.find('\n');
    std::string_view current = source.substr(0, newline);
    source = newline == std::string_view::npos ? std::string_view{} : source.substr(newline + 1);
    const std::string_view body = trim(current);
    if (body.empty() || body.front() == '#') continue;
    factors.push_back(parse_generator(current, line, dimension));
  }
  return AutWord(dimension, std::move(factors));
}

std::string format_word(const AutWord& w) {
  std::ostringstream out;
  for (const auto& g : w.factors()) {
    if (const auto* a = std::get_if<AffineGenerator>(&g)) {
      out << "affine";
      for (const auto& row : a->matrix()) {
        for (const auto& v : row) out << ' ' << v;
      }
      for (const auto& v : a->translation()) out << ' ' << v;
    } else if (const auto* t = std::get_if<TriangularGenerator>(&g)) {
      out << "triangular " << format_map(t->to_map());
    } else if (const auto* e = std::get_if<ExponentialGenerator>(&g)) {
      if (!(e->derivation() == nagata::standard_objects().D)) {
        throw Error(ErrorKind::InvalidGenerator,
                    "only exponentials of the Nagata derivation have a text form");
      }
      out << "exp " << e->scale() << ' ' << format_polynomial(e->q());
    } else {
      out << "scalar " << std::get<ScalarGenerator>(g).alpha();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cremona::text
