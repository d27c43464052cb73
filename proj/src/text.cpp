#include "cremona/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cremona/error.hpp"

namespace cremona::text {

namespace {

enum class TokenKind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind;
  std::string_view lexeme;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ == src_.size()) {
        out.push_back({TokenKind::End, {}, line_, column_});
        return out;
      }
      const std::size_t start = pos_;
      const std::size_t line = line_;
      const std::size_t column = column_;
      const char c = src_[pos_];
      TokenKind kind;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        kind = TokenKind::Number;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          advance();
        }
        kind = TokenKind::Name;
      } else {
        switch (c) {
          case '+': kind = TokenKind::Plus; break;
          case '-': kind = TokenKind::Minus; break;
          case '*': kind = TokenKind::Star; break;
          case '/': kind = TokenKind::Slash; break;
          case '^': kind = TokenKind::Caret; break;
          case '(': kind = TokenKind::LParen; break;
          case ')': kind = TokenKind::RParen; break;
          case ',': kind = TokenKind::Comma; break;
          default:
            throw ParseError(ErrorKind::ParseError,
                             "unexpected character '" + std::string(1, c) + "'", line, column);
        }
        advance();
      }
      out.push_back({kind, src_.substr(start, pos_ - start), line, column});
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t dimension, const std::vector<std::string>& names)
      : tokens_(Lexer(src).run()), dimension_(dimension), names_(names) {
    if (names_.size() != dimension_) {
      throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(dimension_) +
                                                " variable names, got " +
                                                std::to_string(names_.size()));
    }
  }

  Polynomial polynomial() {
    Polynomial p = expr();
    expect(TokenKind::End, "end of input");
    return p;
  }

  std::vector<Polynomial> map_literal() {
    expect(TokenKind::LParen, "'('");
    std::vector<Polynomial> comps;
    comps.push_back(expr());
    while (peek().kind == TokenKind::Comma) {
      next();
      comps.push_back(expr());
    }
    expect(TokenKind::RParen, "')' or ','");
    expect(TokenKind::End, "end of input");
    return comps;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    const std::string found =
        at.kind == TokenKind::End ? "end of input" : "'" + std::string(at.lexeme) + "'";
    throw ParseError(ErrorKind::ParseError, what + ", found " + found, at.line, at.column);
  }

  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    return next();
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const bool minus = next().kind == TokenKind::Minus;
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == TokenKind::Star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (peek().kind == TokenKind::Minus) {
      next();
      return -factor();
    }
    Polynomial b = base();
    if (peek().kind == TokenKind::Caret) {
      next();
      b = b.pow(exponent());
    }
    return b;
  }

  std::uint32_t exponent() {
    const Token& tok = expect(TokenKind::Number, "a non-negative integer exponent");
    std::uint64_t value = 0;
    for (char c : tok.lexeme) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(ErrorKind::ParseError, "exponent too large", tok.line, tok.column);
      }
    }
    return static_cast<std::uint32_t>(value);
  }

  Polynomial base() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number: {
        next();
        std::string literal(tok.lexeme);
        if (peek().kind == TokenKind::Slash) {
          next();
          const Token& den = expect(TokenKind::Number, "a positive denominator");
          if (std::all_of(den.lexeme.begin(), den.lexeme.end(), [](char c) { return c == '0'; })) {
            throw ParseError(ErrorKind::ParseError, "zero denominator", den.line, den.column);
          }
          literal += "/" + std::string(den.lexeme);
        }
        return Polynomial::constant(dimension_, Rational::parse(literal));
      }
      case TokenKind::Name: {
        next();
        for (std::size_t i = 0; i < names_.size(); ++i) {
          if (names_[i] == tok.lexeme) return Polynomial::variable(dimension_, i);
        }
        throw ParseError(ErrorKind::UnknownVariable,
                         "unknown variable '" + std::string(tok.lexeme) + "'", tok.line,
                         tok.column);
      }
      case TokenKind::LParen: {
        next();
        Polynomial inner = expr();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      default:
        fail(tok, "expected a number, a variable or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t dimension_;
  const std::vector<std::string>& names_;
};

const std::vector<std::string>& names_or_default(const std::vector<std::string>& names,
                                                 std::size_t dimension,
                                                 std::vector<std::string>& storage) {
  if (!names.empty()) return names;
  storage = default_variable_names(dimension);
  return storage;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t dimension) {
  if (dimension == 3) return {"x", "y", "z"};
  std::vector<std::string> out;
  out.reserve(dimension);
  for (std::size_t i = 1; i <= dimension; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Polynomial parse_polynomial(std::string_view source, std::size_t dimension,
                            const std::vector<std::string>& names) {
  std::vector<std::string> storage;
  return Parser(source, dimension, names_or_default(names, dimension, storage)).polynomial();
}

PolyMap parse_map(std::string_view source, std::size_t dimension,
                  const std::vector<std::string>& names) {
  std::vector<std::string> storage;
  auto comps = Parser(source, dimension, names_or_default(names, dimension, storage)).map_literal();
  if (comps.size() != dimension) {
    throw Error(ErrorKind::ArityMismatch, "map has " + std::to_string(comps.size()) +
                                              " components, expected " +
                                              std::to_string(dimension));
  }
  return PolyMap(std::move(comps));
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  std::vector<std::string> storage;
  const auto& vars = names_or_default(names, p.dimension(), storage);
  if (vars.size() != p.dimension()) {
    throw Error(ErrorKind::ArityMismatch, "wrong number of variable names for formatting");
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(m, vars);
    if (mono.empty()) {
      out += magnitude.str();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.str() + "*" + mono;
    }
  }
  return out;
}

std::string format_map(const PolyMap& m, const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (i != 0) out += ", ";
    out += format_polynomial(m[i], names);
  }
  return out + ")";
}

std::string format_kernel(const KernelPolynomial& q) {
  return format_polynomial(q.coords(), {"Z", "P"});
}

}  // namespace cremona::text
