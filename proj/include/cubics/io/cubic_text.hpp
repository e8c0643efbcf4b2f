#pragma once

#include <map>
#include <string>

#include "cubics/poly/ternary_form.hpp"
#include "cubics/projective/point.hpp"

namespace cubics {

namespace detail {

struct Token {
  enum Kind { Number, Omega, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == 'w') {
      out.push_back({Token::Omega, "w", i});
      ++i;
      continue;
    }
    if (c == 'x' && i + 1 < s.size() && s[i + 1] >= '0' && s[i + 1] <= '2') {
      out.push_back({Token::Var, s.substr(i, 2), i});
      i += 2;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, "+", i}); break;
      case '-': out.push_back({Token::Minus, "-", i}); break;
      case '*': out.push_back({Token::Star, "*", i}); break;
      case '^': out.push_back({Token::Caret, "^", i}); break;
      case '/': out.push_back({Token::Slash, "/", i}); break;
      case '(': out.push_back({Token::LParen, "(", i}); break;
      case ')': out.push_back({Token::RParen, ")", i}); break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

/// Sparse polynomial in x0, x1, x2 over Q(w), used while expanding parsed
/// expressions before homogeneity is known.
struct SparsePoly {
  std::map<std::array<int, 3>, Eis> terms;

  static SparsePoly scalar(const Eis& c) {
    SparsePoly p;
    if (!c.is_zero()) p.terms[{0, 0, 0}] = c;
    return p;
  }
  static SparsePoly variable(int v) {
    SparsePoly p;
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    p.terms[e] = Eis(1);
    return p;
  }
  void add_term(std::array<int, 3> e, const Eis& c) {
    auto it = terms.find(e);
    Eis next = (it == terms.end() ? c : it->second + c);
    if (next.is_zero()) {
      if (it != terms.end()) terms.erase(it);
    } else {
      terms[e] = next;
    }
  }
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
  }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        if (e[0] + e[1] + e[2] > 30) throw Error("expression degree too large");
        r.add_term(e, ca * cb);
      }
    return r;
  }
};

class CubicParser {
 public:
  explicit CubicParser(const std::string& text) : toks_(tokenize(text)) {}

  SparsePoly parse() {
    SparsePoly p = expression();
    if (peek().kind != Token::End) throw ParseError("unexpected trailing input", peek().pos);
    return p;
  }

 private:
  const Token& peek() const { return toks_[static_cast<std::size_t>(at_)]; }
  Token take() { return toks_[static_cast<std::size_t>(at_++)]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  SparsePoly expression() {
    bool neg = false;
    if (accept(Token::Minus))
      neg = true;
    else
      accept(Token::Plus);
    SparsePoly acc = term();
    if (neg) acc = SparsePoly() - acc;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      SparsePoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (accept(Token::Star)) acc = acc * factor();
    return acc;
  }

  SparsePoly factor() {
    SparsePoly base = atom();
    if (accept(Token::Caret)) {
      if (peek().kind != Token::Number) throw ParseError("expected an exponent", peek().pos);
      long e = std::stol(take().text);
      if (e < 0 || e > 30) throw ParseError("exponent out of range", peek().pos);
      SparsePoly r = SparsePoly::scalar(Eis(1));
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  SparsePoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Number: {
        Int n(take().text);
        if (accept(Token::Slash)) {
          if (peek().kind != Token::Number) throw ParseError("expected a denominator", peek().pos);
          Int d(take().text);
          if (d == 0) throw ParseError("zero denominator", peek().pos);
          return SparsePoly::scalar(Eis(Rat(n, d)));
        }
        return SparsePoly::scalar(Eis(Rat(n)));
      }
      case Token::Omega:
        take();
        return SparsePoly::scalar(Eis::omega());
      case Token::Var: {
        int v = take().text[1] - '0';
        return SparsePoly::variable(v);
      }
      case Token::LParen: {
        take();
        SparsePoly p = expression();
        if (!accept(Token::RParen)) throw ParseError("expected ')'", peek().pos);
        return p;
      }
      case Token::Minus: {
        take();
        return SparsePoly() - atom();
      }
      default:
        throw ParseError("expected a number, 'w', a variable or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  int at_ = 0;
};

inline std::string monomial_text(const std::array<int, 3>& e) {
  std::string s;
  for (int v = 0; v < 3; ++v) {
    int k = e[static_cast<std::size_t>(v)];
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace detail

/// Parses a cubic expression like "x0^3 + x1^3 + x2^3 - 3*x0*x1*x2" or
/// "(1/2 + 2*w)*x0*x1^2". Inhomogeneous expressions are rejected with the
/// offending term named.
inline TernaryForm<Eis> parse_cubic(const std::string& text) {
  detail::SparsePoly p = detail::CubicParser(text).parse();
  TernaryForm<Eis> f(3);
  for (const auto& [e, c] : p.terms) {
    if (e[0] + e[1] + e[2] != 3)
      throw ParseError("term '" + (e[0] + e[1] + e[2] == 0 ? to_string(c) : detail::monomial_text(e)) +
                           "' has degree " + std::to_string(e[0] + e[1] + e[2]) + ", expected 3",
                       0);
    f.at(e[0], e[1], e[2]) = c;
  }
  return f;
}

/// Parses a scalar like "2/3 + 1/2*w" (no variables allowed).
inline Eis parse_scalar(const std::string& text) {
  detail::SparsePoly p = detail::CubicParser(text).parse();
  Eis out(0);
  for (const auto& [e, c] : p.terms) {
    if (e[0] + e[1] + e[2] != 0) throw ParseError("expected a scalar, found a variable", 0);
    out = out + c;
  }
  return out;
}

/// Canonical text of a cubic; parse_cubic(cubic_text(f)) == f exactly.
inline std::string cubic_text(const TernaryForm<Eis>& f) {
  std::string out;
  for (int i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    auto e = TernaryForm<Eis>::exponents(f.degree(), i);
    std::string mono = detail::monomial_text(e);
    Eis c = f[i];
    bool negative = (c.b == 0 && c.a < 0) || (c.a == 0 && c.b < 0);
    std::string sep = out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (negative) c = -c;
    std::string coeff;
    if (c == Eis(1))
      coeff = mono.empty() ? "1" : "";
    else if (c.a != 0 && c.b != 0)
      coeff = "(" + to_string(c) + ")";
    else
      coeff = to_string(c);
    out += sep + coeff + (coeff.empty() || mono.empty() ? "" : "*") + mono;
  }
  return out.empty() ? "0" : out;
}

/// The ten (i0 i1 i2, scalar) slots in the fixed descending-lex order.
inline std::vector<std::pair<std::array<int, 3>, std::string>> cubic_slots(
    const TernaryForm<Eis>& f) {
  std::vector<std::pair<std::array<int, 3>, std::string>> out;
  for (int i = 0; i < f.size(); ++i)
    out.push_back({TernaryForm<Eis>::exponents(f.degree(), i), to_string(f[i])});
  return out;
}

inline std::string point_text(const PPoint<Eis>& p) {
  return "(" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + ")";
}

}  // namespace cubics
