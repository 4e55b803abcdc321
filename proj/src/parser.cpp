#include "pmahler/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

#include "pmahler/errors.hpp"

namespace pmahler {

namespace {

// Monomial: variable -> nonzero exponent.
using Monomial = std::map<std::string, long>;
using Sparse = std::map<Monomial, Rational>;

void add_term(Sparse& into, const Monomial& m, const Rational& c) {
  auto [it, inserted] = into.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Sparse add(const Sparse& a, const Sparse& b, int sign) {
  Sparse out = a;
  for (const auto& [m, c] : b) add_term(out, m, sign > 0 ? c : Rational(-c));
  return out;
}

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) {
        long& slot = m[v];
        slot += e;
        if (slot == 0) m.erase(v);
      }
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

Sparse constant(const Rational& c) {
  Sparse out;
  if (c != 0) out.emplace(Monomial{}, c);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sparse parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Sparse result = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse expr() {
    Sparse acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), +1);
      } else if (accept('-')) {
        acc = add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  Sparse term() {
    Sparse acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = multiply(acc, unary());
        continue;
      }
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        throw ParseError("implicit multiplication is not allowed", pos_);
      }
      return acc;
    }
  }

  Sparse unary() {
    if (accept('-')) return multiply(constant(-1), unary());
    if (accept('+')) return unary();
    return power();
  }

  Sparse power() {
    const std::size_t base_pos = (skip_space(), pos_);
    Sparse base = atom();
    if (!accept('^')) return base;
    const long e = exponent();
    if (e >= 0) {
      Sparse result = constant(1);
      Sparse b = base;
      unsigned long k = static_cast<unsigned long>(e);
      while (k > 0) {
        if (k & 1) result = multiply(result, b);
        k >>= 1;
        if (k > 0) b = multiply(b, b);
      }
      return result;
    }
    if (base.size() != 1) {
      throw ParseError("negative exponent applied to a non-monomial", base_pos);
    }
    const auto& [m, c] = *base.begin();
    Rational ci = 1;
    Rational cinv = Rational(1) / c;
    for (long i = 0; i < -e; ++i) ci *= cinv;
    Sparse out;
    Monomial powered;
    for (const auto& [v, k] : m) powered[v] = k * e;
    out.emplace(powered, ci);
    return out;
  }

  long exponent() {
    skip_space();
    const bool parenthesized = accept('(');
    skip_space();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected an integer exponent", pos_);
    }
    Integer value = digits();
    if (value > std::numeric_limits<int>::max()) throw ParseError("exponent too large", start);
    if (parenthesized && !accept(')')) throw ParseError("expected ')'", pos_);
    const long e = value.get_si();
    return negative ? -e : e;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Sparse atom() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      const std::size_t save = pos_;
      if (accept('/')) {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("expected denominator", pos_);
        }
        const std::size_t den_pos = pos_;
        Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        Rational q(num, den);
        q.canonicalize();
        return constant(q);
      }
      pos_ = save;
      return constant(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      Sparse out;
      out.emplace(Monomial{{std::string(text_.substr(start, pos_ - start)), 1}}, Rational(1));
      return out;
    }
    if (accept('(')) {
      Sparse inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::set<std::string> variables_of(const Sparse& s) {
  std::set<std::string> vars;
  for (const auto& [m, c] : s) {
    for (const auto& [v, e] : m) vars.insert(v);
  }
  return vars;
}

LaurentPolynomial to_laurent(const Sparse& s, const std::string& var) {
  LaurentPolynomial::Terms terms;
  for (const auto& [m, c] : s) {
    auto it = m.find(var);
    terms[it == m.end() ? 0 : it->second] += c;
  }
  return LaurentPolynomial(std::move(terms), var);
}

MultivariatePolynomial to_multivariate(const Sparse& s, const std::vector<std::string>& vars) {
  MultivariatePolynomial::Terms terms;
  for (const auto& [m, c] : s) {
    if (c.get_den() != 1) {
      throw DomainError("multivariable polynomials take integer coefficients");
    }
    MultivariatePolynomial::Exponents exps(vars.size(), 0);
    for (const auto& [v, e] : m) {
      auto it = std::find(vars.begin(), vars.end(), v);
      exps[static_cast<std::size_t>(it - vars.begin())] = e;
    }
    terms.emplace(std::move(exps), c.get_num());
  }
  return MultivariatePolynomial(vars, std::move(terms));
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) {
  const Sparse s = Parser(text).parse();
  const std::set<std::string> vars = variables_of(s);
  if (vars.size() <= 1) return to_laurent(s, vars.empty() ? "t" : *vars.begin());
  return to_multivariate(s, std::vector<std::string>(vars.begin(), vars.end()));
}

LaurentPolynomial parse_laurent(std::string_view text) {
  ParsedPolynomial parsed = parse_polynomial(text);
  if (auto* f = std::get_if<LaurentPolynomial>(&parsed)) return *f;
  throw DomainError("expected a one-variable polynomial: " + std::string(text));
}

MultivariatePolynomial parse_multivariate(std::string_view text,
                                          const std::vector<std::string>& variables) {
  const Sparse s = Parser(text).parse();
  for (const auto& v : variables_of(s)) {
    if (std::find(variables.begin(), variables.end(), v) == variables.end()) {
      const std::size_t at = text.find(v);
      throw ParseError("unknown variable '" + v + "'", at == std::string_view::npos ? 0 : at);
    }
  }
  return to_multivariate(s, variables);
}

}  // namespace pmahler
