#include "pmahler/laurent.hpp"

#include <sstream>

#include "pmahler/errors.hpp"

namespace pmahler {

LaurentPolynomial::LaurentPolynomial(Terms terms, std::string variable)
    : terms_(std::move(terms)), variable_(std::move(variable)) {
  prune();
}

LaurentPolynomial LaurentPolynomial::constant(const Rational& c, std::string variable) {
  return monomial(c, 0, std::move(variable));
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, long exponent,
                                              std::string variable) {
  LaurentPolynomial out(std::move(variable));
  if (c != 0) out.terms_.emplace(exponent, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::from_ascending(const std::vector<Integer>& a,
                                                    std::string variable) {
  LaurentPolynomial out(std::move(variable));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) out.terms_.emplace(static_cast<long>(i), Rational(a[i]));
  }
  return out;
}

bool LaurentPolynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw DomainError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw DomainError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

const Rational& LaurentPolynomial::leading_coefficient() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

const Rational& LaurentPolynomial::trailing_coefficient() const {
  if (is_zero()) throw DomainError("zero polynomial has no trailing coefficient");
  return terms_.begin()->second;
}

Rational LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPolynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::vector<Integer> LaurentPolynomial::dense_integer_coefficients() const {
  if (!has_integer_coefficients()) throw DomainError("polynomial has non-integer coefficients");
  const long lo = min_exponent();
  std::vector<Integer> out(static_cast<std::size_t>(max_exponent() - lo + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c.get_num();
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (min_exponent() < 0) throw DomainError("negative power of zero");
    return coefficient(0);
  }
  // Horner on the ordinary part, then the t^min factor.
  const long lo = min_exponent();
  Rational acc = 0;
  long last = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (long k = last; k > it->first; --k) acc *= x;
    acc += it->second;
    last = it->first;
  }
  Rational scale = 1;
  Rational base = lo < 0 ? Rational(1) / x : x;
  for (long k = 0; k < (lo < 0 ? -lo : lo); ++k) scale *= base;
  return acc * scale;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial out(variable_);
  for (const auto& [e, c] : terms_) {
    if (e != 0) out.terms_.emplace(e - 1, c * e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out(variable_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long k) const {
  LaurentPolynomial result = constant(1, variable_);
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::with_variable(std::string variable) const {
  LaurentPolynomial out = *this;
  out.variable_ = std::move(variable);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void LaurentPolynomial::merge_variable(const LaurentPolynomial& other) {
  if (variable_ == other.variable_) return;
  if (other.is_constant()) return;
  if (is_constant()) {
    variable_ = other.variable_;
    return;
  }
  throw DomainError("variable mismatch: " + variable_ + " vs " + other.variable_);
}

void LaurentPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  merge_variable(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  merge_variable(other);
  Terms product;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) product[e1 + e2] += c1 * c2;
  }
  terms_ = std::move(product);
  prune();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_ != b.terms_) return false;
  return a.variable_ == b.variable_ || a.is_constant();
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << pmahler::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << pmahler::to_string(magnitude) << "*";
    out << variable_;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPolynomial normalize(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("cannot normalize the zero polynomial");
  LaurentPolynomial out = f.shifted(-f.min_exponent());
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

std::pair<Integer, LaurentPolynomial> content_and_primitive(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  if (!f.has_integer_coefficients()) throw DomainError("content requires integer coefficients");
  Integer g = 0;
  for (const auto& [e, c] : f.terms()) g = gcd(g, Integer(c.get_num()));
  Rational inverse(Integer(1), g);
  inverse.canonicalize();
  LaurentPolynomial primitive = f * inverse;
  return {g, primitive};
}

LaurentPolynomial nu_polynomial(unsigned long n, std::string variable) {
  if (n == 0) throw DomainError("nu_0 is undefined");
  LaurentPolynomial::Terms terms;
  for (unsigned long i = 0; i < n; ++i) terms.emplace_hint(terms.end(), static_cast<long>(i), 1);
  return LaurentPolynomial(std::move(terms), std::move(variable));
}

namespace {

void require_ordinary(const LaurentPolynomial& f, const char* what) {
  if (!f.is_zero() && f.min_exponent() < 0) {
    throw DomainError(std::string(what) + " requires an ordinary polynomial");
  }
}

LaurentPolynomial make_monic(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading_coefficient());
}

}  // namespace

std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial& a,
                                                       const LaurentPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  require_ordinary(a, "divmod");
  require_ordinary(b, "divmod");
  const std::string& var = a.is_constant() ? b.variable() : a.variable();
  LaurentPolynomial quotient(var);
  LaurentPolynomial remainder = a;
  const long db = b.max_exponent();
  const Rational& lb = b.leading_coefficient();
  while (!remainder.is_zero() && remainder.max_exponent() >= db) {
    const long shift = remainder.max_exponent() - db;
    const Rational factor = remainder.leading_coefficient() / lb;
    LaurentPolynomial term = LaurentPolynomial::monomial(factor, shift, var);
    quotient += term;
    remainder -= b * term;
  }
  return {quotient, remainder};
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial x = a;
  LaurentPolynomial y = b;
  while (!y.is_zero()) {
    LaurentPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

LaurentPolynomial taylor_shift(const LaurentPolynomial& f, const Rational& c) {
  require_ordinary(f, "taylor_shift");
  // Horner in the shifted variable.
  const LaurentPolynomial linear =
      LaurentPolynomial::monomial(1, 1, f.variable()) + LaurentPolynomial::constant(c);
  LaurentPolynomial acc(f.variable());
  if (f.is_zero()) return acc;
  for (long e = f.max_exponent(); e >= 0; --e) {
    acc = acc * linear + LaurentPolynomial::constant(f.coefficient(e));
  }
  return acc.with_variable(f.variable());
}

std::vector<std::pair<LaurentPolynomial, unsigned>> squarefree_decomposition(
    const LaurentPolynomial& f) {
  require_ordinary(f, "squarefree_decomposition");
  if (f.is_zero() || f.max_exponent() == 0) {
    throw DomainError("square-free decomposition needs a nonconstant polynomial");
  }
  std::vector<std::pair<LaurentPolynomial, unsigned>> out;
  LaurentPolynomial a = make_monic(f);
  LaurentPolynomial da = a.derivative();
  LaurentPolynomial g = gcd(a, da);
  LaurentPolynomial b = divmod(a, g).first;
  LaurentPolynomial c = divmod(da, g).first;
  LaurentPolynomial d = c - b.derivative();
  unsigned multiplicity = 1;
  while (!(b.is_constant())) {
    LaurentPolynomial h = gcd(b, d);
    if (!h.is_constant()) out.emplace_back(h.with_variable(f.variable()), multiplicity);
    b = divmod(b, h).first;
    c = divmod(d, h).first;
    d = c - b.derivative();
    ++multiplicity;
  }
  return out;
}

std::pair<unsigned, LaurentPolynomial> split_unit_root(const LaurentPolynomial& f) {
  if (f.is_zero()) throw DomainError("zero polynomial has every root");
  const long k = f.min_exponent();
  LaurentPolynomial g = f.shifted(-k);
  const LaurentPolynomial t_minus_1 =
      LaurentPolynomial::monomial(1, 1, f.variable()) - LaurentPolynomial::constant(1);
  unsigned multiplicity = 0;
  while (g.evaluate(1) == 0) {
    g = divmod(g, t_minus_1).first;
    ++multiplicity;
  }
  return {multiplicity, g.shifted(k).with_variable(f.variable())};
}

}  // namespace pmahler
