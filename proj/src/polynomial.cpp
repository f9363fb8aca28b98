#include "nodal_hodge/polynomial.hpp"

#include "nodal_hodge/errors.hpp"

#include <fmt/core.h>

#include <stdexcept>

namespace nodal_hodge {

namespace {

// Coefficient prefix for a non-constant term whose sign is printed separately.
std::string magnitude_prefix(const Rational& magnitude, bool constant_term) {
  if (constant_term) return magnitude.to_string();
  if (magnitude == Rational(1)) return {};
  return magnitude.to_string() + "*";
}

std::string variable_power(char name, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return std::string(1, name);
  return fmt::format("{}^{}", name, exponent);
}

template <typename Term>
void append_signed(std::string& out, const Rational& c, bool first, const Term& body) {
  if (first) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  out += body;
}

} // namespace

BiPoly::BiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponent{0, 0}, constant);
}

BiPoly BiPoly::monomial(const Rational& coefficient, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly r;
  r.add_term({p, q}, coefficient);
  return r;
}

Rational BiPoly::coefficient(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

void BiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly result(1);
  BiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.q, e.p}, c);
  return r;
}

BiPoly BiPoly::truncated(int max_total_degree) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.total() > max_total_degree) break;
    r.terms_.emplace(e, c);
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.p + eb.p, ea.q + eb.q}, ca * cb);
    }
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant = e.p == 0 && e.q == 0;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    std::string body = magnitude_prefix(magnitude, constant);
    const std::string xs = variable_power('x', e.p);
    const std::string ys = variable_power('y', e.q);
    body += xs;
    if (!xs.empty() && !ys.empty()) body += "*";
    body += ys;
    append_signed(out, c, first, body);
    first = false;
  }
  return out;
}

UniPoly UniPoly::monomial(const Rational& coefficient, int n) {
  UniPoly r;
  r.add_term(n, coefficient);
  return r;
}

Rational UniPoly::coefficient(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UniPoly::add_term(int n, const Rational& c) {
  if (n < 0) throw std::invalid_argument("UniPoly: negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational UniPoly::sum() const {
  Rational s;
  for (const auto& [n, c] : terms_) s += c;
  return s;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [na, ca] : a.terms_) {
    for (const auto& [nb, cb] : b.terms_) r.add_term(na + nb, ca * cb);
  }
  return r;
}

std::string UniPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    const Rational magnitude = c.sign() < 0 ? -c : c;
    std::string body;
    if (n == 0 || magnitude != Rational(1)) body = magnitude.to_string();
    if (n == 1) body += "t";
    if (n > 1) body += fmt::format("t^{}", n);
    append_signed(out, c, first, body);
    first = false;
  }
  return out;
}

BiPoly poly_mul(const BiPoly& a, const BiPoly& b) { return a * b; }

BiPoly exact_divide(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  const auto& [lead_exp, lead_coeff] = den.leading_term();
  BiPoly quotient;
  BiPoly remainder = num;
  while (!remainder.is_zero()) {
    const auto& [re, rc] = remainder.leading_term();
    if (re.p < lead_exp.p || re.q < lead_exp.q) {
      throw NotDivisible(fmt::format("exact_divide: leading term x^{}*y^{} of remainder is not divisible by x^{}*y^{}",
                                     re.p, re.q, lead_exp.p, lead_exp.q));
    }
    const BiPoly step = BiPoly::monomial(rc / lead_coeff, re.p - lead_exp.p, re.q - lead_exp.q);
    quotient += step;
    remainder -= step * den;
  }
  return quotient;
}

UniPoly diagonal(const BiPoly& p) {
  UniPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.total(), c);
  return r;
}

} // namespace nodal_hodge
