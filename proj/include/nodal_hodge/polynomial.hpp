#pragma once

#include "nodal_hodge/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace nodal_hodge {

/// Exponent pair of x^p y^q. In a Hodge-Poincaré polynomial x tracks p and
/// y tracks q.
struct Exponent {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded lexicographic order: total degree first, then the x exponent.
struct GradedLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.p < b.p;
  }
};

/// Sparse polynomial in x, y with exact rational coefficients. No stored
/// coefficient is ever zero.
class BiPoly {
public:
  using Terms = std::map<Exponent, Rational, GradedLess>;

  BiPoly() = default;
  BiPoly(const Rational& constant);
  BiPoly(long constant) : BiPoly(Rational(constant)) {}

  static BiPoly monomial(const Rational& coefficient, int p, int q);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int p, int q) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Largest term in graded-lex order. Undefined for the zero polynomial.
  const std::pair<const Exponent, Rational>& leading_term() const { return *terms_.rbegin(); }

  /// Adds c*x^p*y^q, erasing the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  BiPoly pow(unsigned n) const;
  /// The polynomial with x and y exchanged.
  BiPoly swapped() const;
  /// Terms of total degree <= max_total_degree.
  BiPoly truncated(int max_total_degree) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical rendering: terms by ascending (total degree, p) as
  /// `c*x^p*y^q`; unit coefficients and zero exponents are dropped.
  std::string to_string() const;

private:
  Terms terms_;
};

/// Univariate polynomial in t with exact rational coefficients.
class UniPoly {
public:
  using Terms = std::map<int, Rational>;

  UniPoly() = default;
  static UniPoly monomial(const Rational& coefficient, int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int n) const;
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  void add_term(int n, const Rational& c);
  /// Value at t = 1.
  Rational sum() const;

  UniPoly& operator+=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

  /// e.g. `1 + 2t^2 + t^4`.
  std::string to_string() const;

private:
  Terms terms_;
};

BiPoly poly_mul(const BiPoly& a, const BiPoly& b);

/// Returns q with q*den == num. Eliminates leading terms in graded-lex order
/// and throws NotDivisible as soon as a leading term fails to divide.
BiPoly exact_divide(const BiPoly& num, const BiPoly& den);

/// Specialization x = y = t.
UniPoly diagonal(const BiPoly& p);

} // namespace nodal_hodge
