#pragma once

#include "nodal_hodge/polynomial.hpp"
#include "nodal_hodge/rational.hpp"
#include "nodal_hodge/tables.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nodal_hodge::mumford {

/// alpha^a beta^b gamma^c, degrees 2, 4, 6.
struct AbgMonomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return 2 * a + 4 * b + 6 * c; }
  /// Every class has type (p, p) with p = degree / 2.
  int hodge_p() const { return a + 2 * b + 3 * c; }

  friend bool operator==(const AbgMonomial&, const AbgMonomial&) = default;
};

/// Graded lex with alpha < beta < gamma: degree, then c, then b, then a.
struct AbgLess {
  bool operator()(const AbgMonomial& l, const AbgMonomial& r) const {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    if (l.c != r.c) return l.c < r.c;
    if (l.b != r.b) return l.b < r.b;
    return l.a < r.a;
  }
};

class AbgPoly {
public:
  using Terms = std::map<AbgMonomial, Rational, AbgLess>;

  AbgPoly() = default;
  AbgPoly(const Rational& constant);
  AbgPoly(long constant) : AbgPoly(Rational(constant)) {}
  static AbgPoly monomial(const Rational& coefficient, const AbgMonomial& m);
  static AbgPoly alpha() { return monomial(1, {1, 0, 0}); }
  static AbgPoly beta() { return monomial(1, {0, 1, 0}); }
  static AbgPoly gamma() { return monomial(1, {0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const AbgMonomial& m) const;
  void add_term(const AbgMonomial& m, const Rational& c);
  /// Degree if every term has the same degree, -1 otherwise (and for 0).
  int homogeneous_degree() const;

  AbgPoly& operator+=(const AbgPoly& o);
  AbgPoly& operator*=(const Rational& s);
  friend AbgPoly operator+(AbgPoly a, const AbgPoly& b) { return a += b; }
  friend AbgPoly operator*(AbgPoly a, const Rational& s) { return a *= s; }
  friend AbgPoly operator*(const AbgPoly& a, const AbgPoly& b);
  friend bool operator==(const AbgPoly& a, const AbgPoly& b) { return a.terms_ == b.terms_; }

  /// e.g. `alpha^3 + 5*alpha*beta + 4*gamma`, ascending in the monomial order.
  std::string to_string() const;

private:
  Terms terms_;
};

/// Coefficients of zeta_{k+1} = A(k) alpha zeta_k + B(k) beta zeta_{k-1}
/// + C(k) gamma zeta_{k-2}. The defaults give the Mumford relations; tests
/// swap them out to inject faults.
struct ZetaRecursion {
  std::function<Rational(int)> alpha_coeff = [](int) { return Rational(1); };
  std::function<Rational(int)> beta_coeff = [](int k) { return Rational(static_cast<long>(k) * k); };
  std::function<Rational(int)> gamma_coeff = [](int k) { return Rational(2L * k * (k - 1)); };
};

/// zeta_k; zero for k < 0, 1 for k = 0.
AbgPoly zagier_zeta(int k, const ZetaRecursion& rec = {});

/// [zeta_k, zeta_{k+1}, zeta_{k+2}].
std::vector<AbgPoly> ideal_generators(int k, const ZetaRecursion& rec = {});

/// All monomials of the given degree, ascending.
std::vector<AbgMonomial> monomials_of_degree(int degree);

/// Hilbert function of Q[alpha,beta,gamma]/I_k in degrees 0..max_degree.
GradedDims quotient_dims(int k, int max_degree, const ZetaRecursion& rec = {});

/// Degree at or below which the quotient by I_k lives: 6(k-1), or 0 for k <= 1.
int quotient_top_degree(int k);

/// quotient_dims with every degree-d class placed at x^{d/2} y^{d/2}.
BiPoly quotient_hodge_poly(int k, int max_degree, const ZetaRecursion& rec = {});

/// Same, from precomputed dims. Throws OddDegreePresent on an odd degree.
BiPoly hodge_poly_of(const GradedDims& dims);

} // namespace nodal_hodge::mumford
