#include "nodal_hodge/errors.hpp"
#include "nodal_hodge/polynomial.hpp"
#include "nodal_hodge/ratfun.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace nodal_hodge;

namespace {

BiPoly m(long c, int p, int q) { return BiPoly::monomial(c, p, q); }

BiPoly random_poly(std::mt19937_64& rng, int max_exp = 4, int max_terms = 6) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<long> c(-7, 7);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> n(0, max_terms);
  BiPoly p;
  const int terms = n(rng);
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng)}, Rational(BigInt(c(rng)), BigInt(den(rng))));
  return p;
}

} // namespace

TEST_CASE("rational normal form") {
  CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
  CHECK(Rational(BigInt(0), BigInt(5)).denominator() == 1);
  CHECK(Rational(BigInt(4), BigInt(2)).is_integer());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(BigInt(1), BigInt(3)) + Rational(BigInt(1), BigInt(6)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-2) < Rational(BigInt(1), BigInt(3)));
  std::ostringstream os;
  os << Rational(BigInt(-7), BigInt(3));
  CHECK(os.str() == "-7/3");
}

TEST_CASE("poly_mul") {
  const BiPoly one_x = BiPoly(1) + BiPoly::x();
  const BiPoly one_y = BiPoly(1) + BiPoly::y();
  CHECK(poly_mul(one_x, one_y) == BiPoly(1) + BiPoly::x() + BiPoly::y() + m(1, 1, 1));
  CHECK(poly_mul(BiPoly(1) - m(1, 1, 1), BiPoly(1) + m(1, 1, 1) + m(1, 2, 2)) == BiPoly(1) - m(1, 3, 3));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const BiPoly p = random_poly(rng);
    CHECK(poly_mul(p, BiPoly(1)) == p);
    CHECK(poly_mul(p, BiPoly()).is_zero());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const BiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const BiPoly ab = a * b;
    for (const auto& [e, coeff] : ab.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(BiPoly(1) - m(1, 3, 3), BiPoly(1) - m(1, 1, 1)) == BiPoly(1) + m(1, 1, 1) + m(1, 2, 2));
  CHECK_THROWS_AS(exact_divide(BiPoly(1) + BiPoly::x(), BiPoly(1) + BiPoly::y()), NotDivisible);
  CHECK_THROWS_AS(exact_divide(BiPoly(1), BiPoly()), std::invalid_argument);
  CHECK(exact_divide(BiPoly(), BiPoly::x()).is_zero());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const BiPoly a = random_poly(rng);
    const BiPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("exact_divide rejects a nonzero remainder") {
  // x^2 + 1 is not a multiple of x + 1 over Q[x, y]
  CHECK_THROWS_AS(exact_divide(m(1, 2, 0) + BiPoly(1), BiPoly::x() + BiPoly(1)), NotDivisible);
  CHECK_THROWS_AS(exact_divide((BiPoly(1) + BiPoly::x()) * BiPoly::y() + BiPoly(1), BiPoly(1) + BiPoly::x()),
                  NotDivisible);
}

TEST_CASE("rendering") {
  CHECK(BiPoly().to_string() == "0");
  CHECK(BiPoly(Rational(BigInt(-3), BigInt(2))).to_string() == "-3/2");
  CHECK((BiPoly(1) + m(2, 1, 2) - m(1, 2, 1) + m(1, 1, 0)).to_string() == "1 + x + 2*x*y^2 - x^2*y");
  CHECK((m(-1, 0, 1) + BiPoly::monomial(Rational(BigInt(1), BigInt(3)), 3, 3)).to_string() == "-y + 1/3*x^3*y^3");
  UniPoly u = UniPoly::monomial(1, 0) + UniPoly::monomial(2, 2) + UniPoly::monomial(-1, 1);
  CHECK(u.to_string() == "1 - t + 2t^2");
  CHECK(UniPoly().to_string() == "0");
}

TEST_CASE("diagonal") {
  CHECK(diagonal(BiPoly::x() + BiPoly::y()) == UniPoly::monomial(2, 1));
  CHECK(diagonal(m(1, 2, 1)) == UniPoly::monomial(1, 3));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const BiPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(diagonal(a * b) == diagonal(a) * diagonal(b));
    CHECK(diagonal(a + b) == diagonal(a) + diagonal(b));
  }
}

TEST_CASE("expand_truncated") {
  const StructuredRatFun unit(BiPoly(1));
  CHECK(expand_truncated(unit, 4) == BiPoly(1) + m(1, 1, 1) + m(2, 2, 2));
  CHECK(expand_truncated(StructuredRatFun(BiPoly()), 6).is_zero());
  CHECK(expand_truncated(unit, 0) == BiPoly(1));
  CHECK_THROWS_AS(expand_truncated(unit, -1), std::invalid_argument);

  // geometric series product oracle: coefficient of u^n is floor(n/2) + 1
  const BiPoly series = expand_truncated(unit, 20);
  for (int n = 0; n <= 10; ++n) CHECK(series.coefficient(n, n) == Rational(n / 2 + 1));
}

TEST_CASE("expand_truncated agrees with exact division") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const BiPoly q = random_poly(rng);
    const StructuredRatFun f(q * StructuredRatFun::denominator());
    CHECK(f.exact_quotient() == q);
    for (int d : {0, 3, 7, 12}) CHECK(expand_truncated(f, d) == q.truncated(d));
  }
}

TEST_CASE("swapped and pow") {
  const BiPoly p = BiPoly(1) + m(3, 2, 1);
  CHECK(p.swapped() == BiPoly(1) + m(3, 1, 2));
  CHECK(p.pow(0) == BiPoly(1));
  CHECK(p.pow(3) == p * p * p);
  CHECK(p.total_degree() == 3);
  CHECK(BiPoly().total_degree() == -1);
}
