#include "nodal_hodge/mumford.hpp"

#include "nodal_hodge/errors.hpp"
#include "nodal_hodge/linalg.hpp"
#include "nodal_hodge/parallel.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <stdexcept>

namespace nodal_hodge::mumford {

namespace {

std::string power(const char* name, int e) {
  if (e == 0) return {};
  if (e == 1) return name;
  return fmt::format("{}^{}", name, e);
}

// Scales a row to integers by the lcm of its denominators.
std::vector<BigInt> integral_row(const std::vector<Rational>& row) {
  BigInt l = 1;
  for (const Rational& r : row) {
    if (!r.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.denominator().get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const Rational& r : row) out.push_back(r.numerator() * (l / r.denominator()));
  return out;
}

} // namespace

AbgPoly::AbgPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(AbgMonomial{}, constant);
}

AbgPoly AbgPoly::monomial(const Rational& coefficient, const AbgMonomial& m) {
  if (m.a < 0 || m.b < 0 || m.c < 0) throw std::invalid_argument("AbgPoly: negative exponent");
  AbgPoly r;
  r.add_term(m, coefficient);
  return r;
}

Rational AbgPoly::coefficient(const AbgMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AbgPoly::add_term(const AbgMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int AbgPoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  const int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d ? d : -1;
}

AbgPoly& AbgPoly::operator+=(const AbgPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AbgPoly& AbgPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

AbgPoly operator*(const AbgPoly& l, const AbgPoly& r) {
  AbgPoly out;
  for (const auto& [ml, cl] : l.terms_) {
    for (const auto& [mr, cr] : r.terms_) out.add_term({ml.a + mr.a, ml.b + mr.b, ml.c + mr.c}, cl * cr);
  }
  return out;
}

std::string AbgPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string vars;
    for (const std::string& part : {power("alpha", m.a), power("beta", m.b), power("gamma", m.c)}) {
      if (part.empty()) continue;
      if (!vars.empty()) vars += "*";
      vars += part;
    }
    const Rational magnitude = c.sign() < 0 ? -c : c;
    std::string body;
    if (vars.empty()) {
      body = magnitude.to_string();
    } else {
      body = magnitude == Rational(1) ? vars : magnitude.to_string() + "*" + vars;
    }
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

AbgPoly zagier_zeta(int k, const ZetaRecursion& rec) {
  if (k < 0) return {};
  // z[i] holds zeta_{i-2}, so z[0] = z[1] = 0.
  std::vector<AbgPoly> z(static_cast<std::size_t>(k) + 3);
  z[2] = AbgPoly(1);
  for (int j = 0; j < k; ++j) {
    const auto i = static_cast<std::size_t>(j) + 2;
    z[i + 1] = AbgPoly::alpha() * z[i] * rec.alpha_coeff(j) + AbgPoly::beta() * z[i - 1] * rec.beta_coeff(j) +
               AbgPoly::gamma() * z[i - 2] * rec.gamma_coeff(j);
  }
  return z.back();
}

std::vector<AbgPoly> ideal_generators(int k, const ZetaRecursion& rec) {
  if (k < 0) throw std::invalid_argument("ideal_generators: k must be >= 0");
  return {zagier_zeta(k, rec), zagier_zeta(k + 1, rec), zagier_zeta(k + 2, rec)};
}

std::vector<AbgMonomial> monomials_of_degree(int degree) {
  std::vector<AbgMonomial> out;
  if (degree < 0 || degree % 2 != 0) return out;
  for (int c = 0; 6 * c <= degree; ++c) {
    for (int b = 0; 6 * c + 4 * b <= degree; ++b) {
      const int rest = degree - 6 * c - 4 * b;
      out.push_back({rest / 2, b, c});
    }
  }
  std::sort(out.begin(), out.end(), AbgLess{});
  return out;
}

GradedDims quotient_dims(int k, int max_degree, const ZetaRecursion& rec) {
  if (k < 0) throw std::invalid_argument("quotient_dims: k must be >= 0");
  if (max_degree < 0) throw std::invalid_argument("quotient_dims: max_degree must be >= 0");
  const std::vector<AbgPoly> gens = ideal_generators(k, rec);
  const int slices = max_degree / 2 + 1;
  std::vector<Dim> dims(static_cast<std::size_t>(slices), 0);

  parallel_for(static_cast<std::size_t>(slices), [&](std::size_t s) {
    const int degree = 2 * static_cast<int>(s);
    const auto basis = monomials_of_degree(degree);
    std::map<AbgMonomial, std::size_t, AbgLess> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

    std::vector<std::vector<BigInt>> rows;
    for (const AbgPoly& gen : gens) {
      if (gen.is_zero()) continue;
      const int gd = gen.homogeneous_degree();
      if (gd < 0) throw InvariantViolation("quotient_dims: generator is not homogeneous");
      if (gd > degree) continue;
      for (const AbgMonomial& m : monomials_of_degree(degree - gd)) {
        const AbgPoly product = AbgPoly::monomial(1, m) * gen;
        std::vector<Rational> row(basis.size());
        for (const auto& [pm, pc] : product.terms()) row[column.at(pm)] = pc;
        rows.push_back(integral_row(row));
      }
    }
    const std::size_t r = linalg::rank_fraction_free(std::move(rows));
    dims[s] = static_cast<Dim>(basis.size() - r);
  });

  GradedDims out;
  for (int s = 0; s < slices; ++s) out.add(2 * s, dims[static_cast<std::size_t>(s)]);
  return out;
}

int quotient_top_degree(int k) { return k <= 1 ? 0 : 6 * (k - 1); }

BiPoly hodge_poly_of(const GradedDims& dims) {
  BiPoly r;
  for (const auto& [d, n] : dims.entries()) {
    if (d % 2 != 0) throw OddDegreePresent(fmt::format("class in odd degree {}", d));
    r.add_term({d / 2, d / 2}, Rational(n));
  }
  return r;
}

BiPoly quotient_hodge_poly(int k, int max_degree, const ZetaRecursion& rec) {
  return hodge_poly_of(quotient_dims(k, max_degree, rec));
}

} // namespace nodal_hodge::mumford
