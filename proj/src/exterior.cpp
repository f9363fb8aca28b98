#include "nodal_hodge/exterior.hpp"

#include "nodal_hodge/errors.hpp"
#include "nodal_hodge/linalg.hpp"
#include "nodal_hodge/mumford.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nodal_hodge::exterior {

namespace {

constexpr int kMaxGenerators = 64;

void check_generators(int n) {
  if (n < 0 || n > kMaxGenerators) throw std::invalid_argument(fmt::format("exterior: {} generators unsupported", n));
}

// k-subsets of {1..n} as masks, in lexicographic order of their index lists.
std::vector<ExtMonomial> subsets(int n, int k) {
  std::vector<ExtMonomial> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(ExtMonomial::from_indices(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

ExtElement power(const ExtElement& e, int m) {
  ExtElement r = ExtElement::one(e.generators());
  for (int i = 0; i < m; ++i) r = ext_mul(r, e);
  return r;
}

// Matrix of right multiplication by `op` from span(columns) to the exterior algebra.
linalg::SparseMatrix multiplication_matrix(const std::vector<ExtMonomial>& columns, const ExtElement& op) {
  std::map<ExtMonomial, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const ExtElement image = ext_mul(ExtElement::monomial(op.generators(), columns[c]), op);
    for (const auto& [m, v] : image.terms()) {
      auto [it, inserted] = row_of.try_emplace(m, row_of.size());
      entries[c].emplace_back(it->second, v);
    }
  }
  linalg::SparseMatrix matrix(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : entries[c]) matrix.add(r, c, v);
  }
  return matrix;
}

HodgeTable h3_table(int h) {
  HodgeTable t;
  t.add(2, 1, h);
  t.add(1, 2, h);
  return t;
}

} // namespace

ExtMonomial ExtMonomial::from_indices(const std::vector<int>& indices) {
  ExtMonomial m;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) throw std::invalid_argument(fmt::format("ExtMonomial: index {} out of range", i));
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (m.mask & bit) throw std::invalid_argument(fmt::format("ExtMonomial: repeated index {}", i));
    m.mask |= bit;
  }
  return m;
}

std::vector<int> ExtMonomial::indices() const {
  std::vector<int> out;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

int ExtMonomial::size() const { return std::popcount(mask); }

int ExtMonomial::weight(int genus) const {
  return degree() - (contains(genus) ? 1 : 0) + (contains(2 * genus) ? 1 : 0);
}

bool ExtMonomial::admissible(int genus) const { return !contains(2 * genus) || contains(genus); }

int koszul_sign(ExtMonomial a, ExtMonomial b) {
  if (a.mask & b.mask) return 0;
  int inversions = 0;
  for (std::uint64_t rest = b.mask; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint64_t above = j == 63 ? 0 : (a.mask >> (j + 1));
    inversions += std::popcount(above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExtElement ExtElement::one(int generators) { return monomial(generators, ExtMonomial{}); }

ExtElement ExtElement::generator(int generators, int i) {
  if (i < 1 || i > generators) throw std::invalid_argument(fmt::format("psi_{} out of range", i));
  return monomial(generators, ExtMonomial::from_indices({i}));
}

ExtElement ExtElement::monomial(int generators, const ExtMonomial& m, const Rational& c) {
  check_generators(generators);
  if (generators < 64 && (m.mask >> generators) != 0) throw std::invalid_argument("ExtElement: index out of range");
  ExtElement e(generators);
  e.add_term(m, c);
  return e;
}

Rational ExtElement::coefficient(const ExtMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtElement::add_term(const ExtMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  if (o.generators_ != generators_) throw std::invalid_argument("ExtElement: generator counts differ");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

std::string ExtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string vars;
    for (int i : m.indices()) vars += (vars.empty() ? "" : "*") + fmt::format("psi_{}", i);
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

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  if (a.generators() != b.generators()) throw std::invalid_argument("ext_mul: generator counts differ");
  ExtElement r(a.generators());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = koszul_sign(ma, mb);
      if (s == 0) continue;
      r.add_term(ExtMonomial{ma.mask | mb.mask}, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return r;
}

ExtElement symplectic_form(int h) {
  check_generators(2 * h);
  ExtElement form(2 * h);
  for (int i = 1; i <= h; ++i) form += ExtElement::monomial(2 * h, ExtMonomial::from_indices({i, i + h}));
  return form;
}

Dim primitive_dim(int h, int k) {
  if (h < 1) throw std::invalid_argument("primitive_dim: h must be >= 1");
  if (k < 0 || k > h) return 0;
  const auto columns = subsets(2 * h, k);
  const ExtElement op = power(symplectic_form(h), h - k + 1);
  const auto matrix = multiplication_matrix(columns, op);
  return static_cast<Dim>(columns.size() - linalg::rank(matrix));
}

HodgeTable wedge_table(const HodgeTable& v, int k) {
  if (k < 0) throw std::invalid_argument("wedge_table: k must be >= 0");
  std::vector<BiPoly> z(static_cast<std::size_t>(k) + 1);
  z[0] = BiPoly(1);
  for (const auto& [pq, mult] : v.entries()) {
    const BiPoly factor = BiPoly::monomial(1, pq.first, pq.second);
    for (Dim copy = 0; copy < mult; ++copy) {
      for (std::size_t j = z.size() - 1; j >= 1; --j) z[j] += factor * z[j - 1];
    }
  }
  return HodgeTable::from_poly(z.back());
}

HodgeTable primitive_hodge_table(int h, int k) {
  if (k < 0 || k > h) return {};
  const HodgeTable v = h3_table(h);
  HodgeTable t = wedge_table(v, k);
  if (k >= 2) {
    const HodgeTable lower = wedge_table(v, k - 2).twisted(3);
    for (const auto& [pq, d] : lower.entries()) t.add(pq.first, pq.second, -d);
  }
  return t;
}

PinfSpace pinf_space(int g, int i) {
  if (g < 2) throw std::invalid_argument("pinf_space: g must be >= 2");
  if (i < 0 || i > 2 * g) throw std::invalid_argument("pinf_space: i must lie in [0, 2g]");
  PinfSpace out;
  if (i > g) return out;
  std::vector<ExtMonomial> columns;
  for (const ExtMonomial& m : subsets(2 * g, i)) {
    if (m.admissible(g)) columns.push_back(m);
  }
  const ExtElement op = power(symplectic_form(g), g - i + 1);
  for (const auto& v : linalg::nullspace(multiplication_matrix(columns, op))) {
    ExtElement e(2 * g);
    int weight = -1;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (v[c].is_zero()) continue;
      e.add_term(columns[c], v[c]);
      const int w = columns[c].weight(g);
      if (weight >= 0 && w != weight) throw InvariantViolation("pinf_space: kernel vector mixes weights");
      weight = w;
    }
    out.wdims.add(3 * i, weight, 1);
    out.basis.push_back(std::move(e));
  }
  return out;
}

std::string KnMonomial::to_string() const {
  std::vector<std::string> parts;
  if (j1 == 1) parts.emplace_back("alpha");
  if (j1 > 1) parts.push_back(fmt::format("alpha^{}", j1));
  if (j2 == 1) parts.emplace_back("beta");
  if (j2 > 1) parts.push_back(fmt::format("beta^{}", j2));
  for (int i : psi.indices()) parts.push_back(fmt::format("psi_{}", i));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t p = 1; p < parts.size(); ++p) out += "*" + parts[p];
  return out;
}

std::vector<KnMonomial> kn_basis(int h, int n) {
  if (h < 1) throw std::invalid_argument("kn_basis: h must be >= 1");
  std::vector<KnMonomial> out;
  for (int k = 0; k < h && 3 * k <= n; ++k) {
    const int rest = n - 3 * k;
    if (rest % 2 != 0) continue;
    const auto psis = subsets(2 * h, k);
    for (int j2 = 0; 4 * j2 <= rest && j2 + k < h; ++j2) {
      const int j1 = (rest - 4 * j2) / 2;
      if (j1 + k >= h) continue;
      for (const ExtMonomial& m : psis) out.push_back({j1, j2, m});
    }
  }
  return out;
}

GradedDims mumford_model_dims(int h) {
  if (h < 2) throw std::invalid_argument("mumford_model_dims: h must be >= 2");
  GradedDims out;
  for (int k = 0; k <= h; ++k) {
    const Dim p = primitive_dim(h, k);
    const GradedDims q = mumford::quotient_dims(h - k, mumford::quotient_top_degree(h - k));
    for (const auto& [d, n] : q.entries()) out.add(d + 3 * k, p * n);
  }
  return out;
}

BiPoly mumford_model_hp(int h) {
  if (h < 2) throw std::invalid_argument("mumford_model_hp: h must be >= 2");
  BiPoly out;
  for (int k = 0; k <= h; ++k) {
    const GradedDims q = mumford::quotient_dims(h - k, mumford::quotient_top_degree(h - k));
    out += primitive_hodge_table(h, k).to_poly() * mumford::hodge_poly_of(q);
  }
  return out;
}

WeightedDims simpson_model_wdims(int g) {
  if (g < 2) throw std::invalid_argument("simpson_model_wdims: g must be >= 2");
  WeightedDims out;
  for (int i = 0; i <= g; ++i) {
    const PinfSpace pinf = pinf_space(g, i);
    const GradedDims q = mumford::quotient_dims(g - i, mumford::quotient_top_degree(g - i));
    for (const auto& [dw, d] : pinf.wdims.entries()) {
      for (const auto& [qd, qn] : q.entries()) out.add(dw.first + qd, dw.second + qd, d * qn);
    }
  }
  return out;
}

} // namespace nodal_hodge::exterior
