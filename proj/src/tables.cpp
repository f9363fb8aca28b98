#include "nodal_hodge/tables.hpp"

#include "nodal_hodge/errors.hpp"

#include <fmt/core.h>

#include <algorithm>

namespace nodal_hodge {

namespace {

template <typename Map, typename Key>
void add_checked(Map& entries, const Key& key, Dim d, const char* what) {
  if (d == 0) return;
  auto [it, inserted] = entries.try_emplace(key, 0);
  const Dim value = it->second + d;
  if (value < 0) {
    if (inserted) entries.erase(it);
    throw NegativeDimension(fmt::format("{}: dimension would become {}", what, value));
  }
  if (value == 0) {
    entries.erase(it);
  } else {
    it->second = value;
  }
}

template <typename Map>
Dim sum_values(const Map& entries) {
  Dim s = 0;
  for (const auto& [k, v] : entries) s += v;
  return s;
}

} // namespace

Dim to_dim(const Rational& r) {
  if (!r.is_integer() || r.sign() < 0 || !r.numerator().fits_slong_p()) {
    throw InvariantViolation("coefficient " + r.to_string() + " is not a dimension");
  }
  return r.numerator().get_si();
}

HodgeTable HodgeTable::from_poly(const BiPoly& poly) {
  HodgeTable t;
  for (const auto& [e, c] : poly.terms()) t.add(e.p, e.q, to_dim(c));
  return t;
}

Dim HodgeTable::get(int p, int q) const {
  auto it = entries_.find({p, q});
  return it == entries_.end() ? 0 : it->second;
}

void HodgeTable::add(int p, int q, Dim d) { add_checked(entries_, std::pair{p, q}, d, "HodgeTable"); }

Dim HodgeTable::total() const { return sum_values(entries_); }

bool HodgeTable::is_symmetric() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& kv) { return get(kv.first.second, kv.first.first) == kv.second; });
}

HodgeTable HodgeTable::twisted(int j) const {
  HodgeTable t;
  for (const auto& [pq, d] : entries_) t.entries_.emplace(std::pair{pq.first + j, pq.second + j}, d);
  return t;
}

BiPoly HodgeTable::to_poly() const {
  BiPoly r;
  for (const auto& [pq, d] : entries_) r.add_term({pq.first, pq.second}, Rational(d));
  return r;
}

std::vector<Dim> HodgeTable::betti() const {
  std::vector<Dim> b;
  for (const auto& [pq, d] : entries_) {
    const auto n = static_cast<std::size_t>(pq.first + pq.second);
    if (b.size() <= n) b.resize(n + 1, 0);
    b[n] += d;
  }
  return b;
}

HodgeTable operator*(const HodgeTable& a, const HodgeTable& b) {
  HodgeTable t;
  for (const auto& [pa, da] : a.entries_) {
    for (const auto& [pb, db] : b.entries_) t.add(pa.first + pb.first, pa.second + pb.second, da * db);
  }
  return t;
}

Dim GradedDims::get(int degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? 0 : it->second;
}

void GradedDims::add(int degree, Dim d) { add_checked(entries_, degree, d, "GradedDims"); }

Dim GradedDims::total() const { return sum_values(entries_); }

std::vector<Dim> GradedDims::dense(int length) const {
  std::vector<Dim> v(static_cast<std::size_t>(std::max(length, 0)), 0);
  for (const auto& [d, n] : entries_) {
    if (d >= 0 && d < length) v[static_cast<std::size_t>(d)] = n;
  }
  return v;
}

Dim WeightedDims::get(int degree, int weight) const {
  auto it = entries_.find({degree, weight});
  return it == entries_.end() ? 0 : it->second;
}

void WeightedDims::add(int degree, int weight, Dim d) {
  add_checked(entries_, std::pair{degree, weight}, d, "WeightedDims");
}

Dim WeightedDims::total() const { return sum_values(entries_); }

GradedDims WeightedDims::by_degree() const {
  GradedDims g;
  for (const auto& [dw, d] : entries_) g.add(dw.first, d);
  return g;
}

UniPoly WeightedDims::weight_diagonal() const {
  UniPoly u;
  for (const auto& [dw, d] : entries_) u.add_term(dw.second, Rational(d));
  return u;
}

Dim MixedTable::get(int n, int w, int p, int q) const {
  auto it = entries_.find({n, w, p, q});
  return it == entries_.end() ? 0 : it->second;
}

void MixedTable::add(const MixedKey& key, Dim d) {
  if (d != 0 && (key.p < 0 || key.q < 0)) throw InvariantViolation("MixedTable: negative Hodge index");
  add_checked(entries_, key, d, "MixedTable");
}

Dim MixedTable::total() const { return sum_values(entries_); }

WeightedDims MixedTable::marginals() const {
  WeightedDims m;
  for (const auto& [k, d] : entries_) m.add(k.n, k.w, d);
  return m;
}

BiPoly MixedTable::collapse() const {
  BiPoly r;
  for (const auto& [k, d] : entries_) r.add_term({k.p, k.q}, Rational(d));
  return r;
}

std::vector<Dim> MixedTable::betti() const {
  const GradedDims g = marginals().by_degree();
  return g.dense(g.top_degree() + 1);
}

bool MixedTable::is_symmetric() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& kv) { return get(kv.first.n, kv.first.w, kv.first.q, kv.first.p) == kv.second; });
}

bool MixedTable::weights_match_types() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.first.p + kv.first.q == kv.first.w; });
}

} // namespace nodal_hodge
