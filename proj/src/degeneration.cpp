#include "nodal_hodge/degeneration.hpp"

#include "nodal_hodge/closed_forms.hpp"
#include "nodal_hodge/errors.hpp"
#include "nodal_hodge/linalg.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <stdexcept>

namespace nodal_hodge::degeneration {

namespace {

Dim at(const std::vector<Dim>& v, int q) {
  return q >= 0 && q < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(q)] : 0;
}

Dim rank_at(const std::map<int, Dim>& ranks, int q) {
  auto it = ranks.find(q);
  return it == ranks.end() ? 0 : it->second;
}

void require_genus(int g, const char* who) {
  if (g < 2) throw std::invalid_argument(fmt::format("{}: genus must be >= 2, got {}", who, g));
}

HodgeTable base_table(int g) { return HodgeTable::from_poly(closed_forms::base_hp(g)); }

} // namespace

SncInput SncInput::curve(int genus) {
  require_genus(genus, "SncInput::curve");
  SncInput in;
  in.y1 = {1, 0, 1};
  in.y2 = {1, 2 * (genus - 1), 1};
  in.y12 = {2};
  in.restriction_ranks = {{0, 1}};
  in.gysin_ranks = {{2, 1}};
  return in;
}

WeightedDims ss_e2(const SncInput& in, Side side) {
  for (const auto* v : {&in.y1, &in.y2, &in.y12}) {
    for (Dim d : *v) {
      if (d < 0) throw InconsistentRanks("ss_e2: negative Betti number");
    }
  }
  const int top = static_cast<int>(std::max({in.y1.size(), in.y2.size(), in.y12.size() + 2}));
  for (const auto& [q, r] : in.restriction_ranks) {
    if (r < 0 || r > at(in.y1, q) + at(in.y2, q) || r > at(in.y12, q)) {
      throw InconsistentRanks(fmt::format("ss_e2: restriction rank {} out of bounds in degree {}", r, q));
    }
  }
  for (const auto& [q, r] : in.gysin_ranks) {
    if (r < 0 || r > at(in.y12, q - 2) || r > at(in.y1, q) + at(in.y2, q)) {
      throw InconsistentRanks(fmt::format("ss_e2: Gysin rank {} out of bounds in degree {}", r, q));
    }
    if (r + rank_at(in.restriction_ranks, q) > at(in.y1, q) + at(in.y2, q)) {
      throw InconsistentRanks(fmt::format("ss_e2: ranks in degree {} exceed the middle term", q));
    }
  }

  WeightedDims out;
  for (int q = 0; q <= top; ++q) {
    const Dim rr = rank_at(in.restriction_ranks, q);
    const Dim rg = side == Side::limit ? rank_at(in.gysin_ranks, q) : 0;
    if (side == Side::limit) out.add(q - 1, q, at(in.y12, q - 2) - rg);
    out.add(q, q, at(in.y1, q) + at(in.y2, q) - rr - rg);
    out.add(q + 1, q, at(in.y12, q) - rr);
  }
  return out;
}

std::vector<Dim> fiber_gysin_kernel_dims() {
  // Columns: basis of H^j(P1 x P1). Rows: generators of H^{j+2} of P3 and
  // of the wonderful compactification of SL2, both one dimensional in even
  // degree. Entries are the pushforward coefficients: the quadric has class
  // 2h in P3 and is the boundary divisor in the other component.
  const std::vector<std::vector<std::vector<long>>> gysin = {
      {{2}, {1}}, {}, {{1, 1}, {1, 1}}, {}, {{1}, {1}}};
  const std::vector<std::size_t> source_dims = {1, 0, 2, 0, 1};
  std::vector<Dim> kernel;
  for (std::size_t j = 0; j < gysin.size(); ++j) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : gysin[j]) rows.emplace_back(row.begin(), row.end());
    kernel.push_back(static_cast<Dim>(source_dims[j] - linalg::rank_fraction_free(std::move(rows))));
  }
  return kernel;
}

HodgeTable fiber_table(Fiber fiber) {
  HodgeTable t;
  switch (fiber) {
  case Fiber::p1xp1:
    t.add(0, 0, 1);
    t.add(1, 1, 2);
    t.add(2, 2, 1);
    break;
  case Fiber::p3:
  case Fiber::sl2bar:
    for (int j = 0; j <= 3; ++j) t.add(j, j, 1);
    break;
  }
  return t;
}

HodgeTable leray_hirsch_table(const HodgeTable& base, Fiber fiber) { return base * fiber_table(fiber); }

Dim gysin_kernel_dims(int g, int n) {
  require_genus(g, "gysin_kernel_dims");
  if (n < 4) return 0;
  return at(base_table(g).betti(), n - 4);
}

SpecializationRanks specialization_ranks(int g, int n) {
  require_genus(g, "specialization_ranks");
  const HodgeTable base = base_table(g);
  const auto total = leray_hirsch_table(base, Fiber::p1xp1).betti();
  const auto b = base.betti();
  SpecializationRanks r;
  r.kernel = at(total, n - 2) - gysin_kernel_dims(g, n);
  r.cokernel = at(b, n - 3);
  return r;
}

MixedTable limit_mixed_table(int g) {
  require_genus(g, "limit_mixed_table");
  const HodgeTable gs = closed_forms::smooth_hodge_table(g);
  const HodgeTable m = base_table(g);
  const int top = 6 * g - 6;
  MixedTable t;
  for (int n = 0; n <= top; ++n) {
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const Dim pure = gs.get(p, q) - m.get(p - 2, q - 1) - m.get(p - 1, q - 2);
      if (pure < 0) {
        throw NegativeDimension(fmt::format("limit_mixed_table: h^{{{},{}}} Gr^W_{} H^{} = {}", p, q, n, n, pure));
      }
      t.add({n, n, p, q}, pure);
    }
    for (int p = 0; p <= n - 1; ++p) t.add({n, n - 1, p, n - 1 - p}, m.get(p - 1, n - 1 - p - 1));
    for (int p = 0; p <= n + 1; ++p) t.add({n, n + 1, p, n + 1 - p}, m.get(p - 2, n + 1 - p - 2));
  }
  return t;
}

MixedTable simpson_mixed_table(int g) {
  MixedTable t;
  const MixedTable limit = limit_mixed_table(g);
  for (const auto& [k, d] : limit.entries()) {
    if (k.w <= k.n) t.add(k, d);
  }
  return t;
}

MixedTable gieseker_mixed_table(int g) {
  MixedTable t = simpson_mixed_table(g);
  const HodgeTable m = base_table(g);
  for (int j = 1; j <= 3; ++j) {
    const HodgeTable block = m.twisted(j);
    for (const auto& [pq, d] : block.entries()) {
      const int n = pq.first + pq.second;
      t.add({n, n, pq.first, pq.second}, d);
    }
  }
  return t;
}

KernelSummandCounts kernel_summand_poincare(int g) {
  require_genus(g, "kernel_summand_poincare");
  const UniPoly b = diagonal(closed_forms::base_hp(g));
  UniPoly three = UniPoly::monomial(1, 2) + UniPoly::monomial(1, 4) + UniPoly::monomial(1, 6);
  UniPoly two = UniPoly::monomial(1, 2) + UniPoly::monomial(1, 4);
  return {three * b, two * b};
}

} // namespace nodal_hodge::degeneration
