#pragma once

#include "nodal_hodge/polynomial.hpp"
#include "nodal_hodge/tables.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nodal_hodge::degeneration {

/// E_1 data of a two-component simple normal crossings degeneration:
/// Betti numbers of the components and of their intersection, and the
/// ranks of the two d_1 maps.
struct SncInput {
  std::vector<Dim> y1;
  std::vector<Dim> y2;
  std::vector<Dim> y12;
  /// q -> rank of H^q(Y1) + H^q(Y2) -> H^q(Y12).
  std::map<int, Dim> restriction_ranks;
  /// q -> rank of H^{q-2}(Y12)(-1) -> H^q(Y1) + H^q(Y2).
  std::map<int, Dim> gysin_ranks;

  /// Nodal curve of arithmetic genus g split as a line and a genus g-1
  /// curve meeting in two points.
  static SncInput curve(int genus);
};

enum class Side { limit, central };

/// E_2 = E_infinity dims keyed by (n, w). Throws InconsistentRanks if a rank
/// is negative, exceeds its domain or codomain, or the two ranks at one
/// degree exceed the middle term.
WeightedDims ss_e2(const SncInput& input, Side side);

/// Kernel dims of the Gysin map from H^j(P1 x P1) into the two components,
/// j = 0..4.
std::vector<Dim> fiber_gysin_kernel_dims();

enum class Fiber { p1xp1, p3, sl2bar };

HodgeTable fiber_table(Fiber fiber);

/// Product table of a fibration whose fiber cohomology is free over the base.
HodgeTable leray_hirsch_table(const HodgeTable& base, Fiber fiber);

/// dim H^{n-4} of the base space.
Dim gysin_kernel_dims(int g, int n);

struct SpecializationRanks {
  Dim kernel = 0;
  Dim cokernel = 0;
  friend bool operator==(const SpecializationRanks&, const SpecializationRanks&) = default;
};

/// Kernel and cokernel dimensions of H^n(central) -> H^n(limit).
SpecializationRanks specialization_ranks(int g, int n);

MixedTable limit_mixed_table(int g);
MixedTable gieseker_mixed_table(int g);
MixedTable simpson_mixed_table(int g);

/// Diagonal Poincare series of the kernel summand in the Gieseker model:
/// three twisted copies of the base versus the two classes {1, X} of the
/// quotient-ring presentation.
struct KernelSummandCounts {
  UniPoly three_block;
  UniPoly two_class;
};
KernelSummandCounts kernel_summand_poincare(int g);

} // namespace nodal_hodge::degeneration
