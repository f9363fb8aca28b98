#pragma once

#include "nodal_hodge/polynomial.hpp"
#include "nodal_hodge/ratfun.hpp"
#include "nodal_hodge/tables.hpp"

#include <vector>

namespace nodal_hodge::closed_forms {

/// Numerators over (1 - xy)(1 - x^2 y^2), before division.
StructuredRatFun smooth_form(int genus);
StructuredRatFun gieseker_form(int genus);
StructuredRatFun simpson_form(int genus);

/// Smooth fiber. genus >= 1; genus 1 gives 1.
BiPoly smooth_hp(int genus);
/// Normalization of the nodal curve's moduli space: smooth_hp(genus - 1).
BiPoly base_hp(int genus);
/// Gieseker central fiber. genus >= 2.
BiPoly gieseker_hp(int genus);
/// Simpson moduli space. genus >= 2.
BiPoly simpson_hp(int genus);

/// P_g + P_{g-1} * (-x^2 y - x y^2 + 2xy + x^2 y^2 + x^3 y^3).
BiPoly gieseker_proof_form(int genus);
/// P_g + P_{g-1} * (-x^2 y - x y^2 + xy).
BiPoly simpson_proof_form(int genus);

HodgeTable smooth_hodge_table(int genus);
/// b_0 .. b_{6g-6}.
std::vector<Dim> smooth_betti(int genus);

} // namespace nodal_hodge::closed_forms
