#include "nodal_hodge/closed_forms.hpp"

#include <fmt/core.h>

#include <stdexcept>

namespace nodal_hodge::closed_forms {

namespace {

void require_genus(int genus, int minimum, const char* who) {
  if (genus < minimum) throw std::invalid_argument(fmt::format("{}: genus must be >= {}, got {}", who, minimum, genus));
}

BiPoly mono(long c, int p, int q) { return BiPoly::monomial(c, p, q); }

// (1 + x y^2)(1 + x^2 y)
BiPoly odd_pair() { return (BiPoly(1) + mono(1, 1, 2)) * (BiPoly(1) + mono(1, 2, 1)); }

// x y (1 + x)(1 + y)
BiPoly boundary_factor() { return mono(1, 1, 1) * (BiPoly(1) + BiPoly::x()) * (BiPoly(1) + BiPoly::y()); }

} // namespace

StructuredRatFun smooth_form(int genus) {
  require_genus(genus, 1, "smooth_hp");
  const auto g = static_cast<unsigned>(genus);
  return StructuredRatFun(odd_pair().pow(g) - boundary_factor().pow(g));
}

StructuredRatFun gieseker_form(int genus) {
  require_genus(genus, 2, "gieseker_hp");
  const auto g = static_cast<unsigned>(genus);
  const BiPoly u = mono(1, 1, 1);
  const BiPoly one_plus_u = BiPoly(1) + u;
  BiPoly first = odd_pair().pow(g - 1) * (BiPoly(1) + mono(2, 1, 1)) * (BiPoly(1) + mono(1, 2, 2));
  BiPoly second = u * boundary_factor().pow(g - 1) * (BiPoly(2) + one_plus_u * one_plus_u);
  return StructuredRatFun(first - second);
}

StructuredRatFun simpson_form(int genus) {
  require_genus(genus, 2, "simpson_hp");
  const auto g = static_cast<unsigned>(genus);
  const BiPoly u = mono(1, 1, 1);
  BiPoly first = odd_pair().pow(g - 1) * (BiPoly(1) + u + mono(1, 3, 3));
  BiPoly second = u * boundary_factor().pow(g - 1) * (BiPoly(2) + u);
  return StructuredRatFun(first - second);
}

BiPoly smooth_hp(int genus) { return smooth_form(genus).exact_quotient(); }

BiPoly base_hp(int genus) {
  require_genus(genus, 2, "base_hp");
  return smooth_hp(genus - 1);
}

BiPoly gieseker_hp(int genus) { return gieseker_form(genus).exact_quotient(); }

BiPoly simpson_hp(int genus) { return simpson_form(genus).exact_quotient(); }

BiPoly gieseker_proof_form(int genus) {
  require_genus(genus, 2, "gieseker_proof_form");
  const BiPoly shift = mono(-1, 2, 1) + mono(-1, 1, 2) + mono(2, 1, 1) + mono(1, 2, 2) + mono(1, 3, 3);
  return smooth_hp(genus) + base_hp(genus) * shift;
}

BiPoly simpson_proof_form(int genus) {
  require_genus(genus, 2, "simpson_proof_form");
  const BiPoly shift = mono(-1, 2, 1) + mono(-1, 1, 2) + mono(1, 1, 1);
  return smooth_hp(genus) + base_hp(genus) * shift;
}

HodgeTable smooth_hodge_table(int genus) { return HodgeTable::from_poly(smooth_hp(genus)); }

std::vector<Dim> smooth_betti(int genus) {
  require_genus(genus, 2, "smooth_betti");
  std::vector<Dim> b = smooth_hodge_table(genus).betti();
  b.resize(static_cast<std::size_t>(6 * genus - 5), 0);
  return b;
}

} // namespace nodal_hodge::closed_forms
