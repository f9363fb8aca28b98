#pragma once

#include "nodal_hodge/polynomial.hpp"

namespace nodal_hodge {

/// numerator / ((1 - xy)(1 - x^2 y^2)).
///
/// The denominator is fixed and known only structurally. The only ways to
/// get a polynomial out are exact division (which must succeed for the
/// Hodge-Poincaré closed forms) and truncated series expansion.
class StructuredRatFun {
public:
  explicit StructuredRatFun(BiPoly numerator) : numerator_(std::move(numerator)) {}

  const BiPoly& numerator() const { return numerator_; }

  /// The polynomial quotient; throws NotDivisible if there is none.
  BiPoly exact_quotient() const;

  /// (1 - xy)(1 - x^2 y^2) expanded.
  static BiPoly denominator();

private:
  BiPoly numerator_;
};

/// Series expansion of f up to total degree max_total_degree, using
/// 1/((1 - u)(1 - u^2)) = sum_n (floor(n/2) + 1) u^n with u = xy.
BiPoly expand_truncated(const StructuredRatFun& f, int max_total_degree);

} // namespace nodal_hodge
