#include "nodal_hodge/ratfun.hpp"

#include <stdexcept>

namespace nodal_hodge {

BiPoly StructuredRatFun::denominator() {
  const BiPoly u = BiPoly::monomial(1, 1, 1);
  return (BiPoly(1) - u) * (BiPoly(1) - u * u);
}

BiPoly StructuredRatFun::exact_quotient() const { return exact_divide(numerator_, denominator()); }

BiPoly expand_truncated(const StructuredRatFun& f, int max_total_degree) {
  if (max_total_degree < 0) throw std::invalid_argument("expand_truncated: negative truncation degree");
  BiPoly result;
  for (const auto& [e, c] : f.numerator().terms()) {
    if (e.total() > max_total_degree) break;
    for (int n = 0; e.total() + 2 * n <= max_total_degree; ++n) {
      result.add_term({e.p + n, e.q + n}, c * Rational(n / 2 + 1));
    }
  }
  return result;
}

} // namespace nodal_hodge
