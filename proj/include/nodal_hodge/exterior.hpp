#pragma once

#include "nodal_hodge/polynomial.hpp"
#include "nodal_hodge/rational.hpp"
#include "nodal_hodge/tables.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nodal_hodge::exterior {

/// psi_I as a bitmask: bit i-1 set iff psi_i is a factor (indices 1..64).
struct ExtMonomial {
  std::uint64_t mask = 0;

  static ExtMonomial from_indices(const std::vector<int>& indices);
  std::vector<int> indices() const;
  int size() const;
  int degree() const { return 3 * size(); }
  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  /// 3|I| - [g in I] + [2g in I].
  int weight(int genus) const;
  /// 2g in I implies g in I.
  bool admissible(int genus) const;

  friend auto operator<=>(const ExtMonomial&, const ExtMonomial&) = default;
};

/// Sign of psi_A * psi_B after sorting, 0 if they share a factor.
int koszul_sign(ExtMonomial a, ExtMonomial b);

/// Element of the exterior algebra on `generators` odd generators.
class ExtElement {
public:
  using Terms = std::map<ExtMonomial, Rational>;

  explicit ExtElement(int generators = 0) : generators_(generators) {}
  static ExtElement one(int generators);
  /// psi_i, 1 <= i <= generators.
  static ExtElement generator(int generators, int i);
  static ExtElement monomial(int generators, const ExtMonomial& m, const Rational& c = 1);

  int generators() const { return generators_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExtMonomial& m) const;
  void add_term(const ExtMonomial& m, const Rational& c);

  ExtElement& operator+=(const ExtElement& o);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

  /// e.g. `psi_1*psi_2 - 2*psi_3*psi_4`.
  std::string to_string() const;

private:
  int generators_;
  Terms terms_;
};

/// Wedge product. Throws std::invalid_argument on mismatched generator counts.
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);

/// sum_{i=1..h} psi_i psi_{i+h} on 2h generators.
ExtElement symplectic_form(int h);

/// dim ker(gamma^{h-k+1} on Lambda^k of 2h generators); 0 outside 0 <= k <= h.
Dim primitive_dim(int h, int k);

/// Coefficient of z^k in prod (1 + x^p y^q z)^{h^{p,q}}.
HodgeTable wedge_table(const HodgeTable& v, int k);

/// Lambda^k minus the twisted Lambda^{k-2}, starting from H^3 = {(2,1):h, (1,2):h}.
HodgeTable primitive_hodge_table(int h, int k);

struct PinfSpace {
  std::vector<ExtElement> basis;
  WeightedDims wdims;
};

/// Kernel of psi_inf^{g-i+1} on the span of admissible psi_I with |I| = i.
/// Empty for i > g, where the exponent is not positive.
PinfSpace pinf_space(int g, int i);

/// alpha^{j1} beta^{j2} psi_I.
struct KnMonomial {
  int j1 = 0;
  int j2 = 0;
  ExtMonomial psi;

  int degree() const { return 2 * j1 + 4 * j2 + psi.degree(); }
  std::string to_string() const;
};

/// Monomials of degree n with j1 + |I| < h and j2 + |I| < h.
std::vector<KnMonomial> kn_basis(int h, int n);

/// sum_k primitive_dim(h, k) * quotient_dims(h - k) shifted by 3k.
GradedDims mumford_model_dims(int h);

/// Hodge refinement of the same sum: primitive tables times quotient
/// polynomials.
BiPoly mumford_model_hp(int h);

/// sum_i pinf_space(g, i).wdims times quotient_dims(g - i), each quotient
/// class of degree d adding d to both degree and weight.
WeightedDims simpson_model_wdims(int g);

} // namespace nodal_hodge::exterior
