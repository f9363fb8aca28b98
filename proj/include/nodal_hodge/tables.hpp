#pragma once

#include "nodal_hodge/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace nodal_hodge {

using Dim = std::int64_t;

/// Converts an exact coefficient to a dimension. Throws InvariantViolation
/// if it is not a nonnegative integer that fits.
Dim to_dim(const Rational& r);

/// h^{p,q} numbers. Zero entries are never stored.
class HodgeTable {
public:
  using Entries = std::map<std::pair<int, int>, Dim>;

  HodgeTable() = default;
  /// Reads the coefficients of x^p y^q.
  static HodgeTable from_poly(const BiPoly& poly);

  const Entries& entries() const { return entries_; }
  Dim get(int p, int q) const;
  /// Adds d to (p,q). Throws NegativeDimension if an entry would drop below 0.
  void add(int p, int q, Dim d);

  Dim total() const;
  bool is_symmetric() const;
  /// Tate twist by j: every (p,q) moves to (p+j,q+j).
  HodgeTable twisted(int j) const;
  BiPoly to_poly() const;
  /// b_n = sum over p+q = n.
  std::vector<Dim> betti() const;

  friend HodgeTable operator*(const HodgeTable& a, const HodgeTable& b);
  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

private:
  Entries entries_;
};

/// Hilbert function: degree -> dimension.
class GradedDims {
public:
  using Entries = std::map<int, Dim>;

  const Entries& entries() const { return entries_; }
  Dim get(int degree) const;
  void add(int degree, Dim d);
  Dim total() const;
  /// Largest degree with a nonzero entry, -1 if none.
  int top_degree() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }
  /// Dense list of dims for degrees 0..length-1.
  std::vector<Dim> dense(int length) const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
  Entries entries_;
};

/// (degree, weight) -> dimension.
class WeightedDims {
public:
  using Entries = std::map<std::pair<int, int>, Dim>;

  const Entries& entries() const { return entries_; }
  Dim get(int degree, int weight) const;
  void add(int degree, int weight, Dim d);
  Dim total() const;
  /// Forget the weight.
  GradedDims by_degree() const;
  /// sum of dims * t^weight.
  UniPoly weight_diagonal() const;

  friend bool operator==(const WeightedDims&, const WeightedDims&) = default;

private:
  Entries entries_;
};

struct MixedKey {
  int n = 0;
  int w = 0;
  int p = 0;
  int q = 0;

  friend auto operator<=>(const MixedKey&, const MixedKey&) = default;
};

/// dim h^{p,q} Gr^W_w H^n, sorted by (n, w, p, q).
class MixedTable {
public:
  using Entries = std::map<MixedKey, Dim>;

  const Entries& entries() const { return entries_; }
  Dim get(int n, int w, int p, int q) const;
  /// Adds d to the entry. Throws NegativeDimension if it would go below 0.
  void add(const MixedKey& key, Dim d);

  Dim total() const;
  /// (n, w) marginals.
  WeightedDims marginals() const;
  /// Sum over n and w of dim * x^p y^q.
  BiPoly collapse() const;
  /// Dense Betti list b_0..b_top.
  std::vector<Dim> betti() const;
  bool is_symmetric() const;
  /// Every entry has p + q = w.
  bool weights_match_types() const;

  friend bool operator==(const MixedTable&, const MixedTable&) = default;

private:
  Entries entries_;
};

} // namespace nodal_hodge
