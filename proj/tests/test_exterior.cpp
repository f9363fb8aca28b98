#include "nodal_hodge/closed_forms.hpp"
#include "nodal_hodge/exterior.hpp"
#include "nodal_hodge/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace nodal_hodge;
using namespace nodal_hodge::exterior;

namespace {

ExtElement psi(int n, std::vector<int> idx, long c = 1) {
  return ExtElement::monomial(n, ExtMonomial::from_indices(idx), c);
}

ExtElement random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<long> c(-4, 4);
  ExtElement e(n);
  for (int i = 0; i < 5; ++i) e.add_term(ExtMonomial{mask(rng)}, c(rng));
  return e;
}

// Kernel dimension of gamma^m on Lambda^k over 2h generators with the
// matrix built from explicit sorting signs and ranked by Bareiss.
std::int64_t oracle_primitive_dim(int h, int k) {
  const int n = 2 * h;
  const int m = h - k + 1;
  std::vector<std::uint64_t> source, target;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) == k) source.push_back(s);
    if (std::popcount(s) == k + 2 * m) target.push_back(s);
  }
  if (target.empty()) return static_cast<std::int64_t>(source.size());
  // gamma^m = m! * sum over m-subsets S of pairs of prod_{i in S} psi_i psi_{i+h}
  std::int64_t fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  std::vector<std::vector<BigInt>> rows(target.size(), std::vector<BigInt>(source.size(), 0));
  for (std::uint64_t pairs = 0; pairs < (std::uint64_t{1} << h); ++pairs) {
    if (std::popcount(pairs) != m) continue;
    std::vector<int> factor;
    for (int i = 0; i < h; ++i) {
      if ((pairs >> i) & 1) {
        factor.push_back(i + 1);
        factor.push_back(i + 1 + h);
      }
    }
    for (std::size_t c = 0; c < source.size(); ++c) {
      std::vector<int> seq;
      for (int i = 0; i < n; ++i) {
        if ((source[c] >> i) & 1) seq.push_back(i + 1);
      }
      seq.insert(seq.end(), factor.begin(), factor.end());
      const int sign = oracle::sort_sign(seq);
      if (sign == 0) continue;
      std::uint64_t mask = source[c];
      for (int i : factor) mask |= std::uint64_t{1} << (i - 1);
      const auto r = std::find(target.begin(), target.end(), mask) - target.begin();
      rows[static_cast<std::size_t>(r)][c] += sign * fact;
    }
  }
  return static_cast<std::int64_t>(source.size() - linalg::rank_fraction_free(rows));
}

} // namespace

TEST_CASE("ext_mul basics") {
  const int n = 4;
  CHECK(ext_mul(psi(n, {1}), psi(n, {2})) == psi(n, {1, 2}));
  CHECK(ext_mul(psi(n, {2}), psi(n, {1})) == psi(n, {1, 2}, -1));
  CHECK(ext_mul(psi(n, {1}), psi(n, {1})).is_zero());
  const ExtElement form = psi(n, {1, 3}) + psi(n, {2, 4});
  CHECK(ext_mul(form, form) == psi(n, {1, 2, 3, 4}, -2));
  CHECK(symplectic_form(2) == form);
  CHECK(ext_mul(psi(n, {1, 3}), psi(n, {2, 4})).to_string() == "-psi_1*psi_2*psi_3*psi_4");
  CHECK_THROWS_AS(ext_mul(psi(4, {1}), psi(6, {1})), std::invalid_argument);
}

TEST_CASE("koszul sign matches bubble-sort parity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint64_t> mask(0, (1u << 10) - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const ExtMonomial a{mask(rng)}, b{mask(rng)};
    std::vector<int> seq = a.indices();
    for (int i : b.indices()) seq.push_back(i);
    CHECK(koszul_sign(a, b) == oracle::sort_sign(seq));
  }
}

TEST_CASE("exterior algebra is associative and graded commutative") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const ExtElement a = random_element(rng, 8), b = random_element(rng, 8), c = random_element(rng, 8);
    CHECK(ext_mul(ext_mul(a, b), c) == ext_mul(a, ext_mul(b, c)));
  }
  std::uniform_int_distribution<std::uint64_t> mask(0, 255);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtMonomial ma{mask(rng)}, mb{mask(rng)};
    const ExtElement a = ExtElement::monomial(8, ma), b = ExtElement::monomial(8, mb);
    ExtElement ba = ext_mul(b, a);
    if ((ma.size() * mb.size()) % 2 == 1) ba = ext_mul(ExtElement::monomial(8, {}, -1), ba);
    CHECK(ext_mul(a, b) == ba);
    if (ma.size() % 2 == 1) CHECK(ext_mul(a, a).is_zero());
  }
}

TEST_CASE("monomial degree, weight and admissibility") {
  const int g = 3;
  const auto m = ExtMonomial::from_indices({1, 3, 6});
  CHECK(m.degree() == 9);
  CHECK(m.weight(g) == 9);
  CHECK(ExtMonomial::from_indices({3}).weight(g) == 2);
  CHECK(ExtMonomial::from_indices({6}).weight(g) == 4);
  CHECK_FALSE(ExtMonomial::from_indices({6}).admissible(g));
  CHECK(ExtMonomial::from_indices({3, 6}).admissible(g));
  CHECK_THROWS_AS(ExtMonomial::from_indices({2, 2}), std::invalid_argument);
}

TEST_CASE("primitive_dim examples") {
  CHECK(primitive_dim(3, 0) == 1);
  CHECK(primitive_dim(1, 1) == 2);
  CHECK(primitive_dim(2, 2) == 5);
  CHECK(primitive_dim(2, 3) == 0);
  CHECK(primitive_dim(2, -1) == 0);
}

TEST_CASE("primitive_dim against the binomial formula and Bareiss") {
  for (int h = 1; h <= 5; ++h) {
    for (int k = 1; k <= h; ++k) {
      CAPTURE(h);
      CAPTURE(k);
      CHECK(primitive_dim(h, k) == oracle::binomial(2 * h, k) - oracle::binomial(2 * h, k - 2));
      if (h <= 4) CHECK(primitive_dim(h, k) == oracle_primitive_dim(h, k));
    }
  }
}

TEST_CASE("Lefschetz decomposition of exterior powers") {
  for (int h = 1; h <= 5; ++h) {
    for (int k = 0; k <= h; ++k) {
      Dim sum = 0;
      for (int j = 0; k - 2 * j >= 0; ++j) sum += primitive_dim(h, k - 2 * j);
      CHECK(sum == oracle::binomial(2 * h, k));
    }
  }
}

TEST_CASE("wedge and primitive Hodge tables") {
  HodgeTable v;
  v.add(2, 1, 2);
  v.add(1, 2, 2);
  CHECK(wedge_table(v, 0) == HodgeTable::from_poly(BiPoly(1)));
  CHECK(wedge_table(v, 1) == v);
  const HodgeTable w2 = wedge_table(v, 2);
  CHECK(w2.get(4, 2) == 1);
  CHECK(w2.get(3, 3) == 4);
  CHECK(w2.get(2, 4) == 1);
  CHECK(w2.total() == 6);
  CHECK(wedge_table(v, 5).total() == 0);

  CHECK(primitive_hodge_table(2, 0) == HodgeTable::from_poly(BiPoly(1)));
  CHECK(primitive_hodge_table(2, 1) == v);
  const HodgeTable p22 = primitive_hodge_table(2, 2);
  CHECK(p22.entries() == HodgeTable::Entries{{{2, 4}, 1}, {{3, 3}, 3}, {{4, 2}, 1}});
  for (int h = 1; h <= 5; ++h) {
    for (int k = 0; k <= h; ++k) {
      const HodgeTable t = primitive_hodge_table(h, k);
      CHECK(t.total() == primitive_dim(h, k));
      CHECK(t.is_symmetric());
    }
  }
}

TEST_CASE("pinf_space small cases") {
  const PinfSpace p0 = pinf_space(2, 0);
  CHECK(p0.basis.size() == 1);
  CHECK(p0.wdims.entries() == WeightedDims::Entries{{{0, 0}, 1}});

  const PinfSpace p1 = pinf_space(2, 1);
  CHECK(p1.basis.size() == 3);
  CHECK(p1.wdims.entries() == WeightedDims::Entries{{{3, 2}, 1}, {{3, 3}, 2}});
  CHECK(p1.basis == std::vector<ExtElement>{psi(4, {1}), psi(4, {2}), psi(4, {3})});

  CHECK(pinf_space(2, 2).wdims.entries() == WeightedDims::Entries{{{6, 5}, 2}, {{6, 6}, 1}});
  CHECK(pinf_space(3, 1).wdims.entries() == WeightedDims::Entries{{{3, 2}, 1}, {{3, 3}, 4}});
  CHECK(pinf_space(3, 2).wdims.entries() == WeightedDims::Entries{{{6, 5}, 4}, {{6, 6}, 6}});
  CHECK(pinf_space(3, 3).wdims.entries() == WeightedDims::Entries{{{9, 8}, 5}, {{9, 9}, 4}});
  CHECK(pinf_space(2, 3).basis.empty());
  CHECK_THROWS_AS(pinf_space(2, 5), std::invalid_argument);
}

TEST_CASE("pinf_space basis is an admissible kernel") {
  for (int g = 2; g <= 4; ++g) {
    for (int i = 0; i <= g; ++i) {
      const PinfSpace p = pinf_space(g, i);
      ExtElement op = ExtElement::one(2 * g);
      for (int j = 0; j < g - i + 1; ++j) op = ext_mul(op, symplectic_form(g));
      for (const ExtElement& e : p.basis) {
        CHECK(ext_mul(e, op).is_zero());
        for (const auto& [m, c] : e.terms()) CHECK(m.admissible(g));
      }
      CHECK(p.wdims.total() == static_cast<Dim>(p.basis.size()));
      CHECK(p.wdims.total() <= oracle::binomial(2 * g, i));
      CHECK(p.wdims.get(3 * i, 3 * i) <= oracle::binomial(2 * g - 2, i));
      // independence
      std::vector<std::vector<Rational>> rows;
      std::map<ExtMonomial, std::size_t> col;
      for (const ExtElement& e : p.basis) {
        for (const auto& [m, c] : e.terms()) col.try_emplace(m, col.size());
      }
      for (const ExtElement& e : p.basis) {
        std::vector<Rational> row(col.size());
        for (const auto& [m, c] : e.terms()) row[col[m]] = c;
        rows.push_back(row);
      }
      CHECK(linalg::rank_dense(rows) == p.basis.size());
    }
  }
}

TEST_CASE("kn_basis") {
  CHECK(kn_basis(2, 0).size() == 1);
  CHECK(kn_basis(2, 0)[0].to_string() == "1");
  const auto b3 = kn_basis(2, 3);
  REQUIRE(b3.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(b3[static_cast<std::size_t>(i)].to_string() == "psi_" + std::to_string(i + 1));
  std::size_t total = 0;
  for (int n = 0; n <= 6; ++n) total += kn_basis(2, n).size();
  CHECK(total == 8);
  for (int h = 2; h <= 4; ++h) {
    const auto betti = closed_forms::smooth_betti(h);
    for (int n = 0; n < static_cast<int>(betti.size()); ++n) {
      CAPTURE(h);
      CAPTURE(n);
      CHECK(static_cast<Dim>(kn_basis(h, n).size()) == betti[static_cast<std::size_t>(n)]);
      for (const auto& m : kn_basis(h, n)) CHECK(m.degree() == n);
    }
    CHECK(kn_basis(h, 6 * h - 5).empty());
  }
}

TEST_CASE("ring model reproduces the smooth closed form") {
  CHECK(mumford_model_dims(2).dense(7) == std::vector<Dim>{1, 0, 1, 4, 1, 0, 1});
  for (int h = 2; h <= 5; ++h) {
    CAPTURE(h);
    CHECK(mumford_model_dims(h).dense(6 * h - 5) == closed_forms::smooth_betti(h));
    CHECK(mumford_model_dims(h).get(0) == 1);
    CHECK(mumford_model_hp(h) == closed_forms::smooth_hp(h));
  }
}

TEST_CASE("simpson ring model") {
  const WeightedDims w2 = simpson_model_wdims(2);
  CHECK(w2.entries() == WeightedDims::Entries{
                            {{0, 0}, 1}, {{2, 2}, 1}, {{3, 2}, 1}, {{3, 3}, 2}, {{4, 4}, 1}, {{6, 6}, 1}});
  CHECK(w2.by_degree().dense(7) == std::vector<Dim>{1, 0, 1, 3, 1, 0, 1});
  CHECK(w2.weight_diagonal().to_string() == "1 + 2t^2 + 2t^3 + t^4 + t^6");

  const WeightedDims w3 = simpson_model_wdims(3);
  CHECK(w3.entries() == WeightedDims::Entries{{{0, 0}, 1},  {{2, 2}, 1},  {{3, 2}, 1}, {{3, 3}, 4},
                                              {{4, 4}, 2},  {{5, 4}, 1},  {{5, 5}, 4}, {{6, 5}, 4},
                                              {{6, 6}, 8},  {{7, 6}, 1},  {{7, 7}, 4}, {{8, 8}, 2},
                                              {{9, 8}, 1},  {{9, 9}, 4},  {{10, 10}, 1}, {{12, 12}, 1}});
  for (int g = 2; g <= 3; ++g) {
    CHECK(simpson_model_wdims(g).weight_diagonal() == diagonal(closed_forms::simpson_hp(g)));
    CHECK(simpson_model_wdims(g).get(0, 0) == 1);
  }
}
