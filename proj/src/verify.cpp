#include "nodal_hodge/verify.hpp"

#include "nodal_hodge/closed_forms.hpp"
#include "nodal_hodge/degeneration.hpp"
#include "nodal_hodge/errors.hpp"
#include "nodal_hodge/exterior.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace nodal_hodge {

namespace {

namespace cf = closed_forms;
namespace dg = degeneration;
namespace ex = exterior;
namespace mu = mumford;

// Empty string means the check passed; anything else is the failure detail.
using Check = std::function<std::string()>;

std::string poly_mismatch(const BiPoly& got, const BiPoly& expected) {
  if (got == expected) return {};
  BiPoly diff = got - expected;
  const auto& [e, c] = *diff.terms().begin();
  return fmt::format("coefficient of x^{}*y^{}: got {}, expected {}", e.p, e.q, got.coefficient(e.p, e.q).to_string(),
                     expected.coefficient(e.p, e.q).to_string());
}

std::string vector_mismatch(const std::vector<Dim>& got, const std::vector<Dim>& expected) {
  const std::size_t n = std::max(got.size(), expected.size());
  for (std::size_t d = 0; d < n; ++d) {
    const Dim a = d < got.size() ? got[d] : 0;
    const Dim b = d < expected.size() ? expected[d] : 0;
    if (a != b) return fmt::format("first mismatch in degree {}: got {}, expected {}", d, a, b);
  }
  return {};
}

std::string weighted_mismatch(const WeightedDims& got, const WeightedDims& expected) {
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [k, d] : got.entries()) keys[k] = true;
  for (const auto& [k, d] : expected.entries()) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    const Dim a = got.get(k.first, k.second);
    const Dim b = expected.get(k.first, k.second);
    if (a != b) return fmt::format("degree {} weight {}: got {}, expected {}", k.first, k.second, a, b);
  }
  return {};
}

std::string all_nonnegative_integers(const BiPoly& p, const char* what) {
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_integer() || c.sign() < 0) {
      return fmt::format("{}: coefficient of x^{}*y^{} is {}", what, e.p, e.q, c.to_string());
    }
  }
  return {};
}

BiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exponent(0, 4);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> count(1, 6);
  BiPoly p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p.add_term({exponent(rng), exponent(rng)}, Rational(coeff(rng)));
  return p;
}

struct Entry {
  std::string name;
  int needed_degree;
  Check run;
};

std::vector<Entry> build_checks(const VerifyOptions& o) {
  const int g = o.genus;
  const int top = 6 * g - 6;
  std::vector<Entry> checks;

  checks.push_back({"closed forms divide exactly", top, [g] {
                      for (auto form : {cf::smooth_form, cf::gieseker_form, cf::simpson_form}) {
                        const BiPoly q = form(g).exact_quotient();
                        if (q * StructuredRatFun::denominator() != form(g).numerator()) return std::string("product mismatch");
                      }
                      return std::string();
                    }});
  checks.push_back({"closed forms have nonnegative integer coefficients", top, [g] {
                      std::string r = all_nonnegative_integers(cf::smooth_hp(g), "smooth");
                      if (r.empty()) r = all_nonnegative_integers(cf::gieseker_hp(g), "gieseker");
                      if (r.empty()) r = all_nonnegative_integers(cf::simpson_hp(g), "simpson");
                      return r;
                    }});
  checks.push_back({"smooth Hodge symmetry and Poincare duality", top, [g, top] {
                      const HodgeTable t = cf::smooth_hodge_table(g);
                      if (!t.is_symmetric()) return std::string("h^{p,q} != h^{q,p}");
                      const int d = top / 2;
                      for (const auto& [pq, n] : t.entries()) {
                        if (t.get(d - pq.first, d - pq.second) != n) {
                          return fmt::format("h^{{{},{}}} has no dual partner", pq.first, pq.second);
                        }
                      }
                      return std::string();
                    }});
  checks.push_back({"proof forms agree with closed forms", top, [g] {
                      std::string r = poly_mismatch(cf::gieseker_hp(g), cf::gieseker_proof_form(g));
                      if (r.empty()) r = poly_mismatch(cf::simpson_hp(g), cf::simpson_proof_form(g));
                      return r;
                    }});
  checks.push_back({"gieseker minus simpson equals base times (xy + x^2y^2 + x^3y^3)", top, [g] {
                      const BiPoly u = BiPoly::monomial(1, 1, 1);
                      return poly_mismatch(cf::gieseker_hp(g) - cf::simpson_hp(g), cf::base_hp(g) * (u + u * u + u * u * u));
                    }});
  checks.push_back({"zeta regression", 8, [&o] {
                      using mu::AbgMonomial;
                      auto m = [](long c, int a, int b, int cc) { return mu::AbgPoly::monomial(c, AbgMonomial{a, b, cc}); };
                      const std::vector<mu::AbgPoly> expected = {
                          m(1, 2, 0, 0) + m(1, 0, 1, 0),
                          m(1, 3, 0, 0) + m(5, 1, 1, 0) + m(4, 0, 0, 1),
                          m(1, 4, 0, 0) + m(14, 2, 1, 0) + m(9, 0, 2, 0) + m(16, 1, 0, 1)};
                      for (int k = 2; k <= 4; ++k) {
                        const mu::AbgPoly got = mu::zagier_zeta(k, o.recursion);
                        if (got != expected[static_cast<std::size_t>(k - 2)]) {
                          return fmt::format("zeta_{} = {}, expected {}", k, got.to_string(),
                                             expected[static_cast<std::size_t>(k - 2)].to_string());
                        }
                      }
                      return std::string();
                    }});
  checks.push_back({"quotient rings are finite with stable top degree", 6 * (g - 1) + 12, [&o, g] {
                      for (int k = 1; k <= g; ++k) {
                        const int top_k = mu::quotient_top_degree(k);
                        const GradedDims d = mu::quotient_dims(k, top_k + 12, o.recursion);
                        if (d.top_degree() > top_k) {
                          return fmt::format("k={}: class in degree {} above {}", k, d.top_degree(), top_k);
                        }
                        if (d.get(0) != 1) return fmt::format("k={}: degree 0 has dim {}", k, d.get(0));
                      }
                      return std::string();
                    }});
  checks.push_back({"primitive dims match C(2h,k) - C(2h,k-2)", 3 * g, [g] {
                      auto binom = [](int n, int k) -> Dim {
                        if (k < 0 || k > n) return 0;
                        Dim r = 1;
                        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
                        return r;
                      };
                      for (int k = 0; k <= g; ++k) {
                        const Dim got = ex::primitive_dim(g, k);
                        const Dim want = binom(2 * g, k) - binom(2 * g, k - 2);
                        if (got != want) return fmt::format("h={} k={}: got {}, expected {}", g, k, got, want);
                      }
                      return std::string();
                    }});
  checks.push_back({"ring model reproduces smooth Betti numbers", top, [&o, g, top] {
                      GradedDims model;
                      for (int k = 0; k <= g; ++k) {
                        const Dim p = ex::primitive_dim(g, k);
                        const GradedDims q = mu::quotient_dims(g - k, mu::quotient_top_degree(g - k), o.recursion);
                        for (const auto& [d, n] : q.entries()) model.add(d + 3 * k, p * n);
                      }
                      return vector_mismatch(model.dense(top + 1), cf::smooth_betti(g));
                    }});
  checks.push_back({"Hodge-refined ring model equals smooth polynomial", top,
                    [g] { return poly_mismatch(ex::mumford_model_hp(g), cf::smooth_hp(g)); }});
  checks.push_back({"simpson ring model matches mixed table and closed form", top, [g] {
                      const WeightedDims model = ex::simpson_model_wdims(g);
                      const MixedTable table = dg::simpson_mixed_table(g);
                      std::string r = weighted_mismatch(model, table.marginals());
                      if (r.empty()) r = poly_mismatch(table.collapse(), cf::simpson_hp(g));
                      if (r.empty() && model.weight_diagonal() != diagonal(cf::simpson_hp(g))) {
                        r = "weight diagonal " + model.weight_diagonal().to_string();
                      }
                      return r;
                    }});
  checks.push_back({"gieseker mixed table collapses to closed form", top,
                    [g] { return poly_mismatch(dg::gieseker_mixed_table(g).collapse(), cf::gieseker_hp(g)); }});
  checks.push_back({"limit table weights, symmetry and Betti numbers", top, [g] {
                      const MixedTable limit = dg::limit_mixed_table(g);
                      for (const MixedTable& t : {limit, dg::gieseker_mixed_table(g), dg::simpson_mixed_table(g)}) {
                        if (!t.is_symmetric()) return std::string("h^{p,q} != h^{q,p} in a mixed table");
                        if (!t.weights_match_types()) return std::string("entry with p + q != w");
                      }
                      const WeightedDims m = limit.marginals();
                      for (int n = 0; n <= 6 * g - 6; ++n) {
                        if (m.get(n, n + 1) != m.get(n, n - 1)) {
                          return fmt::format("n={}: Gr^W_{} has dim {}, Gr^W_{} has dim {}", n, n + 1, m.get(n, n + 1),
                                             n - 1, m.get(n, n - 1));
                        }
                      }
                      return vector_mismatch(limit.betti(), cf::smooth_betti(g));
                    }});
  checks.push_back({"specialization ranks account for the central fiber", top, [g, top] {
                      const auto central = dg::gieseker_mixed_table(g).betti();
                      const auto smooth = cf::smooth_betti(g);
                      std::vector<Dim> via_ranks;
                      for (int n = 0; n <= top; ++n) {
                        const auto r = dg::specialization_ranks(g, n);
                        const Dim c = n < static_cast<int>(central.size()) ? central[static_cast<std::size_t>(n)] : 0;
                        via_ranks.push_back(c - r.kernel + r.cokernel);
                      }
                      return vector_mismatch(via_ranks, smooth);
                    }});
  checks.push_back({"curve spectral sequence", 2, [g] {
                      const auto in = dg::SncInput::curve(g);
                      const WeightedDims lim = dg::ss_e2(in, dg::Side::limit);
                      const WeightedDims cen = dg::ss_e2(in, dg::Side::central);
                      const std::vector<Dim> got_lim = {lim.get(1, 0), lim.get(1, 1), lim.get(1, 2)};
                      const std::vector<Dim> got_cen = {cen.get(1, 0), cen.get(1, 1), cen.get(1, 2)};
                      std::string r = vector_mismatch(got_lim, {1, 2 * g - 2, 1});
                      if (r.empty()) r = vector_mismatch(got_cen, {1, 2 * g - 2, 0});
                      return r;
                    }});
  checks.push_back({"Gysin kernels", top, [g, top] {
                      std::string r = vector_mismatch(dg::fiber_gysin_kernel_dims(), {0, 0, 1, 0, 0});
                      if (!r.empty()) return "fiber: " + r;
                      std::vector<Dim> got;
                      for (int n = 0; n <= top; ++n) got.push_back(dg::gysin_kernel_dims(g, n));
                      std::vector<Dim> want(4, 0);
                      for (Dim b : HodgeTable::from_poly(cf::base_hp(g)).betti()) want.push_back(b);
                      want.resize(got.size(), 0);
                      return vector_mismatch(got, want);
                    }});
  checks.push_back({"exact division round trip", 0, [&o] {
                      std::mt19937_64 rng(o.seed.value_or(0));
                      for (int trial = 0; trial < 50; ++trial) {
                        const BiPoly a = random_poly(rng);
                        const BiPoly b = random_poly(rng);
                        if (b.is_zero()) continue;
                        if (exact_divide(a * b, b) != a) return fmt::format("trial {}: quotient differs", trial);
                      }
                      return std::string();
                    }});
  return checks;
}

const char* label(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass: return "PASS";
  case CheckStatus::fail: return "FAIL";
  case CheckStatus::skipped: return "SKIPPED";
  case CheckStatus::info: return "INFO";
  }
  return "?";
}

} // namespace

bool VerifyReport::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

std::string VerifyReport::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += fmt::format("{} {}", label(c.status), c.name);
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += fmt::format("{} passed, {} failed, {} skipped\n", count(CheckStatus::pass), count(CheckStatus::fail),
                     count(CheckStatus::skipped));
  return out;
}

VerifyReport run_verify(const VerifyOptions& o) {
  if (o.genus < 2) throw std::invalid_argument("verify: genus must be >= 2");
  VerifyReport report;
  for (const Entry& e : build_checks(o)) {
    CheckResult r{e.name, CheckStatus::pass, {}};
    if (o.max_degree && e.needed_degree > *o.max_degree) {
      r.status = CheckStatus::skipped;
      r.detail = fmt::format("needs degree {}", e.needed_degree);
    } else {
      try {
        r.detail = e.run();
        if (!r.detail.empty()) r.status = CheckStatus::fail;
      } catch (const InvariantViolation& ex) {
        r.status = CheckStatus::fail;
        r.detail = ex.what();
      }
    }
    report.checks.push_back(std::move(r));
  }
  const auto counts = dg::kernel_summand_poincare(o.genus);
  report.checks.push_back({"kernel summand size", CheckStatus::info,
                           fmt::format("three twisted blocks give {}, the two-class presentation gives {}",
                                       counts.three_block.sum().to_string(), counts.two_class.sum().to_string())});
  return report;
}

} // namespace nodal_hodge
