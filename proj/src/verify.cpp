#include "darcais/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "darcais/divisor.hpp"
#include "darcais/exact_series.hpp"
#include "darcais/ldp_saddle.hpp"
#include "darcais/rational.hpp"

namespace darcais {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Literal enumeration: walks every partition of n (parts nonincreasing) and
// counts the leaves. Deliberately naive; the independent cross-check for the
// pentagonal recurrence.
std::uint64_t count_partitions_enum(int n, int max_part) {
    if (n == 0) return 1;
    std::uint64_t c = 0;
    for (int p = std::min(n, max_part); p >= 1; --p) c += count_partitions_enum(n - p, p);
    return c;
}

struct Check {
    int id;
    std::string title;
    std::function<std::pair<bool, std::string>()> body;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
    out << "building exact d'Arcais triangle up to n = 400 (shared by several checks)...\n";
    out.flush();
    const auto t_tri = std::chrono::steady_clock::now();
    const DArcaisTriangle tri(400);
    const double tri_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_tri).count();
    out << "triangle ready (" << num(tri_seconds) << " s)\n";
    out.flush();

    std::vector<Check> checks;

    checks.push_back({1, "triangle equals series-power oracle for all n <= 40; rows 1..4 explicit",
                      [&]() -> std::pair<bool, std::string> {
                          const std::vector<std::vector<long>> expect = {
                              {1}, {3, 1}, {8, 9, 1}, {42, 59, 18, 1}};
                          for (int n = 1; n <= 4; ++n)
                              for (int k = 1; k <= n; ++k)
                                  if (tri.entry(n, k) !=
                                      expect[static_cast<std::size_t>(n - 1)]
                                            [static_cast<std::size_t>(k - 1)])
                                      return {false, "row " + std::to_string(n) + " mismatch"};
                          long entries = 0;
                          for (int n = 1; n <= 40; ++n)
                              for (int k = 1; k <= n; ++k) {
                                  if (darcais_bell(n, k) != tri.entry(n, k))
                                      return {false, "oracle mismatch at n=" + std::to_string(n) +
                                                         ", k=" + std::to_string(k)};
                                  ++entries;
                              }
                          return {true, std::to_string(entries) +
                                            " entries equal the n!/k! [z^n] L^k oracle exactly"};
                      }});

    checks.push_back({2, "exact log-concavity a(n,k)^2 >= a(n,k-1) a(n,k+1) for all n <= 150",
                      [&]() -> std::pair<bool, std::string> {
                          long count = 0;
                          for (int n = 3; n <= 150; ++n)
                              for (int k = 2; k <= n - 1; ++k) {
                                  if (cmp(logconcavity_ratio(tri, n, k), 1) < 0)
                                      return {false, "violated at n=" + std::to_string(n) +
                                                         ", k=" + std::to_string(k)};
                                  ++count;
                              }
                          return {true, std::to_string(count) + " exact rational comparisons hold"};
                      }});

    checks.push_back({3, "modular identity residual <= 1e-12 max(1, F) on 200 log-spaced y in [1e-3, 50]",
                      [&]() -> std::pair<bool, std::string> {
                          double worst = 0.0;
                          const double lo = std::log(1e-3), hi = std::log(50.0);
                          for (int i = 0; i < 200; ++i) {
                              const double y = std::exp(lo + (hi - lo) * i / 199.0);
                              const double f = eval_F(y);
                              const double r =
                                  std::abs(f - modular_F(y)) / std::max(1.0, f);
                              worst = std::max(worst, r);
                          }
                          return {worst <= 1e-12,
                                  "max residual " + num(worst) + " (threshold 1e-12)"};
                      }});

    checks.push_back({4, "asymmetry product: psi(30) = pi^2/9 to 1e-10; slope (psi(y)-1)/y -> -(pi^2-9)/pi^2",
                      [&]() -> std::pair<bool, std::string> {
                          const double limit = kPi * kPi / 9.0;
                          const double p30 = psi(30.0);
                          const double err30 = std::abs(p30 - limit);
                          const double slope_target = -(kPi * kPi - 9.0) / (kPi * kPi);
                          const double ys[3] = {1e-2, 3e-3, 1e-3};
                          double err[3];
                          for (int i = 0; i < 3; ++i)
                              err[i] = std::abs((psi(ys[i]) - 1.0) / ys[i] - slope_target);
                          const bool ok = err30 <= 1e-10 && err[0] > err[1] && err[1] > err[2] &&
                                          err[2] <= 5e-2;
                          return {ok, "|psi(30)-pi^2/9| = " + num(err30) +
                                          " (<= 1e-10); slope errors " + num(err[0]) + " > " +
                                          num(err[1]) + " > " + num(err[2]) + " (last <= 0.05)"};
                      }});

    checks.push_back({5, "saddle-point approximation at kappa = 1/2 tightens with n; two forms agree to 1e-9",
                      [&]() -> std::pair<bool, std::string> {
                          const int ns[4] = {50, 100, 200, 400};
                          double diffs[4];
                          for (int i = 0; i < 4; ++i) {
                              const int n = ns[i];
                              const double exact = ln_rational(a_coeff(tri, n, n / 2));
                              diffs[i] = std::abs(exact - br_log_approx(n, n / 2).ln_approx);
                          }
                          const bool decreasing =
                              diffs[0] > diffs[1] && diffs[1] > diffs[2] && diffs[2] > diffs[3];
                          const double d150 = std::abs(ln_rational(a_coeff(tri, 150, 75)) -
                                                       br_log_approx(150, 75).ln_approx);
                          double worst_pair = 0.0;
                          const long grid_n[5] = {100, 150, 400, 1000, 4000};
                          const double grid_kappa[4] = {0.05, 0.2, 0.5, 0.8};
                          for (long n : grid_n)
                              for (double kp : grid_kappa) {
                                  const long k = std::max(1L, std::lround(kp * n));
                                  worst_pair = std::max(
                                      worst_pair, std::abs(br2_log_approx(n, k) -
                                                           br_log_approx(n, k).ln_approx));
                              }
                          const bool ok = decreasing && d150 <= 0.2 && worst_pair <= 1e-9;
                          return {ok, "|ln a - approx| = " + num(diffs[0]) + " > " + num(diffs[1]) +
                                          " > " + num(diffs[2]) + " > " + num(diffs[3]) +
                                          "; at n=150: " + num(d150) +
                                          " (<= 0.2); max two-form gap " + num(worst_pair) +
                                          " (<= 1e-9)"};
                      }});

    checks.push_back({6, "log-concavity ratio lhs/rhs within 10% of 1 at n = 400 and closer than at n = 100",
                      [&]() -> std::pair<bool, std::string> {
                          const double r100 =
                              logconcavity_lhs(tri, 100, 50) / logconcave_rhs(100, 0.5);
                          const double r400 =
                              logconcavity_lhs(tri, 400, 200) / logconcave_rhs(400, 0.5);
                          const bool ok = std::abs(r400 - 1.0) <= 0.10 &&
                                          std::abs(r400 - 1.0) < std::abs(r100 - 1.0);
                          return {ok, "ratio(400) = " + num(r400) + ", ratio(100) = " + num(r100) +
                                          " (|ratio(400)-1| <= 0.10 and smaller)"};
                      }});

    checks.push_back({7, "minor-arc bound 1 - |F(y-i theta)|^2/F(y)^2 >= beta(y,theta) - 1e-12 on the theta grid",
                      [&]() -> std::pair<bool, std::string> {
                          const auto table = sigma_sieve(complex_term_count(1e-3));
                          double worst_margin = 1e300;
                          for (const double y : {1e-3, 1e-2, 0.1, 1.0}) {
                              const double f = eval_F(y);
                              for (int j = 0; j < 512; ++j) {
                                  const double theta = -kPi + (j + 0.5) * (2.0 * kPi / 512.0);
                                  const std::complex<double> fw =
                                      eval_F_complex({y, -theta}, table);
                                  const double lhs = 1.0 - std::norm(fw) / (f * f);
                                  worst_margin =
                                      std::min(worst_margin, lhs - beta_bound(y, theta));
                              }
                          }
                          return {worst_margin >= -1e-12,
                                  "min(lhs - beta) = " + num(worst_margin) + " (>= -1e-12)"};
                      }});

    checks.push_back({8, "partition asymptotics: p(100), enumeration to 60, closed form trend, saddle shift",
                      [&]() -> std::pair<bool, std::string> {
                          const PartitionTable pt(1600);
                          if (pt.value(100) != BigInt("190569292"))
                              return {false, "p(100) != 190569292"};
                          for (int n = 0; n <= 60; ++n)
                              if (pt.value(n) != BigInt(static_cast<unsigned long>(
                                                     count_partitions_enum(n, n == 0 ? 1 : n))))
                                  return {false,
                                          "pentagonal recurrence disagrees with enumeration at n=" +
                                              std::to_string(n)};
                          double ratio[3];
                          const int ns[3] = {100, 400, 1600};
                          for (int i = 0; i < 3; ++i) {
                              const double ln_p = ln_rational(Rational(pt.value(ns[i])));
                              ratio[i] = std::exp(hr_approx(ns[i]).second - ln_p);
                          }
                          const bool trend = ratio[0] > ratio[1] && ratio[1] > ratio[2] &&
                                             ratio[2] > 1.0 && ratio[0] >= 1.00 &&
                                             ratio[0] <= 1.05;
                          const double y6 = hr_saddle(1000000);
                          const double shift =
                              1e6 * y6 - std::sqrt(1e6 * kZeta2);
                          const bool shift_ok = std::abs(shift - (-0.25)) <= 5e-3;
                          return {trend && shift_ok,
                                  "closed-form/exact ratios " + num(ratio[0]) + " > " +
                                      num(ratio[1]) + " > " + num(ratio[2]) +
                                      " -> 1, first in [1.00, 1.05]; n y_n - sqrt(n zeta2) = " +
                                      num(shift) + " (within 5e-3 of -0.25)"};
                      }});

    checks.push_back({9, "scaled Taylor coefficients at y = 1e-3: W2 within 0.02 of 2, W3 within 0.1 of -6",
                      [&]() -> std::pair<bool, std::string> {
                          const double w2 = taylor_W(2, 1e-3);
                          const double w3 = taylor_W(3, 1e-3);
                          const bool ok = std::abs(w2 - 2.0) <= 0.02 && std::abs(w3 + 6.0) <= 0.1;
                          return {ok, "W2(1e-3) = " + num(w2) + " (target 2 +- 0.02), W3(1e-3) = " +
                                          num(w3) + " (target -6 +- 0.1)"};
                      }});

    checks.push_back({10, "composition sums equal a(n,k) exactly for all n <= 12",
                      [&]() -> std::pair<bool, std::string> {
                          long count = 0;
                          for (int n = 1; n <= 12; ++n)
                              for (int k = 1; k <= n; ++k) {
                                  const CompositionCheck c = composition_check(n, k);
                                  if (c.sum != c.a_value)
                                      return {false, "mismatch at n=" + std::to_string(n) +
                                                         ", k=" + std::to_string(k)};
                                  ++count;
                              }
                          return {true, std::to_string(count) + " (n,k) pairs verified exactly"};
                      }});

    checks.push_back({11, "asymmetry statistic at n = 150 reaches 1e-3 somewhere on k in [3, 147]",
                      [&]() -> std::pair<bool, std::string> {
                          Rational best(0);
                          const Rational threshold = make_rational(1, 1000);
                          bool found = false;
                          for (int k = 3; k <= 147; ++k) {
                              Rational s = asymmetry_stat(tri, 150, k);
                              if (sgn(s) < 0) s = -s;
                              if (cmp(s, best) > 0) best = s;
                              if (cmp(s, threshold) >= 0) found = true;
                          }
                          return {found, "max |stat| = " + num(best.get_d()) + " (>= 1e-3)"};
                      }});

    std::vector<CriterionResult> results;
    for (const Check& c : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        std::pair<bool, std::string> r;
        try {
            r = c.body();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        CriterionResult cr{c.id, c.title, r.first, r.second};
        results.push_back(cr);
        char head[16];
        std::snprintf(head, sizeof head, "%2d ", c.id);
        out << head << (cr.passed ? "PASS " : "FAIL ") << cr.title << "\n     " << cr.detail
            << " [" << num(secs) << " s]\n";
        out.flush();
    }

    const int failed = count_failures(results);
    out << "summary: " << (results.size() - static_cast<std::size_t>(failed)) << "/"
        << results.size() << " criteria passed";
    if (failed > 0) out << ", " << failed << " failed";
    out << "\n";
    return results;
}

int count_failures(const std::vector<CriterionResult>& results) {
    int n = 0;
    for (const auto& r : results)
        if (!r.passed) ++n;
    return n;
}

}  // namespace darcais
