#include "darcais/ldp_saddle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "darcais/divisor.hpp"

namespace darcais {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double neg_f1_over_f(double y) { return -eval_F1(y) / eval_F(y); }

}  // namespace

SaddleSolution solve_saddle(double kappa) {
    if (!(kappa >= kKappaMin && kappa <= kKappaMax))
        throw std::domain_error("solve_saddle: kappa outside [1e-6, 1 - 1e-3]");
    const double target = 1.0 / kappa;

    double lo = kappa / 8.0;
    if (!(neg_f1_over_f(lo) > target))
        throw std::runtime_error("solve_saddle: lower bracket end failed");
    double hi = kappa;
    int guard = 0;
    while (neg_f1_over_f(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 200) throw std::runtime_error("solve_saddle: bracket expansion failed");
    }

    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (neg_f1_over_f(mid) > target ? lo : hi) = mid;
    }

    // Newton polish on g(y) = -F'/F - 1/kappa, g'(y) = -V(y).
    double y = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double g = neg_f1_over_f(y) - target;
        const double next = y + g / variance(y);
        if (!(next > 0.0) || !std::isfinite(next)) break;
        y = next;
    }

    SaddleSolution s{kappa, y, eta_point(y), 0.0};
    s.residual = kappa * (-s.point.F1 / s.point.F) - 1.0;
    if (!(std::abs(s.residual) <= 1e-10))
        throw std::runtime_error("solve_saddle: residual exceeds 1e-10");
    return s;
}

ApproxReport br_log_approx(long n, long k) {
    if (n < 1 || k < 1) throw std::domain_error("br_log_approx: require n >= 1, k >= 1");
    const double kappa = static_cast<double>(k) / static_cast<double>(n);
    const SaddleSolution s = solve_saddle(kappa);
    ApproxReport r;
    r.n = n;
    r.k = k;
    r.ln_exact = std::numeric_limits<double>::quiet_NaN();
    r.ln_approx = static_cast<double>(k) * std::log(s.point.F) +
                  static_cast<double>(n) * s.y_star -
                  0.5 * std::log(kTwoPi * static_cast<double>(k) * s.point.V);
    r.diff = std::numeric_limits<double>::quiet_NaN();
    return r;
}

RateFunctionPoint rate_point(double kappa) {
    const SaddleSolution s = solve_saddle(kappa);
    const double ln_f = std::log(s.point.F);
    RateFunctionPoint p;
    p.kappa = kappa;
    p.Gamma = kappa * ln_f + s.y_star;
    p.u = -ln_f;
    p.sigma2 = kappa * kappa * kappa * s.point.V;
    return p;
}

double br2_log_approx(long n, long k) {
    if (n < 1 || k < 1) throw std::domain_error("br2_log_approx: require n >= 1, k >= 1");
    const double kappa = static_cast<double>(k) / static_cast<double>(n);
    const RateFunctionPoint p = rate_point(kappa);
    return static_cast<double>(n) * p.Gamma -
           0.5 * std::log(kTwoPi * static_cast<double>(n) * p.sigma2) + std::log(kappa);
}

double logconcave_rhs(long n, double kappa) {
    if (n < 1) throw std::domain_error("logconcave_rhs: require n >= 1");
    const SaddleSolution s = solve_saddle(kappa);
    const double k3 = s.point.K * s.point.K * s.point.K;
    return 1.0 / (static_cast<double>(n) * k3 * s.point.V);
}

double psi(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) throw std::domain_error("psi: y must be positive");
    double f_y;
    double v;
    if (y >= 0.5) {
        // e^{y} F(y) = 1 + s with s = sum_{m>=2} (sigma(m)/m) e^{-(m-1)y}.
        double s = 0.0;
        for (std::uint64_t m = 2;; ++m) {
            const double t = (static_cast<double>(sigma_u64(m)) / static_cast<double>(m)) *
                             std::exp(-static_cast<double>(m - 1) * y);
            s += t;
            if (t < 1e-18 * (1.0 + s)) break;
        }
        f_y = std::exp(-y) * (1.0 + s);
        v = std::log1p(s);
    } else {
        f_y = eval_F(y);
        v = y + std::log(f_y);
    }
    if (!(v > 0.0)) throw std::runtime_error("psi: inner argument y + ln F(y) not positive");
    return f_y * eval_F(v);
}

double small_kappa_approx(long n, long k) {
    if (n < 1 || k < 1) throw std::domain_error("small_kappa_approx: require n >= 1, k >= 1");
    if (static_cast<double>(k) > 10.0 * std::sqrt(static_cast<double>(n)))
        throw std::domain_error("small_kappa_approx: k must stay within 10 sqrt(n)");
    const double kappa = static_cast<double>(k) / static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double ln_kappa = std::log(kappa);
    return -kd * ln_kappa + kd + kd * std::log(kZeta2) +
           kd * kappa * ln_kappa / (2.0 * kZeta2) -
           kd * kappa * std::log(kTwoPi) / (2.0 * kZeta2) -
           0.5 * std::log(kTwoPi * static_cast<double>(n) / kappa);
}

double hr_saddle(long n) {
    if (n < 1) throw std::domain_error("hr_saddle: require n >= 1");
    const double nd = static_cast<double>(n);
    const auto g = [nd](double y) { return eval_F1(y) + nd; };  // increasing in y

    double lo = std::sqrt(kZeta2 / nd);
    double hi = lo;
    int guard = 0;
    while (g(lo) > 0.0) {
        lo *= 0.5;
        if (++guard > 200) throw std::runtime_error("hr_saddle: bracket expansion failed");
    }
    guard = 0;
    while (g(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 200) throw std::runtime_error("hr_saddle: bracket expansion failed");
    }

    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (g(mid) < 0.0 ? lo : hi) = mid;
    }

    double y = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double next = y - g(y) / eval_F2(y);
        if (!(next > 0.0) || !std::isfinite(next)) break;
        y = next;
    }
    if (!(std::abs(eval_F1(y) + nd) <= 1e-12 * nd))
        throw std::runtime_error("hr_saddle: residual exceeds 1e-12 n");
    return y;
}

std::pair<double, double> hr_approx(long n) {
    const double nd = static_cast<double>(n);
    const double y = hr_saddle(n);
    const double first = nd * y + eval_F(y) -
                         (1.25 * std::numbers::ln2 + 0.25 * std::log(3.0) + 0.75 * std::log(nd));
    const double second =
        2.0 * std::sqrt(nd * kZeta2) - std::log(4.0 * std::sqrt(3.0) * nd);
    return {first, second};
}

}  // namespace darcais
