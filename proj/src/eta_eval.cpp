#include "darcais/eta_eval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "darcais/divisor.hpp"

namespace darcais {

namespace {

constexpr double kSwitchY = 0.5;    // modular identity below, direct sums above
constexpr double kTailTol = 1e-18;  // series tail cutoff

constexpr double kPi = std::numbers::pi;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

void require_positive(double y, const char* who) {
    if (!(y > 0.0) || !std::isfinite(y))
        throw std::domain_error(std::string(who) + ": y must be positive and finite");
}

double direct_F(double y) {
    double sum = 0.0;
    for (unsigned long m = 1;; ++m) {
        const double q = std::exp(-static_cast<double>(m) * y);
        sum -= std::log1p(-q);
        if (q / (1.0 - q) < kTailTol) break;
    }
    return sum;
}

double direct_F1(double y) {
    double sum = 0.0;
    for (unsigned long m = 1;; ++m) {
        const double q = std::exp(-static_cast<double>(m) * y);
        const double t = static_cast<double>(m) * q / (1.0 - q);
        sum += t;
        if (t < kTailTol * sum || t == 0.0) break;
    }
    return -sum;
}

double direct_F2(double y) {
    double sum = 0.0;
    for (unsigned long m = 1;; ++m) {
        const double q = std::exp(-static_cast<double>(m) * y);
        const double d = 1.0 - q;
        const double t = static_cast<double>(m) * static_cast<double>(m) * q / (d * d);
        sum += t;
        if (t < kTailTol * sum || t == 0.0) break;
    }
    return sum;
}

double modular_rhs(double y) {
    return kZeta2 / y + 0.5 * std::log(y) - kHalfLog2Pi - y / 24.0 +
           direct_F(4.0 * kPi * kPi / y);
}

// F''F - F'^2 as the positive double sum over ordered pairs; immune to the
// cancellation that kills the ratio difference once F''/F and (F'/F)^2 both
// approach 1.
double variance_pair_sum(double y) {
    // The leading pair is R_1 R_2; tails are negligible once e^{-(m-2)y}
    // drops below 1e-18, so always carry a few terms past the leader.
    const std::uint64_t m_max = static_cast<std::uint64_t>(std::ceil(45.0 / y)) + 3;
    std::vector<double> r;
    r.reserve(m_max);
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const double q = std::exp(-static_cast<double>(m) * y);
        r.push_back(q * (static_cast<double>(sigma_u64(m)) / static_cast<double>(m)));
    }
    double s = 0.0;
    for (std::size_t b = 1; b < r.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            const double d = static_cast<double>(b - a);
            s += d * d * r[a] * r[b];
        }
    }
    const double f = direct_F(y);
    return s / (f * f);
}

struct TwoSum {
    double s;
    double e;
};

TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// 2 pi split so that the phase accumulator can be pulled back without drift.
constexpr double kTwoPiHi = 6.283185307179586232e+00;
constexpr double kTwoPiLo = 2.449293598294706414e-16;

void kahan_add(double& sum, double& comp, double term) {
    const double t = term - comp;
    const double next = sum + t;
    comp = (next - sum) - t;
    sum = next;
}

}  // namespace

double eval_F(double y) {
    require_positive(y, "eval_F");
    return y < kSwitchY ? modular_rhs(y) : direct_F(y);
}

double eval_F1(double y) {
    require_positive(y, "eval_F1");
    if (y >= kSwitchY) return direct_F1(y);
    const double u = 4.0 * kPi * kPi / y;
    return -kZeta2 / (y * y) + 0.5 / y - 1.0 / 24.0 - (u / y) * direct_F1(u);
}

double eval_F2(double y) {
    require_positive(y, "eval_F2");
    if (y >= kSwitchY) return direct_F2(y);
    const double u = 4.0 * kPi * kPi / y;
    return 2.0 * kZeta2 / (y * y * y) - 0.5 / (y * y) + (u * u / (y * y)) * direct_F2(u) +
           (2.0 * u / (y * y)) * direct_F1(u);
}

double modular_F(double y) {
    require_positive(y, "modular_F");
    return modular_rhs(y);
}

double variance(double y) {
    require_positive(y, "variance");
    if (y >= kSwitchY) return variance_pair_sum(y);
    const double f = eval_F(y);
    const double f1 = eval_F1(y);
    const double f2 = eval_F2(y);
    return f2 / f - (f1 / f) * (f1 / f);
}

EtaPoint eta_point(double y) {
    require_positive(y, "eta_point");
    EtaPoint p;
    p.y = y;
    p.F = eval_F(y);
    p.F1 = eval_F1(y);
    p.F2 = eval_F2(y);
    p.K = -p.F / p.F1;
    p.V = variance(y);
    if (!(p.F > 0.0) || !(p.F1 < 0.0) || !(p.F2 > 0.0) || !(p.K > 0.0) || !(p.K <= 1.0) ||
        !(p.V > 0.0))
        throw std::runtime_error("eta_point: invariant violated (y out of evaluable range)");
    return p;
}

double rho(std::uint64_t n, double y) {
    require_positive(y, "rho");
    if (n == 0) throw std::domain_error("rho: n must be positive");
    const double ratio = static_cast<double>(sigma_u64(n)) / static_cast<double>(n);
    return ratio * std::exp(-static_cast<double>(n) * y) / eval_F(y);
}

std::size_t complex_term_count(double x) {
    const double n = std::ceil(45.0 / x);
    if (!(n > 0.0)) return kComplexMaxTerms;
    if (n >= static_cast<double>(kComplexMaxTerms)) return kComplexMaxTerms;
    return static_cast<std::size_t>(n);
}

std::complex<double> eval_F_complex(std::complex<double> w) {
    const std::vector<std::uint64_t> table = sigma_sieve(complex_term_count(w.real()));
    return eval_F_complex(w, table);
}

std::complex<double> eval_F_complex(std::complex<double> w,
                                    std::span<const std::uint64_t> sigma_table) {
    const double x = w.real();
    if (!(x >= kComplexReFloor) || !std::isfinite(x) || !std::isfinite(w.imag()))
        throw std::out_of_range("eval_F_complex: Re(w) must be >= 1e-4 and finite");
    const std::size_t n_terms = complex_term_count(x);
    if (sigma_table.size() < n_terms + 1)
        throw std::invalid_argument("eval_F_complex: sigma table shorter than the term count");

    // e^{-nw} = e^{-nx} e^{i n t} with t = -Im(w). The phase n*t is held as a
    // compensated double pair and pulled back by 2 pi as it accumulates, so a
    // 5e5-term sweep keeps its phase to well below one ulp.
    const double t = -w.imag();
    double ph = 0.0;
    double pl = 0.0;
    double re = 0.0, rc = 0.0, im = 0.0, ic = 0.0;
    for (std::size_t m = 1; m <= n_terms; ++m) {
        TwoSum s = two_sum(ph, t);
        pl += s.e;
        ph = s.s;
        while (ph > kTwoPiHi) {
            ph -= kTwoPiHi;
            pl -= kTwoPiLo;
        }
        while (ph < -kTwoPiHi) {
            ph += kTwoPiHi;
            pl += kTwoPiLo;
        }
        s = two_sum(ph, pl);
        ph = s.s;
        pl = s.e;
        const double amp = std::exp(-static_cast<double>(m) * x) *
                           (static_cast<double>(sigma_table[m]) / static_cast<double>(m));
        const double phase = ph + pl;
        kahan_add(re, rc, amp * std::cos(phase));
        kahan_add(im, ic, amp * std::sin(phase));
    }
    return {re, im};
}

double beta_bound(double y, double theta) {
    require_positive(y, "beta_bound");
    const double f = eval_F(y);
    const double f2y = eval_F(2.0 * y);
    const double s = std::sin(0.5 * theta);
    const double sin2 = s * s;
    const double sh = std::sinh(0.5 * y);
    const double ch = std::cosh(0.5 * y);
    return f2y / (f * f) * ch * sin2 / (sh * (sh * sh + sin2));
}

double taylor_W(int r, double y) {
    require_positive(y, "taylor_W");
    switch (r) {
        case 2:
            return y * y * variance(y);
        case 3: {
            const auto diff = [y](double h) {
                return (variance(y + h) - variance(y - h)) / (2.0 * h);
            };
            const double h = 1e-3 * y;
            const double f3 = (4.0 * diff(0.5 * h) - diff(h)) / 3.0;
            return y * y * y * f3;
        }
        case 4: {
            const double v0 = variance(y);
            const auto diff2 = [y, v0](double h) {
                return (variance(y + h) - 2.0 * v0 + variance(y - h)) / (h * h);
            };
            const double h = 1e-3 * y;
            const double f4 = (4.0 * diff2(0.5 * h) - diff2(h)) / 3.0;
            return y * y * y * y * f4;
        }
        default:
            throw std::out_of_range("taylor_W: r must be 2, 3 or 4");
    }
}

}  // namespace darcais
