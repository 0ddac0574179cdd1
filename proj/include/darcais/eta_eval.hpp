#pragma once

#include <complex>
#include <cstdint>
#include <span>

namespace darcais {

// Numerical evaluation of
//
//     F(y) = -ln((e^{-y}; e^{-y})_inf) = sum_{m>=1} -ln(1 - e^{-my})
//          = sum_{n>=1} (sigma(n)/n) e^{-ny},        y > 0,
//
// together with its first two derivatives
//
//     F'(y)  = -sum_n n e^{-ny} / (1 - e^{-ny}),
//     F''(y) =  sum_n n^2 e^{-ny} / (1 - e^{-ny})^2,
//
// the modular transformation of the Dedekind eta function in the real form
//
//     F(y) = zeta(2)/y + ln(y)/2 - ln(2pi)/2 - y/24 + F(4 pi^2 / y),
//
// complex evaluation F(w) for Re(w) > 0, the closed-form minor-arc bound
// beta(y, theta), and the scaled Taylor coefficients W^(r)(y) = y^r f^(r)(y)
// of f = ln F.
//
// Below y = 0.5 the real-axis evaluators route through the modular identity
// (the transformed argument exceeds 78, so the inner series is a single
// term); above it they sum directly with tails below 1e-18. Relative error
// is ~1e-13 for F and ~1e-12 for the derivatives.

inline constexpr double kZeta2 = 1.6449340668482264;  // pi^2/6

struct EtaPoint {
    double y;   ///< abscissa, > 0
    double F;   ///< F(y) > 0
    double F1;  ///< F'(y) < 0
    double F2;  ///< F''(y) > 0
    double K;   ///< -F(y)/F'(y), in (0,1)
    double V;   ///< F''/F - (F'/F)^2 > 0
};

double eval_F(double y);
double eval_F1(double y);
double eval_F2(double y);

/// Right-hand side of the modular identity, with the inner term always
/// direct-summed. |modular_F(y) - eval_F(y)| <= 1e-12 max(1, F(y)).
double modular_F(double y);

/// F, F', F'' and the derived ratios at one point, invariants checked.
EtaPoint eta_point(double y);

/// F''/F - (F'/F)^2. For y >= 0.5 this is computed from the positive
/// pair sum F''F - F'^2 = sum_{m<n} (n-m)^2 R_m R_n (R_n = (sigma(n)/n)e^{-ny}),
/// which stays accurate where the naive difference of ratios cancels to zero.
double variance(double y);

/// rho_n(y) = (sigma(n)/n) e^{-ny} / F(y); sums to 1 over n.
double rho(std::uint64_t n, double y);

/// F(w) = sum sigma(n)/n e^{-nw} for Re(w) >= 1e-4, truncated at
/// n = ceil(45/Re(w)) and capped at 5e5 terms. No modular acceleration
/// exists off the real axis here, hence the hard floor (std::out_of_range
/// below it). The span overload uses a prebuilt sigma_sieve table.
std::complex<double> eval_F_complex(std::complex<double> w);
std::complex<double> eval_F_complex(std::complex<double> w,
                                    std::span<const std::uint64_t> sigma_table);

inline constexpr double kComplexReFloor = 1e-4;
inline constexpr std::size_t kComplexMaxTerms = 500000;

/// Number of terms eval_F_complex uses at Re(w) = x.
std::size_t complex_term_count(double x);

/// beta(y, theta) =
///   F(2y)/F(y)^2 * cosh(y/2) sin^2(theta/2) /
///   (sinh(y/2) (sinh^2(y/2) + sin^2(theta/2))),
/// the uniform lower bound for 1 - |F(y - i theta)|^2 / F(y)^2. Even in
/// theta and nondecreasing in |theta| on (0, pi).
double beta_bound(double y, double theta);

/// W^(r)(y) = y^r f^(r)(y) with f = ln F, for r in {2,3,4}. r = 2 is
/// y^2 variance(y); r = 3,4 use central differences of variance with step
/// h = 1e-3 y and one Richardson extrapolation. Throws std::out_of_range
/// for unsupported r.
double taylor_W(int r, double y);

}  // namespace darcais
