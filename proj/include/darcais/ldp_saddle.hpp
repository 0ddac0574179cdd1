#pragma once

#include <utility>

#include "darcais/eta_eval.hpp"

namespace darcais {

// Saddle-point machinery for the normalized d'Arcais coefficients
// a(n,k) = k! A(2,n,k)/n!. For kappa = k/n the saddle y* solves
// -F'(y*)/F(y*) = 1/kappa, and the local approximation is
//
//     ln a(n,k) ~ k ln F(y*) + n y* - ln sqrt(2 pi k V(y*)),
//
// equivalently, through the rate function Gamma(kappa) = kappa ln F(y*) + y*
// and sigma^2(kappa) = kappa^3 V(y*),
//
//     ln a(n,k) ~ n Gamma(kappa) - ln sqrt(2 pi n sigma^2(kappa)) + ln kappa.
//
// The two forms are algebraically identical; both are exposed so the identity
// can be checked numerically. Also here: the product F(y) F(y + ln F(y))
// whose non-constancy witnesses the asymmetry of the rate function, the
// small-kappa specialization, and the Hardy-Ramanujan endpoints for p(n).

struct SaddleSolution {
    double kappa;     ///< k/n, in [1e-6, 1 - 1e-3]
    double y_star;    ///< unique root of -F'/F = 1/kappa
    EtaPoint point;   ///< F, F', F'', K, V at y_star
    double residual;  ///< kappa (-F'/F)(y_star) - 1
};

inline constexpr double kKappaMin = 1e-6;
inline constexpr double kKappaMax = 1.0 - 1e-3;

/// Bracketed bisection ([kappa/8, geometric expansion]) to 1e-13 relative
/// width plus Newton polish; |residual| <= 1e-10 guaranteed. Throws
/// std::domain_error outside [1e-6, 1-1e-3] and std::runtime_error if the
/// bracket ever fails (it cannot on the valid range).
SaddleSolution solve_saddle(double kappa);

struct ApproxReport {
    long n = 0;
    long k = 0;
    double ln_exact = 0.0;   ///< ln a(n,k); NaN until filled by the caller
    double ln_approx = 0.0;  ///< saddle-point approximation of ln a(n,k)
    double diff = 0.0;       ///< ln_exact - ln_approx; NaN until filled
};

/// Analytic side only: ln_approx = k ln F(y*) + n y* - 0.5 ln(2 pi k V(y*)).
/// ln_exact and diff are NaN; compare tooling fills them from the exact
/// triangle via ln_rational.
ApproxReport br_log_approx(long n, long k);

struct RateFunctionPoint {
    double kappa;
    double Gamma;   ///< kappa ln F(Y(kappa)) + Y(kappa) = min_y (kappa ln F(y) + y)
    double u;       ///< -ln F(Y(kappa))
    double sigma2;  ///< kappa^3 V(Y(kappa)) > 0
};

RateFunctionPoint rate_point(double kappa);

/// ln of the Bahadur-Rao style rewrite:
/// n Gamma(kappa) - 0.5 ln(2 pi n sigma^2(kappa)) + ln kappa.
/// Agrees with br_log_approx(n,k).ln_approx to 1e-9 absolute.
double br2_log_approx(long n, long k);

/// 1 / (n K(y*)^3 V(y*)), the asymptotic value of
/// ln(a(n,k)^2 / (a(n,k-1) a(n,k+1))) at kappa = k/n. Strictly positive.
double logconcave_rhs(long n, double kappa);

/// F(y) F(y + ln F(y)). For y >= 0.5 the inner argument is formed as
/// log1p(sum_{m>=2} (sigma(m)/m) e^{-(m-1)y}), which is y + ln F(y) without
/// the catastrophic cancellation of the direct difference; this keeps the
/// value accurate to ~1e-13 even at y = 30 where the argument is ~1e-13.
double psi(double y);

/// Small-kappa specialization (k of order sqrt(n), enforced as k <= 10 sqrt(n)):
/// -k ln kappa + k + k ln zeta(2) + k kappa ln(kappa)/(2 zeta(2))
/// - k kappa ln(2 pi)/(2 zeta(2)) - 0.5 ln(2 pi n / kappa).
double small_kappa_approx(long n, long k);

/// Root y_n of F'(y) = -n to 1e-12 relative, bracketing from the seed
/// sqrt(zeta(2)/n).
double hr_saddle(long n);

/// Logs of the two partition-number approximations:
/// first  = n y_n + F(y_n) - ln(2^{5/4} 3^{1/4} n^{3/4})  (Gaussian integral
///          at the exact saddle),
/// second = 2 sqrt(n zeta(2)) - ln(4 sqrt(3) n)           (closed form).
std::pair<double, double> hr_approx(long n);

}  // namespace darcais
