#pragma once

#include <iosfwd>
#include <string>

namespace darcais {

// CSV-emitting subcommands. Output is deterministic: fixed headers, fixed row
// order, floating-point values printed with 17 significant digits and a
// lowercase exponent, so two runs with identical flags are byte-identical.

enum class Subcommand {
    triangle,    ///< row n of A(2,n,k): "n,k,A"
    compare,     ///< exact ln a(n,k) vs saddle-point approximation: "n,k,ln_exact,ln_approx,diff"
    logconcave,  ///< exact log-concavity margin vs asymptotic: "n,k,kappa,lhs,rhs"
    asymmetry,   ///< exact asymmetry statistic: "n,k,stat_num,stat_den,stat_float"
    psi,         ///< F(y) F(y + ln F(y)) on a log grid: "y,psi"
    bound,       ///< theta sweep of the minor-arc bound: "y,theta,log_ratio_sq,log_one_minus_beta"
    partition,   ///< p(n) and its two asymptotic logs: "n,p,ln_p,ln_hr_saddle,ln_hr_closed"
    verify,      ///< full acceptance battery; pass/fail table instead of CSV
};

struct RunConfig {
    Subcommand subcommand = Subcommand::verify;
    long n = 0;
    long k_min = 1;
    long k_max = -1;  ///< -1 means "up to n"
    double y = 0.0;
    double y_min = 1e-3;
    double y_max = 30.0;
    long grid_points = 0;  ///< 0 means the subcommand default
};

/// Executes one subcommand. Returns 0 on success, 3 on a numeric-range
/// violation (the offending parameter is named on `err`). Usage errors are
/// the CLI front end's job (exit 2 there).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "%.17g" (round-trip exact).
std::string fmt17(double v);

}  // namespace darcais
