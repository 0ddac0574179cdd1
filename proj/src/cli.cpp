#include "darcais/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <vector>

#include "darcais/divisor.hpp"
#include "darcais/exact_series.hpp"
#include "darcais/ldp_saddle.hpp"
#include "darcais/verify.hpp"

namespace darcais {

namespace {

constexpr double kPi = std::numbers::pi;

int range_error(std::ostream& err, const std::string& parameter, const std::string& why) {
    err << "error: parameter '" << parameter << "' " << why << "\n";
    return 3;
}

bool approx_in_range(double kappa) { return kappa >= kKappaMin && kappa <= kKappaMax; }

int run_triangle(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.n < 1) return range_error(err, "n", "must be >= 1");
    const DArcaisTriangle tri(static_cast<int>(c.n));
    out << "n,k,A\n";
    for (int k = 1; k <= c.n; ++k)
        out << c.n << "," << k << "," << tri.entry(static_cast<int>(c.n), k).get_str() << "\n";
    return 0;
}

int run_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.n < 1) return range_error(err, "n", "must be >= 1");
    const long k_max = c.k_max < 0 ? c.n : c.k_max;
    if (c.k_min < 1) return range_error(err, "k-min", "must be >= 1");
    if (k_max > c.n) return range_error(err, "k-max", "must be <= n");
    if (c.k_min > k_max) return range_error(err, "k-min", "must be <= k-max");
    const DArcaisTriangle tri(static_cast<int>(c.n));
    out << "n,k,ln_exact,ln_approx,diff\n";
    for (long k = c.k_min; k <= k_max; ++k) {
        const double ln_exact =
            ln_rational(a_coeff(tri, static_cast<int>(c.n), static_cast<int>(k)));
        out << c.n << "," << k << "," << fmt17(ln_exact) << ",";
        const double kappa = static_cast<double>(k) / static_cast<double>(c.n);
        if (k < 1 || !approx_in_range(kappa)) {
            // outside the regime of the approximation: no number is better
            // than a wrong one
            out << "NA,NA\n";
        } else {
            const double ln_approx = br_log_approx(c.n, k).ln_approx;
            out << fmt17(ln_approx) << "," << fmt17(ln_exact - ln_approx) << "\n";
        }
    }
    return 0;
}

int run_logconcave(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.n < 3) return range_error(err, "n", "must be >= 3");
    const DArcaisTriangle tri(static_cast<int>(c.n));
    out << "n,k,kappa,lhs,rhs\n";
    for (long k = 2; k <= c.n - 1; ++k) {
        const double kappa = static_cast<double>(k) / static_cast<double>(c.n);
        out << c.n << "," << k << "," << fmt17(kappa) << ","
            << fmt17(logconcavity_lhs(tri, static_cast<int>(c.n), static_cast<int>(k))) << ",";
        if (approx_in_range(kappa))
            out << fmt17(logconcave_rhs(c.n, kappa)) << "\n";
        else
            out << "NA\n";
    }
    return 0;
}

int run_asymmetry(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.n < 1) return range_error(err, "n", "must be >= 1");
    const long k_max = c.k_max < 0 ? c.n : c.k_max;
    if (c.k_min < 1) return range_error(err, "k-min", "must be >= 1");
    if (k_max > c.n) return range_error(err, "k-max", "must be <= n");
    if (c.k_min > k_max) return range_error(err, "k-min", "must be <= k-max");
    const DArcaisTriangle tri(static_cast<int>(c.n));
    out << "n,k,stat_num,stat_den,stat_float\n";
    for (long k = c.k_min; k <= k_max; ++k) {
        const Rational s = asymmetry_stat(tri, static_cast<int>(c.n), static_cast<int>(k));
        out << c.n << "," << k << "," << s.get_num().get_str() << "," << s.get_den().get_str()
            << "," << fmt17(s.get_d()) << "\n";
    }
    return 0;
}

int run_psi(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!(c.y_min > 0.0)) return range_error(err, "y-min", "must be > 0");
    if (!(c.y_max >= c.y_min)) return range_error(err, "y-max", "must be >= y-min");
    const long points = c.grid_points == 0 ? 200 : c.grid_points;
    if (points < 1) return range_error(err, "grid-points", "must be >= 1");
    out << "y,psi\n";
    for (long i = 0; i < points; ++i) {
        double y;
        if (i == 0)
            y = c.y_min;
        else if (i == points - 1)
            y = c.y_max;
        else
            y = std::exp(std::log(c.y_min) + (std::log(c.y_max) - std::log(c.y_min)) *
                                                 static_cast<double>(i) /
                                                 static_cast<double>(points - 1));
        out << fmt17(y) << "," << fmt17(psi(y)) << "\n";
    }
    return 0;
}

int run_bound(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!(c.y > 0.0)) return range_error(err, "y", "must be > 0");
    if (c.y < kComplexReFloor) return range_error(err, "y", "must be >= 1e-4");
    const long points = c.grid_points == 0 ? 512 : c.grid_points;
    if (points < 1) return range_error(err, "grid-points", "must be >= 1");
    const auto table = sigma_sieve(complex_term_count(c.y));
    const double f = eval_F(c.y);
    out << "y,theta,log_ratio_sq,log_one_minus_beta\n";
    for (long j = 0; j < points; ++j) {
        const double theta =
            -kPi + (static_cast<double>(j) + 0.5) * (2.0 * kPi / static_cast<double>(points));
        const std::complex<double> fw = eval_F_complex({c.y, -theta}, table);
        const double log_ratio_sq = std::log(std::norm(fw) / (f * f));
        const double log_one_minus_beta = std::log1p(-beta_bound(c.y, theta));
        out << fmt17(c.y) << "," << fmt17(theta) << "," << fmt17(log_ratio_sq) << ","
            << fmt17(log_one_minus_beta) << "\n";
    }
    return 0;
}

int run_partition(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.n < 1) return range_error(err, "n", "must be >= 1");
    const PartitionTable pt(static_cast<int>(c.n));
    const auto [ln_saddle, ln_closed] = hr_approx(c.n);
    out << "n,p,ln_p,ln_hr_saddle,ln_hr_closed\n";
    out << c.n << "," << pt.value(static_cast<int>(c.n)).get_str() << ","
        << fmt17(ln_rational(Rational(pt.value(static_cast<int>(c.n))))) << "," << fmt17(ln_saddle)
        << "," << fmt17(ln_closed) << "\n";
    return 0;
}

}  // namespace

std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.subcommand) {
        case Subcommand::triangle:
            return run_triangle(config, out, err);
        case Subcommand::compare:
            return run_compare(config, out, err);
        case Subcommand::logconcave:
            return run_logconcave(config, out, err);
        case Subcommand::asymmetry:
            return run_asymmetry(config, out, err);
        case Subcommand::psi:
            return run_psi(config, out, err);
        case Subcommand::bound:
            return run_bound(config, out, err);
        case Subcommand::partition:
            return run_partition(config, out, err);
        case Subcommand::verify:
            return count_failures(run_acceptance(out)) == 0 ? 0 : 1;
    }
    return 1;
}

}  // namespace darcais
