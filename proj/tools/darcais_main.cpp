#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "darcais/cli.hpp"

namespace {

struct SubSpec {
    CLI::App* app = nullptr;
    darcais::Subcommand kind{};
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d'Arcais numbers, partition asymptotics, and saddle-point diagnostics"};
    app.require_subcommand(1);

    darcais::RunConfig cfg;
    std::string output_path;
    std::vector<SubSpec> subs;

    const auto add_output = [&](CLI::App* s) {
        s->add_option("-o,--output", output_path, "write CSV to this file instead of stdout");
    };

    {
        CLI::App* s = app.add_subcommand("triangle", "one exact row of the d'Arcais triangle (n,k,A)");
        s->add_option("--n", cfg.n, "row index")->required();
        add_output(s);
        subs.push_back({s, darcais::Subcommand::triangle});
    }
    {
        CLI::App* s = app.add_subcommand(
            "compare", "exact ln a(n,k) against the saddle-point approximation "
                       "(n,k,ln_exact,ln_approx,diff; NA where k/n leaves the valid range)");
        s->add_option("--n", cfg.n, "fixed n")->required();
        s->add_option("--k-min", cfg.k_min, "first k (default 1)");
        s->add_option("--k-max", cfg.k_max, "last k (default n)");
        add_output(s);
        subs.push_back({s, darcais::Subcommand::compare});
    }
    {
        CLI::App* s = app.add_subcommand(
            "logconcave", "exact log-concavity margin ln(a^2/(a- a+)) and its asymptotic "
                          "1/(n K^3 V) (n,k,kappa,lhs,rhs)");
        s->add_option("--n", cfg.n, "fixed n (>= 3)")->required();
        add_output(s);
        subs.push_back({s, darcais::Subcommand::logconcave});
    }
    {
        CLI::App* s = app.add_subcommand(
            "asymmetry", "exact (a(n,k)-a(n,n+1-k))/(a(n,k)+a(n,n+1-k)) "
                         "(n,k,stat_num,stat_den,stat_float)");
        s->add_option("--n", cfg.n, "fixed n")->required();
        s->add_option("--k-min", cfg.k_min, "first k (default 1)");
        s->add_option("--k-max", cfg.k_max, "last k (default n)");
        add_output(s);
        subs.push_back({s, darcais::Subcommand::asymmetry});
    }
    {
        CLI::App* s = app.add_subcommand(
            "psi", "F(y) F(y + ln F(y)) on a log-spaced grid (y,psi)");
        s->add_option("--y-min", cfg.y_min, "grid start (default 1e-3)");
        s->add_option("--y-max", cfg.y_max, "grid end (default 30)");
        s->add_option("--grid-points", cfg.grid_points, "number of points (default 200)");
        add_output(s);
        subs.push_back({s, darcais::Subcommand::psi});
    }
    {
        CLI::App* s = app.add_subcommand(
            "bound", "theta sweep of ln(|F(y-i theta)|^2/F(y)^2) against the uniform bound "
                     "(y,theta,log_ratio_sq,log_one_minus_beta)");
        s->add_option("--y", cfg.y, "real part of the argument (>= 1e-4)")->required();
        s->add_option("--grid-points", cfg.grid_points, "theta samples in (-pi, pi) (default 512)");
        add_output(s);
        subs.push_back({s, darcais::Subcommand::bound});
    }
    {
        CLI::App* s = app.add_subcommand(
            "partition", "exact p(n) with both asymptotic logs (n,p,ln_p,ln_hr_saddle,ln_hr_closed)");
        s->add_option("--n", cfg.n, "partition index")->required();
        add_output(s);
        subs.push_back({s, darcais::Subcommand::partition});
    }
    {
        CLI::App* s = app.add_subcommand("verify", "run the full acceptance battery");
        add_output(s);
        subs.push_back({s, darcais::Subcommand::verify});
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (const SubSpec& s : subs)
        if (s.app->parsed()) cfg.subcommand = s.kind;

    try {
        if (!output_path.empty()) {
            std::ofstream file(output_path);
            if (!file) {
                std::cerr << "error: cannot open output file '" << output_path << "'\n";
                return 1;
            }
            return darcais::run(cfg, file, std::cerr);
        }
        return darcais::run(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
