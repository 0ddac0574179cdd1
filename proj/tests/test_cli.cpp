#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "darcais/cli.hpp"

using namespace darcais;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int status = run(cfg, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("triangle rows") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::triangle;
    cfg.n = 3;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,k,A");
    CHECK(rows[1] == "3,1,8");
    CHECK(rows[2] == "3,2,9");
    CHECK(rows[3] == "3,3,1");
}

TEST_CASE("compare emits one row per k and NA outside the valid range") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::compare;
    cfg.n = 150;
    cfg.k_min = 1;
    cfg.k_max = 150;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 151);
    CHECK(rows[0] == "n,k,ln_exact,ln_approx,diff");
    CHECK(rows[1].rfind("150,1,", 0) == 0);
    // kappa = 1 lies outside the hypothesis k/n <= 1 - 1e-3
    CHECK(rows[150].find(",NA,NA") != std::string::npos);
    // a(150,150) = 1, so ln_exact = 0
    CHECK(rows[150].rfind("150,150,0,", 0) == 0);
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        CHECK(rows[i].find("NA") == std::string::npos);
}

TEST_CASE("compare is deterministic") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::compare;
    cfg.n = 40;
    cfg.k_min = 1;
    cfg.k_max = 40;
    const Result a = invoke(cfg);
    const Result b = invoke(cfg);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("range violations exit 3 and name the parameter") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::compare;
    cfg.n = 10;
    cfg.k_min = 1;
    cfg.k_max = 11;
    Result r = invoke(cfg);
    CHECK(r.status == 3);
    CHECK(r.err.find("k-max") != std::string::npos);

    cfg.k_max = 5;
    cfg.k_min = 0;
    r = invoke(cfg);
    CHECK(r.status == 3);
    CHECK(r.err.find("k-min") != std::string::npos);

    cfg.subcommand = Subcommand::triangle;
    cfg.n = 0;
    r = invoke(cfg);
    CHECK(r.status == 3);
    CHECK(r.err.find("'n'") != std::string::npos);

    cfg.subcommand = Subcommand::bound;
    cfg.y = -1.0;
    r = invoke(cfg);
    CHECK(r.status == 3);
    CHECK(r.err.find("'y'") != std::string::npos);

    cfg.subcommand = Subcommand::psi;
    cfg.y_min = 0.5;
    cfg.y_max = 0.1;
    r = invoke(cfg);
    CHECK(r.status == 3);
    CHECK(r.err.find("y-max") != std::string::npos);
}

TEST_CASE("partition row") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::partition;
    cfg.n = 100;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,p,ln_p,ln_hr_saddle,ln_hr_closed");
    CHECK(rows[1].rfind("100,190569292,", 0) == 0);
}

TEST_CASE("psi grid") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::psi;
    cfg.y_min = 1e-3;
    cfg.y_max = 30.0;
    cfg.grid_points = 10;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "y,psi");
    CHECK(rows[1].rfind("0.001,", 0) == 0);
    CHECK(std::stod(rows[10]) == doctest::Approx(30.0).epsilon(1e-12));
}

TEST_CASE("bound grid") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::bound;
    cfg.y = 0.1;
    cfg.grid_points = 16;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "y,theta,log_ratio_sq,log_one_minus_beta");
    const std::string y_field = fmt17(0.1) + ",";
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].rfind(y_field, 0) == 0);
}

TEST_CASE("asymmetry columns carry the exact fraction") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::asymmetry;
    cfg.n = 3;
    cfg.k_min = 1;
    cfg.k_max = 3;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,k,stat_num,stat_den,stat_float");
    CHECK(rows[1].rfind("3,1,1,7,", 0) == 0);   // (a(3,1)-a(3,3))/(a(3,1)+a(3,3)) = 1/7
    CHECK(rows[2] == "3,2,0,1,0");              // self-paired midpoint
    CHECK(rows[3].rfind("3,3,-1,7,", 0) == 0);
}

TEST_CASE("logconcave table") {
    RunConfig cfg;
    cfg.subcommand = Subcommand::logconcave;
    cfg.n = 10;
    const Result r = invoke(cfg);
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 9);  // header + k = 2..9
    CHECK(rows[0] == "n,k,kappa,lhs,rhs");
}
