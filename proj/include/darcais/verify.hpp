#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace darcais {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  ///< measured value(s) and threshold(s)
};

/// Runs the full acceptance battery, printing one PASS/FAIL line per
/// criterion to `out` as it completes. Deterministic; takes on the order of
/// a minute (dominated by the exact triangle up to n = 400).
std::vector<CriterionResult> run_acceptance(std::ostream& out);

/// Number of failed criteria in `results`.
int count_failures(const std::vector<CriterionResult>& results);

}  // namespace darcais
