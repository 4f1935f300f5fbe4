#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bigcenter {

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::string name;
    std::function<CriterionResult()> run;
};

// The full acceptance suite; every check is an exact identity of
// rationals, polynomials or series.
const std::vector<Criterion>& acceptance_criteria();

// Runs all criteria (or just `only`), printing one PASS/FAIL line per
// criterion; returns the number of failures.
int run_acceptance(std::ostream& out, std::optional<int> only = std::nullopt);

} // namespace bigcenter
