#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monad {

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    bool quick = false;  /* fewer samples; the full run is the reference */
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;

    std::string line() const;
};

struct AcceptanceReport {
    AcceptanceOptions opts;
    std::vector<CriterionResult> results;

    bool all_pass() const;
    std::string str() const;
};

/* criteria 1..9 */
std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opts);

/* 1..9, then 10: a second run with the same seed must match byte for byte */
AcceptanceReport run_acceptance(const AcceptanceOptions& opts);

}  // namespace monad
