#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadric {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

// "criterion  3 PASS  rank 6 -> 5 boundary table  [7 checks, 0.02 s]" plus one
// indented line per failure.
void print_result(std::ostream& os, const CriterionResult& r);

}  // namespace quadric
