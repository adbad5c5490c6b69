#pragma once

#include <string>
#include <vector>

namespace eisenspec::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

int criterion_count();

/// Runs one criterion (1-based); exceptions count as failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "PASS  3  name  (1.2 s)  detail" style line.
std::string format_line(const CriterionResult& r);

}  // namespace eisenspec::acceptance
