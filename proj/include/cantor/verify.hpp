#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Property suites behind `verify`: algebra, cdf, interpolation,
/// reconstruction, measure, or all.
std::vector<CheckResult> run_suite(std::string_view suite, unsigned jobs = 1);
bool is_known_suite(std::string_view suite);

void print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace cantor
