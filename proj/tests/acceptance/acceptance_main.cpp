// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <cstdio>

#include "cli/verify.hpp"

int main() {
    int failed = 0;
    const auto results = casimir::cli::run_acceptance([](const casimir::cli::CriterionResult& r) {
        std::printf("%s\n", casimir::cli::format_result(r).c_str());
        std::fflush(stdout);
    });
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
