#pragma once

// Acceptance criteria as runnable suites.  Each criterion produces a
// deterministic result for a given seed; reports carry no timing or other
// run-varying data, so identical (suite, seed) runs serialize to identical
// bytes.

#include <cstdint>
#include <string>
#include <vector>

namespace neil::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    bool pass() const;
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite(const std::string& name);

SuiteResult run_suite(const std::string& name, std::uint64_t seed);

std::string to_json(const SuiteResult& r);

}  // namespace neil::verify
