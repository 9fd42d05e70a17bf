#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unimod {

struct CheckResult {
    std::string name;
    double value = 0.0; // measured quantity
    double reference = 0.0; // expected value
    double margin = 0.0; // discrepancy in the check's own units
    double bound = 0.0; // largest discrepancy accepted
    bool pass = false;
};

/// Named verification suites backing `unimod verify`. Suites:
/// combinatorics, moments, entropy, schmidt, contradiag, epower, all.
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace unimod
