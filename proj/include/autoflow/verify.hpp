#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "autoflow/rings.hpp"

namespace autoflow {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool informational = false; // known-discrepancy flags: reported, never fatal
    std::string detail;
};

/// Runs the whole invariant suite: fixed cross-ring checks plus the
/// ring-parameterized ones over `ring` at truncation order `order`.
/// Deterministic for a fixed seed.
std::vector<CheckResult> verify_all(const Ring &ring, int order,
                                    std::uint64_t seed = 0x5eedULL);

/// One line per check: PASS/FAIL/FLAG name [detail]. Returns true when every
/// non-informational check passed.
bool print_results(const std::vector<CheckResult> &results, std::ostream &out);

} // namespace autoflow
