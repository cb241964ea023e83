#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbct/tables.hpp"

namespace goldbct {

enum class Suite { field, linearized, weil, tables, gold, equiv, all };

std::string_view to_string(Suite s);
Suite suite_from_string(std::string_view text);

/// Outcome of one cross-check suite. `first_failure` names the failing
/// instance with its field (n, polynomial) and parameters.
struct SuiteResult {
    Suite suite = Suite::field;
    std::uint64_t checks = 0;
    bool passed = true;
    std::string first_failure;
    std::string summary;
};

struct VerifyOptions {
    int n_max = 6;
    SweepOptions sweep;
    /// Called with a short line as each (suite, n) block finishes.
    std::function<void(const std::string&)> progress;
};

/// Runs one suite, or every suite for Suite::all, in a fixed order.
std::vector<SuiteResult> run_verify(Suite suite, const VerifyOptions& opts);

}  // namespace goldbct
