#pragma once

#include <cstdint>
#include <string>

#include "budget.hpp"

namespace euob {

// Fallbacks for documents that do not pin their own seed or budget.
struct JobDefaults {
    std::uint64_t seed = 42;
    std::uint64_t budget = Budget::kDefault;
};

struct JobOutput {
    std::string json;  // canonical report, byte-identical for identical documents
    std::string text;  // human rendering of the same content
};

// Runs one JSON job document.  Supported kinds: eu, segre, strat-chi,
// transform, behrend, kiemli, selftest.  Malformed documents raise schema
// errors, mathematically inconsistent ones raise validation errors.
JobOutput run_job(const std::string& document, const JobDefaults& defaults = {});

}  // namespace euob
