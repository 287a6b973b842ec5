#pragma once

#include <cstdint>

#include "error.hpp"

namespace euob {

// Work meter threaded through every potentially explosive computation
// (Groebner reduction steps, staircase walks, Hilbert recursion).  One unit
// is roughly one monomial-level operation.  Exceeding the cap raises a
// resource error instead of hanging.
struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    explicit Budget(std::uint64_t cap = kDefault) : limit(cap) {}

    static constexpr std::uint64_t kDefault = 200'000'000;

    void charge(std::uint64_t units) {
        used += units;
        if (used > limit)
            throw_resource("work budget exhausted (used " + std::to_string(used) +
                           " of " + std::to_string(limit) + " units); raise --budget");
    }

    std::uint64_t remaining() const { return used > limit ? 0 : limit - used; }
};

}  // namespace euob
