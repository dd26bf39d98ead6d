#pragma once

#include <cstdint>
#include <iosfwd>

namespace dickman {

struct VerifyOptions {
    std::uint64_t seed = 20260811;
    bool fast = false; // smaller samples and looser tolerances; exploration only
};

// Runs the invariant suite of every module, printing one pass/fail line per
// invariant. Returns the number of failures.
int run_verify(std::ostream& out, const VerifyOptions& opt);

} // namespace dickman
