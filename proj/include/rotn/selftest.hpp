#pragma once

#include <cstdint>
#include <ostream>

namespace rotn {

/// Runs the cross-module invariant suite with deterministic seeding,
/// writing one line per check. Returns true when every check passes.
/// inject_failure corrupts one computation on purpose, as a negative
/// control that the harness actually detects broken results.
bool run_selftest(uint64_t seed, bool inject_failure, std::ostream& out);

}  // namespace rotn
