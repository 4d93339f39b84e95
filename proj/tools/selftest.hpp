#pragma once

#include <cstdint>
#include <ostream>

namespace daff::cli {

/// Runs the oracle agreement suites; returns the number of mismatches.
int run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace daff::cli
