#pragma once

#include <cstdint>

#include "bakerforge/report.hpp"

namespace bakerforge {

/// Runs the property suite on a corpus drawn from `seed`; the result carries
/// per-property pass counts and an overall "ok".
Json run_selftest(std::uint64_t seed, Precision prec);

}  // namespace bakerforge
