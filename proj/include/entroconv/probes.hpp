#pragma once

#include <cstdint>
#include <vector>

#include "entroconv/support.hpp"

namespace entroconv {

/// Deterministic quasi-random points in [0,1): a golden-ratio Kronecker
/// sequence shifted by a seed-derived offset. The same seed always yields
/// the same sequence.
std::vector<double> unit_probes(std::size_t count, std::uint64_t seed);

/// Unit probes mapped into a 1-D support (half-lines go through t/(1-t)).
std::vector<double> probe_points(const SupportSpec& support, std::size_t count,
                                 std::uint64_t seed);

} // namespace entroconv
