#pragma once

#include <cstdint>
#include <vector>

#include "hsball/series.hpp"

namespace hsball {

/// Van der Corput radical inverse of index in the given base.
double radical_inverse(std::uint32_t base, std::uint64_t index);

/// Deterministic low-discrepancy points filling the shell
/// { z in C^n : inner_radius < |z| < 1 } with respect to volume measure
/// (inner_radius = 0 gives the full ball). The seed selects the offset into
/// the underlying Halton sequence, so equal seeds give identical points.
std::vector<std::vector<Complex>> sample_shell(int n, double inner_radius, std::size_t count,
                                               std::uint64_t seed);

inline std::vector<std::vector<Complex>> sample_ball(int n, std::size_t count,
                                                     std::uint64_t seed) {
    return sample_shell(n, 0.0, count, seed);
}

/// Area of the convex hull of a planar point set (0 for fewer than 3 points).
double convex_hull_area(const std::vector<Complex>& points);

}  // namespace hsball
