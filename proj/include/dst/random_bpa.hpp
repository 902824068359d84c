// Deterministic random BPA generation for experiments and tests.
//
// The generator is fully pinned so that (frame, focal_count, seed) yields the
// same BPA on every platform: a std::mt19937_64 stream, doubles derived as
// (x >> 11) * 2^-53, focal sets drawn by sparse Fisher-Yates over the
// non-empty subsets, and masses taken as the gaps between sorted uniforms
// (a flat Dirichlet sample), renormalized to sum one.
#pragma once

#include <cstdint>

#include "dst/mass_function.hpp"

namespace dst {

// Requires 1 <= focal_count <= 2^n - 1.
MassFunction random_bpa(const Frame& frame, int focal_count,
                        std::uint64_t seed);

}  // namespace dst
