#pragma once

#include <cstdint>
#include <vector>

#include "orthoradial/representation.hpp"

namespace orth {

enum class GenMode { Grid, Perturbed, Spiral };

// Cylinder grid: `rings` concentric cycles of `spokes` vertices each, all
// spoke edges present, flat angles.  Always a valid representation.
Rep make_cylinder_grid(int rings, int spokes);

// rings x spokes cylinder grid with a chosen subset of spoke edges;
// spoke_present[row * spokes + j] selects the edge between ring row and
// row+1 at position j.  Every row needs at least one spoke (connectivity).
Rep make_partial_grid(int rings, int spokes, const std::vector<char>& spoke_present);

// "Tilt" of edge e: rotates the edge by 90 degrees by shifting one unit of
// angle between the corners flanking it at both endpoints.  Preserves local
// consistency exactly; returns false (rep untouched) if a corner would leave
// the admissible range.  sign is +1 or -1.
bool tilt_edge(Rep& rep, int e, int sign);

// Deterministic pseudo-random instance.
//   Grid: full cylinder grid, always valid.
//   Perturbed: partial grid + random tilts, locally consistent, validity
//     unknown.
//   Spiral: partial grid with two opposite tilts planted on a ring whose
//     other vertices have degree 2 -> that ring cycle is strictly monotone,
//     always invalid.
Rep generate(std::uint64_t seed, int n, GenMode mode);

}  // namespace orth
