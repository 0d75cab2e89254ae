#pragma once

#include <vector>

#include "orthoradial/representation.hpp"

namespace orth {

enum class CycleClass { Horizontal, Increasing, Decreasing, NonMonotone };

const char* cycle_class_name(CycleClass c);

// An essential cycle (darts, directed with the central face inside / interior
// to the right) with its per-edge labels.
struct CycleLabeling {
  std::vector<int> cycle;
  std::vector<int> labels;  // aligned with cycle
  CycleClass cls = CycleClass::NonMonotone;
};

// true iff the central face lies strictly inside C; C must be directed with
// its interior to the right (throws WrongOrientation otherwise).
bool is_essential(const Rep& rep, const std::vector<int>& C);

// non-throwing variant used by the search: true iff, taking the right side of
// C as interior, the central face is inside and the outer face is not.
bool essential_in_direction(const Rep& rep, const std::vector<int>& C);

// The outermost essential cycle: the unique essential cycle all of whose
// edges bound the outer face.  Directed with interior to the right (so it
// traverses the reference dart forwards).
std::vector<int> outermost_cycle(const Rep& rep);

// The essential cycle bounding the central face, interior to the right.
std::vector<int> central_cycle(const Rep& rep);

// A C-respecting path (darts) from target(reference dart) to origin(anchor),
// lying in the closed exterior of C and avoiding the edges of the reference
// dart and of anchor.  May be empty.
std::vector<int> reference_path(const Rep& rep, const std::vector<int>& C, int anchor);

CycleClass classify(const std::vector<int>& labels);

// Labels of all edges of the essential cycle C: the anchor label comes from a
// reference path, the rest by adding rotations along C.
CycleLabeling labels(const Rep& rep, const std::vector<int>& C);

}  // namespace orth
