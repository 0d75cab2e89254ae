#pragma once

#include <optional>
#include <vector>

#include "orthoradial/labeling.hpp"

namespace orth {

struct MonotoneCycleWitness {
  CycleLabeling labeling;  // cycle + labels, cls Increasing or Decreasing
};

// Left-first DFS from start dart vw with search label 0: follows outgoing
// darts clockwise after the reference (tree) edge, skipping visited vertices
// and negative search labels; returns the candidate cycle through vw if the
// origin of vw is reached.  The candidate still needs verification.
std::optional<std::vector<int>> left_first_dfs(const Rep& rep, int start);

// All-starts search for a decreasing cycle; every candidate is verified
// (essential in its direction and classified decreasing).  jobs > 1 runs the
// starts in parallel (first verified witness in start order wins when
// deterministic; any witness otherwise).
std::optional<MonotoneCycleWitness> find_decreasing_cycle(const Rep& rep, int jobs = 1,
                                                          bool deterministic = true);

// Mirror trick: decreasing cycles of mirror(rep) are the increasing cycles of
// rep (reversed, labels negated).
std::optional<MonotoneCycleWitness> find_increasing_cycle(const Rep& rep, int jobs = 1,
                                                          bool deterministic = true);

struct ValidityResult {
  bool valid = false;
  std::optional<MonotoneCycleWitness> witness;
};

// throws NotLocallyConsistent if the representation violates the vertex/face
// conditions
ValidityResult is_valid(const Rep& rep, int jobs = 1, bool deterministic = true);

// Brute-force oracle: enumerates all simple cycles, keeps the essential ones
// (in canonical direction) and reports every strictly monotone one.  Refuses
// graphs with more than `limit` vertices.
std::vector<MonotoneCycleWitness> oracle_validity(const Rep& rep, int limit = 14);

// All essential simple cycles with labels, canonical direction (used by the
// oracle and by the label-algebra property tests).
std::vector<CycleLabeling> enumerate_essential_cycles(const Rep& rep, int limit = 14);

// All simple cycles, canonically directed (interior right).
std::vector<std::vector<int>> enumerate_simple_cycles(const Rep& rep, int limit = 14);

}  // namespace orth
