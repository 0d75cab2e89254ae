#pragma once

#include <functional>
#include <optional>

#include "orthoradial/validity.hpp"

namespace orth {

// A concave corner of a regular face that is eligible for augmentation: the
// corner at u (walk position walk_index, i.e. the corner after face_walk[f]
// [walk_index]) turns left, and the next two proper turns of the facial walk
// turn right.
struct Port {
  int u = -1;
  int f = -1;
  int walk_index = -1;           // position of the dart entering u at the corner
  bool vertical = false;         // kind: derived from new_edge_direction
  int new_edge_direction = -1;   // direction a new edge uz would take
};

struct CandidateList {
  Port port;
  std::vector<int> darts;  // darts vw of f with rot(f[u,vw]) == 2, walk order
};

// Result of augmenting at a port: the candidate edge is subdivided at a fresh
// vertex z and the edge uz is inserted into f.
struct Augmentation {
  Rep rep;
  int uz = -1;  // dart u -> z of the new edge
  int z = -1;
};

struct RectangularRep {
  Rep rep;  // provenance lives in the vertex/edge tags of the graph
};

enum class RectStrategy { Naive, Fast, BinarySearch };

// Observer invoked for every augmentation whose validity gets tested during
// resolution (used by the test suite to cross-check the fast test against the
// full search on exactly the augmentations the algorithm sees).
using AugmentationHook = std::function<void(const Rep& augmented, int uz)>;

// Subdivides edge e keeping the representation locally consistent (the new
// vertex gets two 180-degree angles); returns the new vertex.
int rep_subdivide(Rep& rep, int e, Tag tag);

// Inserts length-3 cycles into the central and the outer face, each connected
// through a new vertex on a label-0 edge of the bounding cycle; moves the
// reference dart onto the new outer triangle.  The result is again valid and
// all labelings of pre-existing essential cycles are unchanged.
Rep preprocess(const Rep& rep);

// Scans the facial walk of a regular face for a port; empty if f is a
// rectangle (no concave corner).  Throws NotRegular for the designated faces.
std::optional<Port> find_port(const Rep& rep, int f);

CandidateList candidates(const Rep& rep, const Port& port);

// Augments at the port with the given candidate dart (must be listed by
// candidates()).  Output is locally consistent but not necessarily valid.
Augmentation augment(const Rep& rep, const Port& port, int candidate_dart);

// Single left-first DFS from uz with search label 0; returns a verified
// decreasing witness if the augmented representation has one.  Sound when uz
// points right and either uz was inserted at the first candidate or an earlier
// candidate's augmentation contained a decreasing cycle.
std::optional<MonotoneCycleWitness> fast_decreasing_test(const Rep& rep_aug, int uz);

// The maximal path of horizontal edges through w = target(candidate_dart); if
// the port vertex u is one of its endpoints, returns the other endpoint.
std::optional<int> check_horizontal_path(const Rep& rep, const Port& port, int candidate_dart);

// Finds a valid augmentation for a horizontal port via the chosen strategy
// (full searches / linear fast tests / binary search with fast tests); falls
// back to inserting a direct horizontal edge uz closing a horizontal cycle
// when the search lands between a decreasing and an increasing outcome.
Rep resolve_horizontal_port(const Rep& rep, const Port& port,
                            RectStrategy strategy = RectStrategy::BinarySearch,
                            const AugmentationHook& hook = nullptr);

// true iff no regular face has a concave corner
bool is_rectangular(const Rep& rep);

// Full pipeline: preprocess, then resolve ports of non-rectangular regular
// faces (smallest face id first; vertical ports take the first candidate)
// until every regular face is a rectangle.  Throws NotValid on invalid input.
RectangularRep rectangulate(const Rep& rep,
                            RectStrategy strategy = RectStrategy::BinarySearch,
                            const AugmentationHook& hook = nullptr);

}  // namespace orth
