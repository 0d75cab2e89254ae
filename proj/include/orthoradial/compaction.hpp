#pragma once

#include "orthoradial/rectangulation.hpp"

namespace orth {

// Face-adjacency circulation network.  Every arc has lower bound 1; the upper
// bound stands in for "unbounded" as the number of arcs, which any sum of
// unit cycles stays below.
struct FlowArc {
  int from = -1, to = -1;  // face ids
  int edge = -1;           // crossing edge, -1 for the outer->central arc
};

struct FlowNetwork {
  std::vector<int> nodes;  // face ids
  std::vector<FlowArc> arcs;
  int upper = 0;
};

using Flow = std::vector<int>;  // one positive value per arc

struct OrthoRadialDrawing {
  std::vector<std::string> names;
  std::vector<int> ring;  // 0 = outermost, increasing toward the center
  std::vector<int> tick;  // angular position, normalized to [0, phi)
  int phi = 0;            // ticks of a full turn

  struct EdgeGeom {
    bool radial = false;
    int extent = 0;  // for dart 2e: ring change if radial, signed ticks if not
  };
  std::vector<EdgeGeom> edges;
};

// N_ver routes vertical-edge lengths between regular faces; N_hor routes
// central angles between all faces, with one extra arc from the outer to the
// central face.  Throws NotRectangular.
std::pair<FlowNetwork, FlowNetwork> build_networks(const RectangularRep& rect);

// Integer circulation with value >= 1 on every arc and conservation at every
// node.  Throws Infeasible, naming a violating node cut, if none exists.
Flow feasible_flow(const FlowNetwork& net);

// Cycle-canceling pass lowering the total flow value (smaller drawings).
void reduce_flow(const FlowNetwork& net, Flow& flow);

// Spanning-tree integration of the flows into ring/tick coordinates, anchored
// at the source of the reference edge (ring 0, tick 0).
OrthoRadialDrawing flows_to_coordinates(const RectangularRep& rect, const Flow& flow_ver,
                                        const Flow& flow_hor);

// build_networks + feasible_flow (+ optional reduce_flow) + integration
OrthoRadialDrawing draw_rectangular(const RectangularRep& rect, bool compact = false);

// Restricts the rectangular drawing to the original instance: augmentation
// elements are dropped and subdivision chains merged (they are collinear by
// construction).  `original` must be the representation rect was built from.
OrthoRadialDrawing project_back(const OrthoRadialDrawing& drawing, const RectangularRep& rect,
                                const Rep& original);

// Rotation of every combinatorial angle of rep as witnessed by the drawing's
// geometry (used to check that drawings realize their representation).
std::vector<std::int8_t> extract_corners(const OrthoRadialDrawing& drawing, const Rep& rep);

}  // namespace orth
