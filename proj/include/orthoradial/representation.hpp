#pragma once

#include <cstdint>
#include <vector>

#include "orthoradial/plane_graph.hpp"

namespace orth {

// Ortho-radial representation: an instance plus one rotation value per
// combinatorial angle and a designated reference dart on the outer face.
//
// corner[d] is the rotation of the angle at target(d) between the edge of d
// and the ccw-next edge there, i.e. the corner of the face right of d that the
// facial walk passes when leaving target(d).  Values lie in {-2,-1,0,1}
// (360/270/180/90 degrees).  Summing corner[] over a facial walk gives the
// face rotation of the local-consistency conditions.
struct Rep {
  Instance inst;
  std::vector<std::int8_t> corner;
  int reference_dart = -1;

  const PlaneGraph& g() const { return inst.g; }
  PlaneGraph& g() { return inst.g; }

  // rotation from incoming dart din to outgoing dart dout at the shared
  // vertex target(din) == origin(dout), by the k-edge formula
  // sum(corners) - 2(k-2).
  int rot_between(int din, int dout) const;

  // sum of rotations at the internal vertices of a dart path / cycle
  int rot_path(const std::vector<int>& darts) const;
  int rot_cycle(const std::vector<int>& darts) const;
  int rot_face(int f) const;
};

// directions mod 4 relative to the reference dart: 0 right, 1 down, 2 left,
// 3 up
enum Direction { DirRight = 0, DirDown = 1, DirLeft = 2, DirUp = 3 };

struct ConsistencyReport {
  std::vector<int> bad_vertices;              // vertex sum != 2(deg-2) or corner range
  std::vector<std::pair<int, int>> bad_faces; // (face, rotation found)
  bool ok() const { return bad_vertices.empty() && bad_faces.empty(); }
};

ConsistencyReport check_local_consistency(const Rep& rep);
void require_locally_consistent(const Rep& rep);  // throws NotLocallyConsistent

// combinatorial direction of every dart, one BFS from the reference dart
std::vector<int> direction_map(const Rep& rep);

// 4-case combinatorial direction of e2 relative to e along reference path P
// (possibly empty).  P must contain neither e nor e2 and connect an endpoint
// of e to an endpoint of e2.
int dir(const Rep& rep, int e, const std::vector<int>& P, int e2);

// Reverses all rotation orders; angle (e1,e2) becomes (~e2,~e1) with the same
// value; the reference dart is reversed.  Labels of essential cycles negate.
Rep mirror(const Rep& rep);

// Exchanges central and outer face; the new reference dart is the reverse of
// the first label-0 edge on the (old) central cycle in walk order.  Requires
// that cycle not strictly monotone.  Labels of essential cycles are preserved
// (on reversed cycles).
Rep flip(const Rep& rep);

// Moves the reference dart along the outermost essential cycle; requires
// rot(C_o[e*, e**]) == 0 so that all labelings are unchanged.
Rep change_reference_edge(const Rep& rep, int new_ref);

// Construction-time checks shared by io and the generator: reference dart on
// the outermost essential cycle, corner table sized to the darts.
void validate_rep(const Rep& rep);

}  // namespace orth
