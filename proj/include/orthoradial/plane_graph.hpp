#pragma once

#include <string>
#include <vector>

#include "orthoradial/base.hpp"

namespace orth {

// Rotation-system (half-edge) representation of a connected planar graph with
// maximum degree 4.  Darts come in twin pairs: twin(d) == d^1.  Each dart d
// runs origin(d) -> target(d); dart_next[d] is the ccw-next dart around the
// origin vertex.
//
// Faces are the orbits of d -> next_ccw(twin(d)).  With counterclockwise
// rotation lists this puts every face to the RIGHT of its walk darts, i.e.
// bounded faces are walked clockwise.  All rotation arithmetic in the
// representation layer relies on this orientation.
struct PlaneGraph {
  std::vector<int> dart_origin;
  std::vector<int> dart_next;  // ccw successor around origin
  std::vector<int> dart_prev;  // ccw predecessor around origin
  std::vector<int> vertex_dart;  // one outgoing dart per vertex (-1 never: min degree 1)
  std::vector<std::string> vertex_name;
  std::vector<Tag> vertex_tag;
  std::vector<Tag> edge_tag;  // edge id = dart >> 1

  // derived by recompute_faces()
  std::vector<int> dart_face;
  std::vector<std::vector<int>> face_walk;

  int num_vertices() const { return (int)vertex_dart.size(); }
  int num_darts() const { return (int)dart_origin.size(); }
  int num_edges() const { return num_darts() / 2; }
  int num_faces() const { return (int)face_walk.size(); }

  static int twin(int d) { return d ^ 1; }
  int origin(int d) const { return dart_origin[d]; }
  int target(int d) const { return dart_origin[d ^ 1]; }
  int edge_of(int d) const { return d >> 1; }
  // face successor: next dart of the facial walk of the face right of d
  int face_next(int d) const { return dart_next[d ^ 1]; }
  int degree(int v) const;
  const std::string& name(int v) const { return vertex_name[v]; }

  // Outgoing darts of v in ccw order, starting at vertex_dart[v].
  std::vector<int> out_darts(int v) const;

  // Build from per-vertex ccw adjacency lists.  adj[u] lists (neighbor, slot)
  // pairs; the dart (u,v,slot) twins with (v,u,slot).  Slots distinguish
  // parallel edges (default 0 for simple edges).
  static PlaneGraph build(const std::vector<std::string>& vertices,
                          const std::vector<std::vector<std::pair<int, int>>>& adj);

  void recompute_faces();

  // Splits edge e into two edges joined at a fresh degree-2 vertex; returns
  // the new vertex.  The dart pair of e keeps its ids and becomes the half
  // incident to origin(2e); a new pair is appended for the other half.
  int subdivide(int e, Tag tag);

  // Inserts an edge inside face f between the corners at walk positions a and
  // b.  Position i denotes the corner at target(face_walk[f][i]), i.e. between
  // walk dart i and walk dart i+1.  Returns the new edge id; its dart 2e runs
  // from target(walk[a]) to target(walk[b]).
  int insert_edge_in_face(int f, int a, int b, Tag tag);

  // Inverse mutations (used by tests for the inverse-pair properties and by
  // rectangulation debug checks).  Both relabel: the last edge/vertex is moved
  // into the freed slot.
  void delete_edge(int e);
  void smooth(int v);  // v must have degree 2 and distinct neighbors

  // Faces strictly inside the directed simple cycle (given as darts).  The
  // cycle must be directed with its interior to the right; outer_face is used
  // to check that precondition (the interior never contains the outer face).
  std::vector<int> interior_faces(const std::vector<int>& cycle, int outer_face) const;

  // Right-side faces of a directed simple cycle, no orientation check.
  std::vector<int> right_side_faces(const std::vector<int>& cycle) const;

  void check_cycle(const std::vector<int>& cycle) const;  // throws NotACycle/NotSimple

 private:
  void move_last_edge_into(int e);
};

// An ortho-radial instance: embedding plus the two designated faces.
struct Instance {
  PlaneGraph g;
  int central_face = -1;
  int outer_face = -1;
};

}  // namespace orth
