#include "orthoradial/representation.hpp"

#include <queue>

namespace orth {

int Rep::rot_between(int din, int dout) const {
  const PlaneGraph& gr = g();
  const int v = gr.target(din);
  if (gr.origin(dout) != v)
    throw Error(Err::NotIncident, "darts do not share a vertex");
  // walk ccw from the edge of din to the edge of dout, summing corners
  int acc = corner[din];
  int k = 2;
  int o = gr.dart_next[PlaneGraph::twin(din)];
  const int guard = gr.degree(v) + 1;
  while (o != dout) {
    acc += corner[PlaneGraph::twin(o)];
    o = gr.dart_next[o];
    if (++k > guard) throw Error(Err::Internal, "rotation walk did not terminate");
  }
  return acc - 2 * (k - 2);
}

int Rep::rot_path(const std::vector<int>& darts) const {
  if (darts.empty()) throw Error(Err::NotAPath, "empty path");
  int acc = 0;
  for (size_t i = 0; i + 1 < darts.size(); ++i) {
    if (g().target(darts[i]) != g().origin(darts[i + 1]))
      throw Error(Err::NotAPath, "darts do not chain");
    acc += rot_between(darts[i], darts[i + 1]);
  }
  return acc;
}

int Rep::rot_cycle(const std::vector<int>& darts) const {
  int acc = rot_path(darts);
  acc += rot_between(darts.back(), darts.front());
  return acc;
}

int Rep::rot_face(int f) const {
  int acc = 0;
  for (int d : g().face_walk[f]) acc += corner[d];
  return acc;
}

ConsistencyReport check_local_consistency(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  ConsistencyReport r;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int sum = 0;
    bool range_ok = true;
    for (int o : g.out_darts(v)) {
      int c = rep.corner[PlaneGraph::twin(o)];
      if (c < -2 || c > 1) range_ok = false;
      sum += c;
    }
    if (!range_ok || sum != 2 * (g.degree(v) - 2)) r.bad_vertices.push_back(v);
  }
  for (int f = 0; f < g.num_faces(); ++f) {
    int rot = rep.rot_face(f);
    bool is_outer = f == rep.inst.outer_face;
    bool is_central = f == rep.inst.central_face;
    int want = (is_outer && is_central) ? -4 : (is_outer || is_central) ? 0 : 4;
    if (rot != want) r.bad_faces.push_back({f, rot});
  }
  return r;
}

void require_locally_consistent(const Rep& rep) {
  auto r = check_local_consistency(rep);
  if (!r.ok()) {
    std::string msg = "representation is not locally consistent:";
    for (int v : r.bad_vertices) msg += " vertex " + rep.g().name(v);
    for (auto [f, rot] : r.bad_faces)
      msg += " face " + std::to_string(f) + " (rot " + std::to_string(rot) + ")";
    throw Error(Err::NotLocallyConsistent, msg);
  }
}

std::vector<int> direction_map(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  std::vector<int> dir(g.num_darts(), -1);
  std::vector<char> done(g.num_vertices(), 0);
  // BFS over vertices; entering a vertex fixes all its outgoing darts
  std::queue<int> q;  // darts with known direction
  dir[rep.reference_dart] = DirRight;
  q.push(rep.reference_dart);
  while (!q.empty()) {
    int d = q.front();
    q.pop();
    int u = g.origin(d);
    if (done[u]) continue;
    done[u] = 1;
    int din = PlaneGraph::twin(d);  // incoming dart with dir(d)+2
    for (int o : g.out_darts(u)) {
      if (o != d) dir[o] = (dir[d] + 2 + rep.rot_between(din, o)) % 4;
      if (dir[o] < 0) dir[o] += 4;
      int t = PlaneGraph::twin(o);
      if (dir[t] == -1) {
        dir[t] = (dir[o] + 2) % 4;
        if (!done[g.origin(t)]) q.push(t);
      }
    }
  }
  return dir;
}

int dir(const Rep& rep, int e, const std::vector<int>& P, int e2) {
  const PlaneGraph& g = rep.g();
  for (int d : P)
    if (g.edge_of(d) == g.edge_of(e) || g.edge_of(d) == g.edge_of(e2))
      throw Error(Err::InvalidReferencePath, "reference path contains an end edge");
  const int ps = P.empty() ? -1 : g.origin(P.front());
  const int pt = P.empty() ? -1 : g.target(P.back());
  auto matches = [&](int a, int b) {
    if (P.empty()) return a == b;
    return ps == a && pt == b;
  };
  std::vector<int> walk;
  auto assemble = [&](int first, int last) {
    walk.clear();
    walk.push_back(first);
    walk.insert(walk.end(), P.begin(), P.end());
    walk.push_back(last);
    return rep.rot_path(walk);
  };
  // the four cases of the combinatorial direction
  if (matches(g.target(e), g.origin(e2))) return assemble(e, e2);
  if (matches(g.origin(e), g.origin(e2)))
    return assemble(PlaneGraph::twin(e), e2) + 2;
  if (matches(g.target(e), g.target(e2)))
    return assemble(e, PlaneGraph::twin(e2)) - 2;
  if (matches(g.origin(e), g.target(e2)))
    return assemble(PlaneGraph::twin(e), PlaneGraph::twin(e2));
  throw Error(Err::InvalidReferencePath, "path does not connect the two edges");
}

Rep mirror(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  Rep m;
  m.inst.g = g;
  std::swap(m.inst.g.dart_next, m.inst.g.dart_prev);
  m.corner.assign(g.num_darts(), 0);
  for (int d = 0; d < g.num_darts(); ++d) {
    // old angle (d, sigma(twin d)) becomes (~sigma(twin d), ~d) in the mirror
    int d2 = PlaneGraph::twin(g.dart_next[PlaneGraph::twin(d)]);
    m.corner[d2] = rep.corner[d];
  }
  m.inst.g.recompute_faces();
  // identify outer/central: the face right of d in the mirror is the face
  // right of twin(d) in the original
  int od = rep.g().face_walk[rep.inst.outer_face][0];
  int cd = rep.g().face_walk[rep.inst.central_face][0];
  m.inst.outer_face = m.inst.g.dart_face[PlaneGraph::twin(od)];
  m.inst.central_face = m.inst.g.dart_face[PlaneGraph::twin(cd)];
  m.reference_dart = PlaneGraph::twin(rep.reference_dart);
  return m;
}

}  // namespace orth
