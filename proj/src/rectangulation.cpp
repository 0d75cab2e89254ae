#include "orthoradial/rectangulation.hpp"

#include <algorithm>

namespace orth {

int rep_subdivide(Rep& rep, int e, Tag tag) {
  PlaneGraph& g = rep.g();
  const int d0 = 2 * e;
  const int z = g.subdivide(e, tag);
  const int d2 = g.num_darts() - 2, d3 = d2 + 1;
  rep.corner.resize(g.num_darts(), 0);
  // the far end keeps its angle, the new vertex is flat on both sides
  rep.corner[d2] = rep.corner[d0];
  rep.corner[d0] = 0;
  rep.corner[d3] = 0;
  return z;
}

// Appends a pendant vertex attached to v, splicing the new dart right after
// `after` in v's counterclockwise ring.  Faces are NOT recomputed.  Returns
// the dart v -> new vertex.
static int add_pendant(PlaneGraph& g, int v, int after, Tag tag) {
  const int w = g.num_vertices();
  g.vertex_dart.push_back(-1);
  g.vertex_name.push_back("t" + std::to_string(w));
  g.vertex_tag.push_back(tag);
  const int dv = g.num_darts(), dw = dv + 1;
  g.dart_origin.push_back(v);
  g.dart_origin.push_back(w);
  g.edge_tag.push_back(tag);
  g.dart_next.resize(g.num_darts());
  g.dart_prev.resize(g.num_darts());
  g.dart_next[dv] = g.dart_next[after];
  g.dart_prev[dv] = after;
  g.dart_prev[g.dart_next[after]] = dv;
  g.dart_next[after] = dv;
  g.dart_next[dw] = dw;
  g.dart_prev[dw] = dw;
  g.vertex_dart[w] = dw;
  return dv;
}

struct TriangleResult {
  int m = -1;   // subdivision vertex on the host edge
  int t1 = -1;  // triangle vertex carrying the connector
  int tri_face = -1;
};

// Subdivides the edge of e_dart at m and hangs a 3-cycle into the face right
// of e_dart, connected through m.  The 3-cycle is flat on both sides (an
// essential ring); the four new 90-degree corners sit at m and at the
// connector vertex, which makes the face between the old boundary and the
// triangle a regular face.
static TriangleResult attach_triangle(Rep& rep, int e_dart) {
  PlaneGraph& g = rep.g();
  const int e = g.edge_of(e_dart);
  const int d0 = 2 * e;
  const bool host_is_d0 = e_dart == d0;
  const int m = rep_subdivide(rep, e, Tag::Preprocessing);
  const int d3 = g.num_darts() - 1;
  // dart entering m with the host face on its right
  const int din = host_is_d0 ? d0 : d3;

  const int c_mt1 = add_pendant(g, m, PlaneGraph::twin(din), Tag::Preprocessing);
  const int t1 = g.target(c_mt1);
  const int g_t1t2 = add_pendant(g, t1, PlaneGraph::twin(c_mt1), Tag::Preprocessing);
  const int t2 = g.target(g_t1t2);
  const int g_t2t3 = add_pendant(g, t2, PlaneGraph::twin(g_t1t2), Tag::Preprocessing);
  const int t3 = g.target(g_t2t3);
  g.recompute_faces();

  const int F = g.dart_face[c_mt1];
  const auto& walk = g.face_walk[F];
  int p = -1, q = -1;
  for (int i = 0; i < (int)walk.size(); ++i) {
    if (walk[i] == c_mt1) p = i;
    if (walk[i] == g_t2t3) q = i;
  }
  if (p < 0 || q < 0) throw Error(Err::Internal, "triangle chain not on host face");
  const int enew = g.insert_edge_in_face(F, p, q, Tag::Preprocessing);
  const int dx = 2 * enew;  // t1 -> t3, on the annulus side

  rep.corner.resize(g.num_darts(), 0);
  const int T = g.dart_face[g_t1t2];  // the 3-gon
  const int A = g.dart_face[dx];      // between old boundary and triangle
  for (int d : g.face_walk[T]) rep.corner[d] = 0;
  for (int d : g.face_walk[A]) {
    const int t = g.target(d);
    if (t == m || t == t1)
      rep.corner[d] = 1;
    else if (t == t2 || t == t3)
      rep.corner[d] = 0;
  }
  return {m, t1, T};
}

Rep preprocess(const Rep& rep) {
  auto res = is_valid(rep);
  if (!res.valid)
    throw Error(Err::NotValid, "representation has a strictly monotone cycle");
  Rep out = rep;

  // central triangle: hang it off a label-0 edge of the central cycle
  {
    auto C = central_cycle(out);
    auto lab = labels(out, C);
    int host = -1;
    for (size_t i = 0; i < C.size(); ++i)
      if (lab.labels[i] == 0) {
        host = C[i];
        break;
      }
    if (host == -1) throw Error(Err::Internal, "no label-0 edge on the central cycle");
    const int outer_dart = out.g().face_walk[out.inst.outer_face][0];
    auto tr = attach_triangle(out, host);
    out.inst.central_face = tr.tri_face;
    out.inst.outer_face = out.g().dart_face[outer_dart];
    require_locally_consistent(out);
  }

  // outer triangle off the reference edge, then move the reference onto it
  {
    const int central_dart = out.g().face_walk[out.inst.central_face][0];
    auto tr = attach_triangle(out, PlaneGraph::twin(out.reference_dart));
    out.inst.outer_face = tr.tri_face;
    out.inst.central_face = out.g().dart_face[central_dart];
    // the triangle dart arriving at the connector vertex with the outer face
    // on its left continues the old reference direction (rotation-0 path down
    // the connector), so labelings are unchanged
    int new_ref = -1;
    for (int d : out.g().face_walk[tr.tri_face])
      if (out.g().origin(d) == tr.t1) new_ref = PlaneGraph::twin(d);
    if (new_ref == -1) throw Error(Err::Internal, "connector vertex not on triangle");
    out.reference_dart = new_ref;
    require_locally_consistent(out);
    validate_rep(out);
  }
  return out;
}

std::optional<Port> find_port(const Rep& rep, int f) {
  const PlaneGraph& g = rep.g();
  if (f == rep.inst.outer_face || f == rep.inst.central_face)
    throw Error(Err::NotRegular, "ports are only defined on regular faces");
  const auto& walk = g.face_walk[f];
  const int L = (int)walk.size();
  bool any_concave = false;
  for (int i = 0; i < L; ++i) {
    if (rep.corner[walk[i]] > -1) continue;
    any_concave = true;
    // the next two proper (nonzero) turns must be right turns
    int rights = 0;
    bool ok = true;
    for (int s = 1; s < L && rights < 2; ++s) {
      const int c = rep.corner[walk[(i + s) % L]];
      if (c == 0) continue;
      if (c != 1) {
        ok = false;
        break;
      }
      ++rights;
    }
    if (!ok || rights < 2) continue;
    Port p;
    p.u = g.target(walk[i]);
    p.f = f;
    p.walk_index = i;
    auto dirs = direction_map(rep);
    // the new edge uz forms a 90-degree angle with the edge following u:
    // traversing z -> u -> follow turns right, so uz points one step
    // clockwise from the following edge
    p.new_edge_direction = (dirs[walk[(i + 1) % L]] + 1) % 4;
    p.vertical = p.new_edge_direction == DirDown || p.new_edge_direction == DirUp;
    return p;
  }
  if (any_concave) throw Error(Err::Internal, "concave face without a port");
  return std::nullopt;
}

CandidateList candidates(const Rep& rep, const Port& port) {
  const auto& walk = rep.g().face_walk[port.f];
  const int L = (int)walk.size();
  CandidateList out;
  out.port = port;
  int cum = 0;
  for (int s = 1; s < L; ++s) {
    if (s >= 2) cum += rep.corner[walk[(port.walk_index + s - 1) % L]];
    if (cum == 2) out.darts.push_back(walk[(port.walk_index + s) % L]);
  }
  return out;
}

Augmentation augment(const Rep& rep, const Port& port, int candidate_dart) {
  auto cl = candidates(rep, port);
  if (std::find(cl.darts.begin(), cl.darts.end(), candidate_dart) == cl.darts.end())
    throw Error(Err::NotACandidate, "dart is not a candidate of this port");

  Augmentation A;
  A.rep = rep;
  PlaneGraph& g = A.rep.g();
  const int f = port.f;
  int din = g.face_walk[f][port.walk_index];
  const int e = g.edge_of(candidate_dart);
  const bool cand_is_low = candidate_dart == 2 * e;
  const int outer_dart = g.face_walk[A.rep.inst.outer_face][0];
  const int central_dart = g.face_walk[A.rep.inst.central_face][0];

  A.z = rep_subdivide(A.rep, e, Tag::Subdivision);
  const int d2 = g.num_darts() - 2, d3 = d2 + 1;
  // if the corner's incoming dart was the low half of the split edge, the
  // dart entering u is now the appended half
  if (din == 2 * e) din = d2;
  const int zin = cand_is_low ? 2 * e : d3;  // enters z with f on the right

  const auto& walk = g.face_walk[f];
  int a_pos = -1, b_pos = -1;
  for (int i = 0; i < (int)walk.size(); ++i) {
    if (walk[i] == din) a_pos = i;
    if (walk[i] == zin) b_pos = i;
  }
  if (a_pos < 0 || b_pos < 0) throw Error(Err::Internal, "port corners lost after subdivision");

  const int r_u = A.rep.corner[din];
  const int enew = g.insert_edge_in_face(f, a_pos, b_pos, Tag::Augmentation);
  A.uz = 2 * enew;
  A.rep.corner.resize(g.num_darts(), 0);
  // split the concave corner at u, pinning 90 degrees between zu and the
  // following edge; the subdivision vertex gets two 90s on the face side
  A.rep.corner[din] = (std::int8_t)(r_u + 1);
  A.rep.corner[A.uz + 1] = 1;
  A.rep.corner[zin] = 1;
  A.rep.corner[A.uz] = 1;
  A.rep.inst.outer_face = g.dart_face[outer_dart];
  A.rep.inst.central_face = g.dart_face[central_dart];
  return A;
}

std::optional<MonotoneCycleWitness> fast_decreasing_test(const Rep& rep_aug, int uz) {
  auto cyc = left_first_dfs(rep_aug, uz);
  if (!cyc) return std::nullopt;
  if (!essential_in_direction(rep_aug, *cyc)) return std::nullopt;
  auto lab = labels(rep_aug, *cyc);
  if (lab.cls != CycleClass::Decreasing) return std::nullopt;
  return MonotoneCycleWitness{std::move(lab)};
}

std::optional<int> check_horizontal_path(const Rep& rep, const Port& port, int candidate_dart) {
  const PlaneGraph& g = rep.g();
  auto dirs = direction_map(rep);
  const int w = g.target(candidate_dart);
  auto step = [&](int v, int want) {
    int found = -1;
    for (int d : g.out_darts(v))
      if (dirs[d] == want) {
        if (found != -1)
          throw Error(Err::Internal, "two edges leave a vertex in the same direction");
        found = d;
      }
    return found;
  };
  auto walk_end = [&](int dir_code) {
    int v = w;
    for (int guard = 0; guard <= g.num_vertices(); ++guard) {
      const int d = step(v, dir_code);
      if (d == -1) return v;
      v = g.target(d);
      if (v == w) return -1;  // closed horizontal cycle, no endpoints
    }
    throw Error(Err::Internal, "horizontal walk did not terminate");
  };
  const int east = walk_end(DirRight), west = walk_end(DirLeft);
  if (east == -1 || west == -1) return std::nullopt;
  if (east == port.u) return west;
  if (west == port.u) return east;
  return std::nullopt;
}

// Inserts the direct horizontal edge u -> z inside the port's face, closing a
// horizontal cycle with the all-horizontal path between u and z.
static Rep insert_horizontal_edge(const Rep& rep, const Port& port, int z) {
  const auto& walk0 = rep.g().face_walk[port.f];
  const int din0 = walk0[port.walk_index];
  for (int b_pos = 0; b_pos < (int)walk0.size(); ++b_pos) {
    if (rep.g().target(walk0[b_pos]) != z || b_pos == port.walk_index) continue;
    Rep trial = rep;
    PlaneGraph& g = trial.g();
    const int outer_dart = g.face_walk[trial.inst.outer_face][0];
    const int central_dart = g.face_walk[trial.inst.central_face][0];
    const int zin = walk0[b_pos];
    const int r_u = trial.corner[din0], r_z = trial.corner[zin];
    const int enew = g.insert_edge_in_face(port.f, port.walk_index, b_pos, Tag::Augmentation);
    const int dx = 2 * enew;  // u -> z
    trial.corner.resize(g.num_darts(), 0);
    trial.corner[din0] = (std::int8_t)(r_u + 1);
    trial.corner[dx + 1] = 1;
    // the z-end split is pinned by the face rotations: the face right of dx
    // must be a regular face with rotation 4
    trial.corner[dx] = 0;
    trial.corner[zin] = 0;
    const int t2 = 4 - trial.rot_face(g.dart_face[dx]);
    const int t1 = r_z + 2 - t2;
    if (t1 < -2 || t1 > 1 || t2 < -2 || t2 > 1) continue;
    trial.corner[dx] = (std::int8_t)t2;
    trial.corner[zin] = (std::int8_t)t1;
    trial.inst.outer_face = g.dart_face[outer_dart];
    trial.inst.central_face = g.dart_face[central_dart];
    if (!check_local_consistency(trial).ok()) continue;
    return trial;
  }
  throw Error(Err::Internal, "could not close the horizontal cycle");
}

static Rep resolve_rightward(const Rep& rep, const Port& port, RectStrategy strategy,
                             const AugmentationHook& hook) {
  auto cl = candidates(rep, port);
  if (cl.darts.empty()) throw Error(Err::Internal, "port without candidates");
  const int m = (int)cl.darts.size();
  auto has_decreasing = [&](const Augmentation& A) {
    if (hook) hook(A.rep, A.uz);
    if (strategy == RectStrategy::Naive) return find_decreasing_cycle(A.rep).has_value();
    return fast_decreasing_test(A.rep, A.uz).has_value();
  };

  Augmentation first = augment(rep, port, cl.darts[0]);
  // the first candidate's augmentation never has an increasing cycle
  if (!has_decreasing(first)) return first.rep;
  if (m == 1) throw Error(Err::Internal, "last candidate yields a decreasing cycle");

  int lo = 0, hi = m - 1;
  if (strategy == RectStrategy::BinarySearch) {
    Augmentation last = augment(rep, port, cl.darts[hi]);
    if (has_decreasing(last))
      throw Error(Err::Internal, "last candidate yields a decreasing cycle");
    // invariant: lo decreasing, hi not
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      Augmentation am = augment(rep, port, cl.darts[mid]);
      if (has_decreasing(am))
        lo = mid;
      else
        hi = mid;
    }
  } else {
    hi = -1;
    for (int idx = 1; idx < m; ++idx) {
      Augmentation ai = augment(rep, port, cl.darts[idx]);
      if (!has_decreasing(ai)) {
        hi = idx;
        lo = idx - 1;
        break;
      }
    }
    if (hi == -1) throw Error(Err::Internal, "last candidate yields a decreasing cycle");
  }

  // between a decreasing and a non-decreasing outcome: either the horizontal
  // path through w_lo ends at u (then the direct edge closes a horizontal
  // cycle) or the right candidate's augmentation is already valid
  auto z = check_horizontal_path(rep, port, cl.darts[lo]);
  if (z) return insert_horizontal_edge(rep, port, *z);
  return augment(rep, port, cl.darts[hi]).rep;
}

Rep resolve_horizontal_port(const Rep& rep, const Port& port, RectStrategy strategy,
                            const AugmentationHook& hook) {
  if (port.new_edge_direction == DirLeft) {
    // normalize so the new edge points right; flipping reverses all
    // horizontal directions and keeps the combinatorics of the face
    Rep fl = flip(rep);
    Port p2 = port;
    p2.new_edge_direction = DirRight;
    Rep res = resolve_rightward(fl, p2, strategy, hook);
    return flip(res);
  }
  if (port.new_edge_direction != DirRight)
    throw Error(Err::ParamsOutOfRange, "not a horizontal port");
  return resolve_rightward(rep, port, strategy, hook);
}

bool is_rectangular(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  for (int f = 0; f < g.num_faces(); ++f) {
    if (f == rep.inst.outer_face || f == rep.inst.central_face) continue;
    for (int d : g.face_walk[f])
      if (rep.corner[d] < 0) return false;
  }
  return true;
}

static int concave_total(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  int total = 0;
  for (int f = 0; f < g.num_faces(); ++f) {
    if (f == rep.inst.outer_face || f == rep.inst.central_face) continue;
    for (int d : g.face_walk[f])
      if (rep.corner[d] < 0) total -= rep.corner[d];
  }
  return total;
}

RectangularRep rectangulate(const Rep& rep, RectStrategy strategy, const AugmentationHook& hook) {
  Rep cur = preprocess(rep);  // checks validity
  int guard = concave_total(cur);
  while (true) {
    int pick = -1;
    const PlaneGraph& g = cur.g();
    for (int f = 0; f < g.num_faces() && pick == -1; ++f) {
      if (f == cur.inst.outer_face || f == cur.inst.central_face) continue;
      for (int d : g.face_walk[f])
        if (cur.corner[d] < 0) {
          pick = f;
          break;
        }
    }
    if (pick == -1) break;
    auto port = find_port(cur, pick);
    if (!port) throw Error(Err::Internal, "non-rectangular face without a port");
    if (port->vertical) {
      auto cl = candidates(cur, *port);
      if (cl.darts.empty()) throw Error(Err::Internal, "port without candidates");
      cur = augment(cur, *port, cl.darts[0]).rep;  // always valid at a vertical port
    } else {
      cur = resolve_horizontal_port(cur, *port, strategy, hook);
    }
    const int now = concave_total(cur);
    if (now >= guard) throw Error(Err::Internal, "augmentation made no progress");
    guard = now;
  }
  return {std::move(cur)};
}

}  // namespace orth
