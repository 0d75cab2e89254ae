#include "orthoradial/labeling.hpp"

#include <algorithm>
#include <queue>

namespace orth {

const char* cycle_class_name(CycleClass c) {
  switch (c) {
    case CycleClass::Horizontal: return "horizontal";
    case CycleClass::Increasing: return "increasing";
    case CycleClass::Decreasing: return "decreasing";
    case CycleClass::NonMonotone: return "non-monotone";
  }
  return "?";
}

bool essential_in_direction(const Rep& rep, const std::vector<int>& C) {
  auto right = rep.g().right_side_faces(C);
  bool central = std::find(right.begin(), right.end(), rep.inst.central_face) != right.end();
  bool outer = std::find(right.begin(), right.end(), rep.inst.outer_face) != right.end();
  return central && !outer;
}

bool is_essential(const Rep& rep, const std::vector<int>& C) {
  auto in = rep.g().interior_faces(C, rep.inst.outer_face);  // checks orientation
  return std::find(in.begin(), in.end(), rep.inst.central_face) != in.end();
}

// Splits a closed dart walk into simple cycles (the walk is the boundary of a
// face with bridge excursions removed; nested cycles pop off a stack).
static std::vector<std::vector<int>> decompose_closed_walk(const PlaneGraph& g,
                                                           const std::vector<int>& walk) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> stack;
  std::vector<int> pos(g.num_vertices(), -1);
  for (int d : walk) {
    if (!stack.empty() && g.target(stack.back()) != g.origin(d))
      throw Error(Err::Internal, "boundary walk is not chained");
    stack.push_back(d);
    pos[g.origin(d)] = (int)stack.size() - 1;
    int v = g.target(d);
    if (pos[v] != -1) {
      const int p = pos[v];
      std::vector<int> cyc(stack.begin() + p, stack.end());
      for (int x : cyc) pos[g.origin(x)] = -1;
      stack.resize(p);  // origins below keep their positions
      cycles.push_back(std::move(cyc));
    }
  }
  if (!stack.empty()) cycles.push_back(std::move(stack));
  return cycles;
}

static std::vector<int> essential_boundary_cycle(const Rep& rep, int face, bool reverse_darts) {
  const PlaneGraph& g = rep.g();
  std::vector<int> walk;
  for (int d : g.face_walk[face])
    if (g.dart_face[PlaneGraph::twin(d)] != face) walk.push_back(d);  // drop bridges
  if (walk.empty())
    throw Error(Err::NotACycle, "face boundary contains no cycle");
  if (reverse_darts) {
    std::reverse(walk.begin(), walk.end());
    for (int& d : walk) d = PlaneGraph::twin(d);
  }
  for (auto& cyc : decompose_closed_walk(g, walk))
    if (essential_in_direction(rep, cyc)) return cyc;
  throw Error(Err::Internal, "no essential cycle on face boundary");
}

std::vector<int> outermost_cycle(const Rep& rep) {
  // the outer orbit has the outer face on the right; reverse to put the
  // interior (everything bounded, including the central face) on the right
  return essential_boundary_cycle(rep, rep.inst.outer_face, true);
}

std::vector<int> central_cycle(const Rep& rep) {
  return essential_boundary_cycle(rep, rep.inst.central_face, false);
}

std::vector<int> reference_path(const Rep& rep, const std::vector<int>& C, int anchor) {
  const PlaneGraph& g = rep.g();
  const int s = g.target(rep.reference_dart);
  const int t = g.origin(anchor);
  if (s == t) return {};
  auto right = g.right_side_faces(C);
  std::vector<char> interior(g.num_faces(), 0);
  for (int f : right) interior[f] = 1;
  const int eref = g.edge_of(rep.reference_dart), eanc = g.edge_of(anchor);
  auto allowed = [&](int d) {
    int e = g.edge_of(d);
    if (e == eref || e == eanc) return false;
    // an edge strictly inside C has both sides in the interior
    return !(interior[g.dart_face[d]] && interior[g.dart_face[PlaneGraph::twin(d)]]);
  };
  std::vector<int> par(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  seen[s] = 1;
  std::queue<int> q;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int d : g.out_darts(u)) {
      if (!allowed(d)) continue;
      int v = g.target(d);
      if (seen[v]) continue;
      seen[v] = 1;
      par[v] = d;
      if (v == t) {
        std::vector<int> path;
        for (int x = t; x != s; x = g.origin(par[x])) path.push_back(par[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(v);
    }
  }
  throw Error(Err::InvalidReferencePath,
              "no path in the exterior of the cycle (should not happen on connected input)");
}

CycleClass classify(const std::vector<int>& labels) {
  bool pos = false, neg = false;
  for (int l : labels) {
    pos |= l > 0;
    neg |= l < 0;
  }
  if (!pos && !neg) return CycleClass::Horizontal;
  if (pos && !neg) return CycleClass::Decreasing;
  if (neg && !pos) return CycleClass::Increasing;
  return CycleClass::NonMonotone;
}

CycleLabeling labels(const Rep& rep, const std::vector<int>& C) {
  if (!essential_in_direction(rep, C)) throw Error(Err::NotEssential, "cycle is not essential");
  CycleLabeling out;
  out.cycle = C;
  out.labels.resize(C.size());
  auto P = reference_path(rep, C, C[0]);
  std::vector<int> walk;
  walk.push_back(rep.reference_dart);
  walk.insert(walk.end(), P.begin(), P.end());
  walk.push_back(C[0]);
  out.labels[0] = rep.rot_path(walk);
  for (size_t i = 1; i < C.size(); ++i)
    out.labels[i] = out.labels[i - 1] + rep.rot_between(C[i - 1], C[i]);
  // closure: rot(C) must be 0 for an essential cycle
  int closure = out.labels.back() + rep.rot_between(C.back(), C.front()) - out.labels[0];
  if (closure != 0)
    throw Error(Err::Internal, "essential cycle has nonzero rotation (inconsistent representation?)");
  out.cls = classify(out.labels);
  return out;
}

}  // namespace orth
