#include "orthoradial/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace orth {

const char* err_name(Err k) {
  switch (k) {
    case Err::NonPlanarOrInconsistent: return "NonPlanarOrInconsistent";
    case Err::DegreeExceeded: return "DegreeExceeded";
    case Err::SelfLoop: return "SelfLoop";
    case Err::Disconnected: return "Disconnected";
    case Err::UnknownEdge: return "UnknownEdge";
    case Err::PositionsNotOnFace: return "PositionsNotOnFace";
    case Err::NotACycle: return "NotACycle";
    case Err::NotSimple: return "NotSimple";
    case Err::WrongOrientation: return "WrongOrientation";
    case Err::NotIncident: return "NotIncident";
    case Err::NotAPath: return "NotAPath";
    case Err::InvalidReferencePath: return "InvalidReferencePath";
    case Err::CentralFaceStrictlyMonotone: return "CentralFaceStrictlyMonotone";
    case Err::RotationNonZero: return "RotationNonZero";
    case Err::NotOnOuterCycle: return "NotOnOuterCycle";
    case Err::NotEssential: return "NotEssential";
    case Err::NotLocallyConsistent: return "NotLocallyConsistent";
    case Err::TooLarge: return "TooLarge";
    case Err::NotRegular: return "NotRegular";
    case Err::NotACandidate: return "NotACandidate";
    case Err::NotValid: return "NotValid";
    case Err::NotRectangular: return "NotRectangular";
    case Err::Infeasible: return "Infeasible";
    case Err::ParseError: return "ParseError";
    case Err::ParamsOutOfRange: return "ParamsOutOfRange";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

int PlaneGraph::degree(int v) const {
  int d0 = vertex_dart[v], d = d0, n = 0;
  do {
    ++n;
    d = dart_next[d];
  } while (d != d0);
  return n;
}

std::vector<int> PlaneGraph::out_darts(int v) const {
  std::vector<int> out;
  int d0 = vertex_dart[v], d = d0;
  do {
    out.push_back(d);
    d = dart_next[d];
  } while (d != d0);
  return out;
}

PlaneGraph PlaneGraph::build(const std::vector<std::string>& vertices,
                             const std::vector<std::vector<std::pair<int, int>>>& adj) {
  if (adj.size() != vertices.size())
    throw Error(Err::ParseError, "adjacency size does not match vertex count");
  const int n = (int)vertices.size();
  PlaneGraph g;
  g.vertex_name = vertices;
  g.vertex_tag.assign(n, Tag::Original);
  g.vertex_dart.assign(n, -1);

  // (u,v,slot) -> dart id; twin pairing by matching (v,u,slot).
  std::map<std::tuple<int, int, int>, int> dart_id;
  for (int u = 0; u < n; ++u) {
    if (adj[u].empty()) throw Error(Err::Disconnected, "isolated vertex " + vertices[u]);
    if (adj[u].size() > 4)
      throw Error(Err::DegreeExceeded, "vertex " + vertices[u] + " has degree > 4");
    for (auto [v, slot] : adj[u]) {
      if (v == u) throw Error(Err::SelfLoop, "self-loop at " + vertices[u]);
      if (v < 0 || v >= n) throw Error(Err::ParseError, "neighbor out of range");
      if (dart_id.count({u, v, slot}))
        throw Error(Err::NonPlanarOrInconsistent,
                    "duplicate adjacency entry at " + vertices[u]);
      auto it = dart_id.find({v, u, slot});
      int d;
      if (it == dart_id.end()) {
        d = (int)g.dart_origin.size();
        g.dart_origin.push_back(u);
        g.dart_origin.push_back(-1);  // reserved for the twin
        g.edge_tag.push_back(Tag::Original);
      } else {
        d = twin(it->second);
        if (g.dart_origin[d] != -1)
          throw Error(Err::NonPlanarOrInconsistent, "edge matched three times");
        g.dart_origin[d] = u;
      }
      dart_id[{u, v, slot}] = d;
    }
  }
  for (auto& [key, d] : dart_id) {
    if (g.dart_origin[twin(d)] == -1)
      throw Error(Err::NonPlanarOrInconsistent,
                  "unmatched adjacency entry at " + vertices[std::get<0>(key)]);
  }

  // rotation rings in list order
  g.dart_next.assign(g.dart_origin.size(), -1);
  g.dart_prev.assign(g.dart_origin.size(), -1);
  for (int u = 0; u < n; ++u) {
    const int k = (int)adj[u].size();
    std::vector<int> ring(k);
    for (int i = 0; i < k; ++i)
      ring[i] = dart_id.at({u, adj[u][i].first, adj[u][i].second});
    g.vertex_dart[u] = ring[0];
    for (int i = 0; i < k; ++i) {
      g.dart_next[ring[i]] = ring[(i + 1) % k];
      g.dart_prev[ring[(i + 1) % k]] = ring[i];
    }
  }

  // connectivity
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int d : g.out_darts(u)) {
      int v = g.target(d);
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != n) throw Error(Err::Disconnected, "graph is not connected");

  g.recompute_faces();
  if (g.num_vertices() - g.num_edges() + g.num_faces() != 2)
    throw Error(Err::NonPlanarOrInconsistent, "Euler formula violated");
  return g;
}

void PlaneGraph::recompute_faces() {
  dart_face.assign(num_darts(), -1);
  face_walk.clear();
  for (int d0 = 0; d0 < num_darts(); ++d0) {
    if (dart_face[d0] != -1) continue;
    int f = (int)face_walk.size();
    face_walk.emplace_back();
    int d = d0;
    do {
      dart_face[d] = f;
      face_walk[f].push_back(d);
      d = face_next(d);
    } while (d != d0);
  }
}

int PlaneGraph::subdivide(int e, Tag tag) {
  if (e < 0 || e >= num_edges()) throw Error(Err::UnknownEdge, "no such edge");
  const int d1 = 2 * e + 1;
  const int v = dart_origin[d1];
  const int z = num_vertices();
  vertex_dart.push_back(-1);
  vertex_name.push_back("s" + std::to_string(z));
  vertex_tag.push_back(tag);

  // d0: u->z, d1: z->u, new pair d2: z->v, d3: v->z (d3 takes d1's place at v)
  const int d2 = num_darts(), d3 = d2 + 1;
  dart_origin.push_back(z);
  dart_origin.push_back(v);
  edge_tag.push_back(edge_tag[e]);
  dart_next.resize(num_darts());
  dart_prev.resize(num_darts());
  if (dart_next[d1] == d1) {  // v had degree 1
    dart_next[d3] = d3;
    dart_prev[d3] = d3;
  } else {
    dart_next[d3] = dart_next[d1];
    dart_prev[d3] = dart_prev[d1];
    dart_next[dart_prev[d1]] = d3;
    dart_prev[dart_next[d1]] = d3;
  }
  if (vertex_dart[v] == d1) vertex_dart[v] = d3;
  dart_origin[d1] = z;
  dart_next[d1] = d2;
  dart_prev[d1] = d2;
  dart_next[d2] = d1;
  dart_prev[d2] = d1;
  vertex_dart[z] = d1;
  recompute_faces();
  return z;
}

int PlaneGraph::insert_edge_in_face(int f, int a, int b, Tag tag) {
  if (f < 0 || f >= num_faces()) throw Error(Err::PositionsNotOnFace, "no such face");
  const auto& walk = face_walk[f];
  if (a < 0 || a >= (int)walk.size() || b < 0 || b >= (int)walk.size() || a == b)
    throw Error(Err::PositionsNotOnFace, "bad corner positions");
  const int da = walk[a], db = walk[b];
  const int x = target(da), y = target(db);
  if (x == y) throw Error(Err::SelfLoop, "corners at the same vertex");

  const int e = num_edges();
  const int dx = 2 * e, dy = 2 * e + 1;  // dx: x->y, dy: y->x
  dart_origin.push_back(x);
  dart_origin.push_back(y);
  edge_tag.push_back(tag);
  dart_next.resize(num_darts());
  dart_prev.resize(num_darts());
  // splice dx into x's ring right after twin(da) (ccw), i.e. inside the corner
  // of f at x; same for dy at y.
  auto splice_after = [&](int after, int nd) {
    dart_next[nd] = dart_next[after];
    dart_prev[nd] = after;
    dart_prev[dart_next[after]] = nd;
    dart_next[after] = nd;
  };
  splice_after(twin(da), dx);
  splice_after(twin(db), dy);
  recompute_faces();
  return e;
}

// Moves the dart pair of the last edge into the (unlinked) slot of edge e and
// shrinks the tables.  Callers must have unlinked e's darts already.
void PlaneGraph::move_last_edge_into(int e) {
  const int last = num_edges() - 1;
  if (e != last) {
    for (int i : {0, 1}) {
      int from = 2 * last + i, to = 2 * e + i;
      auto remap = [&](int d) { return d == from ? to : d == twin(from) ? twin(to) : d; };
      dart_origin[to] = dart_origin[from];
      dart_next[to] = remap(dart_next[from]);
      dart_prev[to] = remap(dart_prev[from]);
      dart_next[dart_prev[to]] = to;
      dart_prev[dart_next[to]] = to;
      if (vertex_dart[dart_origin[to]] == from) vertex_dart[dart_origin[to]] = to;
    }
    edge_tag[e] = edge_tag[last];
  }
  dart_origin.resize(2 * last);
  dart_next.resize(2 * last);
  dart_prev.resize(2 * last);
  edge_tag.pop_back();
}

void PlaneGraph::delete_edge(int e) {
  if (e < 0 || e >= num_edges()) throw Error(Err::UnknownEdge, "no such edge");
  for (int d : {2 * e, 2 * e + 1}) {
    int u = dart_origin[d];
    if (dart_next[d] == d) throw Error(Err::Disconnected, "deletion would isolate " + vertex_name[u]);
    dart_next[dart_prev[d]] = dart_next[d];
    dart_prev[dart_next[d]] = dart_prev[d];
    if (vertex_dart[u] == d) vertex_dart[u] = dart_next[d];
  }
  move_last_edge_into(e);
  recompute_faces();
}

void PlaneGraph::smooth(int v) {
  if (v < 0 || v >= num_vertices() || degree(v) != 2)
    throw Error(Err::NotSimple, "smooth requires a degree-2 vertex");
  const int a = vertex_dart[v];        // v->x
  const int b = dart_next[a];          // v->y
  const int x = target(a), y = target(b);
  if (x == y) throw Error(Err::SelfLoop, "smoothing would create a self-loop or parallel pair");
  // keep edge_of(a): its darts become x->y (twin(a)) and y->x (a); edge_of(b)
  // and vertex v are removed.
  const int tb = twin(b);  // y->v, to be replaced by a in y's ring
  if (dart_next[tb] == tb) {
    dart_next[a] = a;
    dart_prev[a] = a;
  } else {
    dart_next[a] = dart_next[tb];
    dart_prev[a] = dart_prev[tb];
    dart_next[dart_prev[tb]] = a;
    dart_prev[dart_next[tb]] = a;
  }
  dart_origin[a] = y;
  if (vertex_dart[y] == tb) vertex_dart[y] = a;

  // drop edge_of(b) (darts b and tb are now fully unlinked)
  move_last_edge_into(edge_of(b));

  // drop vertex v
  const int lastv = num_vertices() - 1;
  if (v != lastv) {
    for (int d : out_darts(lastv)) dart_origin[d] = v;
    vertex_dart[v] = vertex_dart[lastv];
    vertex_name[v] = vertex_name[lastv];
    vertex_tag[v] = vertex_tag[lastv];
  }
  vertex_dart.pop_back();
  vertex_name.pop_back();
  vertex_tag.pop_back();
  recompute_faces();
}

void PlaneGraph::check_cycle(const std::vector<int>& cycle) const {
  if (cycle.size() < 2) throw Error(Err::NotACycle, "cycle too short");
  std::vector<char> on(num_vertices(), 0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    int d = cycle[i];
    if (d < 0 || d >= num_darts()) throw Error(Err::NotACycle, "bad dart");
    if (target(d) != origin(cycle[(i + 1) % cycle.size()]))
      throw Error(Err::NotACycle, "darts do not chain");
    if (on[origin(d)]) throw Error(Err::NotSimple, "repeated vertex on cycle");
    on[origin(d)] = 1;
  }
}

std::vector<int> PlaneGraph::right_side_faces(const std::vector<int>& cycle) const {
  check_cycle(cycle);
  std::vector<char> blocked(num_edges(), 0);
  for (int d : cycle) blocked[edge_of(d)] = 1;
  std::vector<char> in(num_faces(), 0);
  std::queue<int> q;
  int f0 = dart_face[cycle[0]];
  in[f0] = 1;
  q.push(f0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int d : face_walk[f]) {
      if (blocked[edge_of(d)]) continue;
      int g = dart_face[twin(d)];
      if (!in[g]) {
        in[g] = 1;
        q.push(g);
      }
    }
  }
  std::vector<int> out;
  for (int f = 0; f < num_faces(); ++f)
    if (in[f]) out.push_back(f);
  return out;
}

std::vector<int> PlaneGraph::interior_faces(const std::vector<int>& cycle, int outer_face) const {
  auto in = right_side_faces(cycle);
  if (std::find(in.begin(), in.end(), outer_face) != in.end())
    throw Error(Err::WrongOrientation, "cycle is not directed with its interior to the right");
  return in;
}

}  // namespace orth
