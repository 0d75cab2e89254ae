#include "orthoradial/compaction.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace orth {

std::pair<FlowNetwork, FlowNetwork> build_networks(const RectangularRep& rect) {
  const Rep& rep = rect.rep;
  const PlaneGraph& g = rep.g();
  if (!is_rectangular(rep))
    throw Error(Err::NotRectangular, "a regular face has a concave corner");
  auto dirs = direction_map(rep);
  for (int f : {rep.inst.outer_face, rep.inst.central_face})
    for (int d : g.face_walk[f])
      if (dirs[d] == DirUp || dirs[d] == DirDown)
        throw Error(Err::NotRectangular, "designated face bounded by a vertical edge");

  FlowNetwork ver, hor;
  for (int f = 0; f < g.num_faces(); ++f) {
    hor.nodes.push_back(f);
    if (f != rep.inst.outer_face && f != rep.inst.central_face) ver.nodes.push_back(f);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const int d = 2 * e;
    if (dirs[d] == DirUp || dirs[d] == DirDown) {
      const int up = dirs[d] == DirUp ? d : d + 1;
      // left face to right face of the upward direction
      ver.arcs.push_back({g.dart_face[PlaneGraph::twin(up)], g.dart_face[up], e});
    } else {
      const int east = dirs[d] == DirRight ? d : d + 1;
      // the face below (toward the center) to the face above
      hor.arcs.push_back({g.dart_face[east], g.dart_face[PlaneGraph::twin(east)], e});
    }
  }
  hor.arcs.push_back({rep.inst.outer_face, rep.inst.central_face, -1});
  ver.upper = std::max<int>(1, (int)ver.arcs.size());
  hor.upper = std::max<int>(1, (int)hor.arcs.size());
  return {ver, hor};
}

namespace {

// plain Dinic max-flow used for the lower-bound reduction
struct Dinic {
  struct E {
    int to, rev, cap;
  };
  std::vector<std::vector<E>> adj;
  std::vector<int> level, it;
  explicit Dinic(int n) : adj(n) {}
  void add(int u, int v, int cap) {
    adj[u].push_back({v, (int)adj[v].size(), cap});
    adj[v].push_back({u, (int)adj[u].size() - 1, 0});
  }
  bool bfs(int s, int t) {
    level.assign(adj.size(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto& e : adj[u])
        if (e.cap > 0 && level[e.to] == -1) {
          level[e.to] = level[u] + 1;
          q.push(e.to);
        }
    }
    return level[t] != -1;
  }
  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = it[u]; i < (int)adj[u].size(); ++i) {
      auto& e = adj[u][i];
      if (e.cap > 0 && level[e.to] == level[u] + 1) {
        int got = dfs(e.to, t, std::min(f, e.cap));
        if (got > 0) {
          e.cap -= got;
          adj[e.to][e.rev].cap += got;
          return got;
        }
      }
    }
    return 0;
  }
  int run(int s, int t) {
    int total = 0;
    while (bfs(s, t)) {
      it.assign(adj.size(), 0);
      int f;
      while ((f = dfs(s, t, 1 << 30)) > 0) total += f;
    }
    return total;
  }
};

}  // namespace

Flow feasible_flow(const FlowNetwork& net) {
  if (net.arcs.empty()) return {};
  std::map<int, int> id;
  for (int f : net.nodes) id.emplace(f, (int)id.size());
  const int n = (int)id.size();
  const int s = n, t = n + 1;
  Dinic din(n + 2);
  std::vector<int> excess(n, 0);
  std::vector<std::pair<int, int>> arc_edge;  // (node, index into adj) per arc
  for (const auto& a : net.arcs) {
    auto fu = id.find(a.from), fv = id.find(a.to);
    if (fu == id.end() || fv == id.end())
      throw Error(Err::Internal, "arc endpoint is not a network node");
    arc_edge.push_back({fu->second, (int)din.adj[fu->second].size()});
    din.add(fu->second, fv->second, net.upper - 1);  // capacity above the lower bound
    excess[fv->second] += 1;
    excess[fu->second] -= 1;
  }
  int need = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      din.add(s, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      din.add(v, t, -excess[v]);
    }
  }
  if (din.run(s, t) != need) {
    // the unsaturated side of the min cut names the faces whose demand for
    // incoming length cannot be met
    std::vector<char> reach(n + 2, 0);
    std::queue<int> q;
    reach[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto& e : din.adj[u])
        if (e.cap > 0 && !reach[e.to]) {
          reach[e.to] = 1;
          q.push(e.to);
        }
    }
    std::string cut;
    for (int f : net.nodes)
      if (reach[id[f]]) cut += " " + std::to_string(f);
    throw Error(Err::Infeasible, "no circulation respecting the lower bounds; cut faces:" + cut);
  }
  Flow flow(net.arcs.size());
  for (size_t i = 0; i < net.arcs.size(); ++i) {
    auto [u, k] = arc_edge[i];
    // lower bound plus whatever the reduction routed on top of it
    flow[i] = 1 + ((net.upper - 1) - din.adj[u][k].cap);
  }
  return flow;
}

void reduce_flow(const FlowNetwork& net, Flow& flow) {
  if (net.arcs.empty()) return;
  std::map<int, int> id;
  for (int f : net.nodes) id.emplace(f, (int)id.size());
  const int n = (int)id.size();
  struct R {
    int to, arc, dir, cost;  // dir +1 raises flow[arc], -1 lowers it
  };
  while (true) {
    std::vector<std::vector<R>> adj(n);
    for (size_t i = 0; i < net.arcs.size(); ++i) {
      const int u = id[net.arcs[i].from], v = id[net.arcs[i].to];
      if (flow[i] < net.upper) adj[u].push_back({v, (int)i, 1, 1});
      if (flow[i] > 1) adj[v].push_back({u, (int)i, -1, -1});
    }
    // Bellman-Ford negative-cycle detection (total flow is the cost)
    std::vector<long> dist(n, 0);
    std::vector<std::pair<int, R>> pred(n, {-1, {}});
    int touched = -1;
    for (int round = 0; round <= n; ++round) {
      int changed = -1;
      for (int u = 0; u < n; ++u)
        for (const R& r : adj[u])
          if (dist[u] + r.cost < dist[r.to]) {
            dist[r.to] = dist[u] + r.cost;
            pred[r.to] = {u, r};
            changed = r.to;
          }
      if (changed == -1) return;  // no negative cycle: minimal total flow
      touched = changed;
    }
    // walk back n steps to land on the cycle, then collect it
    int v = touched;
    for (int i = 0; i < n; ++i) v = pred[v].first;
    std::vector<R> cycle;
    int u = v;
    do {
      cycle.push_back(pred[u].second);
      u = pred[u].first;
    } while (u != v);
    int delta = net.upper;
    for (const R& r : cycle)
      delta = std::min(delta, r.dir > 0 ? net.upper - flow[r.arc] : flow[r.arc] - 1);
    if (delta <= 0) throw Error(Err::Internal, "degenerate canceling cycle");
    for (const R& r : cycle) flow[r.arc] += r.dir * delta;
  }
}

OrthoRadialDrawing flows_to_coordinates(const RectangularRep& rect, const Flow& flow_ver,
                                        const Flow& flow_hor) {
  const Rep& rep = rect.rep;
  const PlaneGraph& g = rep.g();
  auto [ver, hor] = build_networks(rect);
  if (flow_ver.size() != ver.arcs.size() || flow_hor.size() != hor.arcs.size())
    throw Error(Err::ParamsOutOfRange, "flow vectors do not match the networks");
  auto dirs = direction_map(rep);

  std::vector<int> amount(g.num_edges(), 0);  // length or ticks per edge
  for (size_t i = 0; i < ver.arcs.size(); ++i) amount[ver.arcs[i].edge] = flow_ver[i];
  int phi = 0;
  for (size_t i = 0; i < hor.arcs.size(); ++i) {
    if (hor.arcs[i].edge >= 0) amount[hor.arcs[i].edge] = flow_hor[i];
    if (hor.arcs[i].from == rep.inst.central_face) phi += flow_hor[i];
  }
  if (phi <= 0) throw Error(Err::Internal, "no flow leaves the central face");

  auto ring_ext = [&](int d) {
    switch (dirs[d]) {
      case DirDown: return amount[g.edge_of(d)];
      case DirUp: return -amount[g.edge_of(d)];
      default: return 0;
    }
  };
  auto tick_ext = [&](int d) {
    switch (dirs[d]) {
      case DirRight: return amount[g.edge_of(d)];
      case DirLeft: return -amount[g.edge_of(d)];
      default: return 0;
    }
  };

  OrthoRadialDrawing out;
  out.names = g.vertex_name;
  out.phi = phi;
  out.ring.assign(g.num_vertices(), 0);
  out.tick.assign(g.num_vertices(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  const int v0 = g.origin(rep.reference_dart);
  seen[v0] = 1;
  std::queue<int> q;
  q.push(v0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int d : g.out_darts(u)) {
      const int v = g.target(d);
      const int r = out.ring[u] + ring_ext(d);
      const int t = out.tick[u] + tick_ext(d);
      if (!seen[v]) {
        seen[v] = 1;
        out.ring[v] = r;
        out.tick[v] = t;
        q.push(v);
      } else if (out.ring[v] != r || ((out.tick[v] - t) % phi + phi) % phi != 0) {
        throw Error(Err::Internal, "flow integration is inconsistent (conservation violated)");
      }
    }
  }
  int minring = out.ring[v0];
  for (int v = 0; v < g.num_vertices(); ++v) minring = std::min(minring, out.ring[v]);
  if (minring != 0)
    throw Error(Err::Internal, "outermost ring is not the reference ring");
  for (int v = 0; v < g.num_vertices(); ++v) out.tick[v] = ((out.tick[v] % phi) + phi) % phi;

  out.edges.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const int d = 2 * e;
    const bool radial = dirs[d] == DirUp || dirs[d] == DirDown;
    out.edges[e] = {radial, radial ? ring_ext(d) : tick_ext(d)};
  }
  return out;
}

OrthoRadialDrawing draw_rectangular(const RectangularRep& rect, bool compact) {
  auto [ver, hor] = build_networks(rect);
  Flow fv = feasible_flow(ver), fh = feasible_flow(hor);
  if (compact) {
    reduce_flow(ver, fv);
    reduce_flow(hor, fh);
  }
  return flows_to_coordinates(rect, fv, fh);
}

OrthoRadialDrawing project_back(const OrthoRadialDrawing& drawing, const RectangularRep& rect,
                                const Rep& original) {
  const PlaneGraph& g = rect.rep.g();
  const PlaneGraph& g0 = original.g();
  const int n0 = g0.num_vertices(), m0 = g0.num_edges();
  if (n0 > g.num_vertices() || m0 > g.num_edges())
    throw Error(Err::ParamsOutOfRange, "rectangulation is smaller than the original");

  OrthoRadialDrawing out;
  out.phi = drawing.phi;
  out.names.assign(g0.vertex_name.begin(), g0.vertex_name.end());
  out.ring.assign(drawing.ring.begin(), drawing.ring.begin() + n0);
  out.tick.assign(drawing.tick.begin(), drawing.tick.begin() + n0);
  out.edges.resize(m0);
  for (int e = 0; e < m0; ++e) {
    // original darts keep their ids; follow the subdivision chain, which is
    // collinear, until the far original endpoint
    int cur = 2 * e;
    if (g.origin(cur) != g0.origin(cur))
      throw Error(Err::Internal, "edge ids of the original were not preserved");
    const bool radial = drawing.edges[g.edge_of(cur)].radial;
    int total = 0;
    for (int guard = 0; guard <= g.num_edges(); ++guard) {
      const auto& geom = drawing.edges[g.edge_of(cur)];
      if (geom.radial != radial)
        throw Error(Err::Internal, "subdivision chain changes direction");
      total += cur % 2 == 0 ? geom.extent : -geom.extent;
      const int v = g.target(cur);
      if (g.vertex_tag[v] == Tag::Original) {
        if (v != g0.target(2 * e))
          throw Error(Err::Internal, "subdivision chain ends at the wrong vertex");
        break;
      }
      int next = -1;
      for (int o : g.out_darts(v))
        if (o != PlaneGraph::twin(cur) && rect.rep.rot_between(cur, o) == 0) next = o;
      if (next == -1) throw Error(Err::Internal, "subdivision chain is not straight");
      cur = next;
    }
    out.edges[e] = {radial, total};
  }
  return out;
}

std::vector<std::int8_t> extract_corners(const OrthoRadialDrawing& drawing, const Rep& rep) {
  const PlaneGraph& g = rep.g();
  if ((int)drawing.edges.size() != g.num_edges())
    throw Error(Err::ParamsOutOfRange, "drawing does not match the graph");
  auto dir_of = [&](int d) {
    const auto& geom = drawing.edges[g.edge_of(d)];
    int base = geom.radial ? (geom.extent > 0 ? DirDown : DirUp)
                           : (geom.extent > 0 ? DirRight : DirLeft);
    return d % 2 == 0 ? base : (base + 2) % 4;
  };
  std::vector<std::int8_t> corners(g.num_darts(), 0);
  for (int d = 0; d < g.num_darts(); ++d) {
    // angle at target(d) between edge(d) and the ccw-next edge there; ccw
    // steps go E -> N -> W -> S, i.e. one step subtracts one direction code
    const int away = (dir_of(d) + 2) % 4;  // edge(d) pointing away from the vertex
    const int next = dir_of(g.dart_next[PlaneGraph::twin(d)]);
    int steps = ((away - next) % 4 + 4) % 4;
    if (steps == 0) steps = 4;
    corners[d] = (std::int8_t)(2 - steps);
  }
  return corners;
}

}  // namespace orth
