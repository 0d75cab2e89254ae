#include "orthoradial/generate.hpp"

#include <cmath>
#include <random>

#include "orthoradial/labeling.hpp"

namespace orth {

// Direction codes at a grid vertex in ccw order: 0 = outward (north),
// 1 = counterclockwise ring (west), 2 = toward center (south), 3 = clockwise
// ring (east).  "East" is the direction the reference dart points.
Rep make_partial_grid(int rings, int spokes, const std::vector<char>& spoke_present) {
  if (rings < 1 || spokes < 3)
    throw Error(Err::ParamsOutOfRange, "need rings >= 1 and spokes >= 3");
  if ((int)spoke_present.size() != (rings - 1) * spokes)
    throw Error(Err::ParamsOutOfRange, "spoke mask has wrong size");
  for (int row = 0; row + 1 < rings; ++row) {
    bool any = false;
    for (int j = 0; j < spokes; ++j) any |= spoke_present[row * spokes + j];
    if (!any) throw Error(Err::ParamsOutOfRange, "spoke row with no edges (disconnected)");
  }

  auto vid = [&](int i, int j) { return i * spokes + ((j % spokes) + spokes) % spokes; };
  std::vector<std::string> names(rings * spokes);
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < spokes; ++j)
      names[vid(i, j)] = "v" + std::to_string(i) + "_" + std::to_string(j);

  // per-vertex ccw adjacency and the ccw direction code of each entry
  std::vector<std::vector<std::pair<int, int>>> adj(rings * spokes);
  std::vector<std::vector<int>> codes(rings * spokes);
  for (int i = 0; i < rings; ++i) {
    for (int j = 0; j < spokes; ++j) {
      int u = vid(i, j);
      bool north = i > 0 && spoke_present[(i - 1) * spokes + j];
      bool south = i + 1 < rings && spoke_present[i * spokes + j];
      if (north) {
        adj[u].push_back({vid(i - 1, j), 0});
        codes[u].push_back(0);
      }
      adj[u].push_back({vid(i, j - 1), 0});  // west
      codes[u].push_back(1);
      if (south) {
        adj[u].push_back({vid(i + 1, j), 0});
        codes[u].push_back(2);
      }
      adj[u].push_back({vid(i, j + 1), 0});  // east
      codes[u].push_back(3);
    }
  }

  Rep rep;
  rep.inst.g = PlaneGraph::build(names, adj);
  const PlaneGraph& g = rep.g();

  // corners from the ccw gaps between direction codes
  rep.corner.assign(g.num_darts(), 0);
  for (int u = 0; u < g.num_vertices(); ++u) {
    auto out = g.out_darts(u);
    // out[k] corresponds to adj[u][k] because build keeps list order
    const int k = (int)out.size();
    for (int a = 0; a < k; ++a) {
      int gap = (codes[u][(a + 1) % k] - codes[u][a] + 4) % 4;
      if (gap == 0) gap = 4;
      // corner between edge out[a] and edge out[(a+1)%k], stored at the
      // incoming dart of out[a]
      rep.corner[PlaneGraph::twin(out[a])] = (std::int8_t)(2 - gap);
    }
  }

  // reference dart: (0,0) -> (0,1), outer face on its left
  int ref = -1, central_dart = -1;
  for (int d : g.out_darts(vid(0, 0)))
    if (g.target(d) == vid(0, 1)) ref = d;
  for (int d : g.out_darts(vid(rings - 1, 0)))
    if (g.target(d) == vid(rings - 1, 1)) central_dart = d;
  rep.reference_dart = ref;
  rep.inst.outer_face = g.dart_face[PlaneGraph::twin(ref)];
  rep.inst.central_face = g.dart_face[central_dart];
  validate_rep(rep);
  require_locally_consistent(rep);
  return rep;
}

Rep make_cylinder_grid(int rings, int spokes) {
  std::vector<char> all((rings > 0 ? rings - 1 : 0) * spokes, 1);
  return make_partial_grid(rings, spokes, all);
}

bool tilt_edge(Rep& rep, int e, int sign) {
  const PlaneGraph& g = rep.g();
  if (e < 0 || e >= g.num_edges()) throw Error(Err::UnknownEdge, "no such edge");
  if (sign != 1 && sign != -1) throw Error(Err::ParamsOutOfRange, "sign must be +-1");
  const int d0 = 2 * e, d1 = 2 * e + 1;
  // corners flanking e: left face gets +s at u and -s at v, right face the
  // opposite, so vertex and face sums are untouched
  int c[4] = {d1, PlaneGraph::twin(g.dart_prev[d0]), d0, PlaneGraph::twin(g.dart_prev[d1])};
  int delta[4] = {sign, -sign, sign, -sign};
  int add[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) add[i] = delta[i];
  // coincident corners (degree-1 endpoints) cancel out; accumulate first
  std::int8_t nc[4];
  for (int i = 0; i < 4; ++i) {
    int total = 0;
    for (int k = 0; k < 4; ++k)
      if (c[k] == c[i]) total += add[k];
    nc[i] = (std::int8_t)(rep.corner[c[i]] + total);
    if (nc[i] < -2 || nc[i] > 1) return false;
  }
  for (int i = 0; i < 4; ++i) rep.corner[c[i]] = nc[i];
  return true;
}

static void choose_dims(int n, int& rings, int& spokes) {
  rings = std::max(2, (int)std::lround(std::sqrt((double)n / 2.0)));
  spokes = std::max(3, n / rings);
}

Rep generate(std::uint64_t seed, int n, GenMode mode) {
  if (n < 3) throw Error(Err::ParamsOutOfRange, "need n >= 3");
  std::mt19937_64 rng(seed);
  if (mode == GenMode::Grid) {
    int r, s;
    choose_dims(n, r, s);
    return make_cylinder_grid(r, s);
  }
  if (mode == GenMode::Spiral) {
    int s = std::max(5, n / 3);
    std::vector<char> mask(2 * s, 0);
    mask[0] = 1;      // spoke ring0-ring1 at column 0
    mask[s] = 1;      // spoke ring1-ring2 at column 0
    Rep rep = make_partial_grid(3, s, mask);
    // ring-1 vertices away from column 0 have degree 2; tilting a contiguous
    // run of ring edges the same way lifts their labels by one, so the ring
    // cycle becomes strictly monotone
    const PlaneGraph& g = rep.g();
    auto ring_edge = [&](int j) {  // edge (1,j)-(1,j+1)
      for (int d : g.out_darts(1 * s + j))
        if (g.target(d) == 1 * s + (j + 1) % s) return g.edge_of(d);
      throw Error(Err::Internal, "missing ring edge");
    };
    for (int j = 1; j + 1 < s; ++j)
      if (!tilt_edge(rep, ring_edge(j), -1))
        throw Error(Err::Internal, "spiral tilt rejected");
    require_locally_consistent(rep);
    return rep;
  }
  // Perturbed: partial grid + random tilts
  int r, s;
  choose_dims(n, r, s);
  std::vector<char> mask((r - 1) * s, 0);
  for (int row = 0; row + 1 < r; ++row) {
    for (int j = 0; j < s; ++j) mask[row * s + j] = rng() % 3 != 0;  // keep ~2/3
    int forced = (int)(rng() % s);
    mask[row * s + forced] = 1;
  }
  Rep rep = make_partial_grid(r, s, mask);
  const int attempts = 4 * rep.g().num_edges();
  for (int i = 0; i < attempts; ++i) {
    int e = (int)(rng() % rep.g().num_edges());
    int sign = rng() % 2 ? 1 : -1;
    tilt_edge(rep, e, sign);
  }
  require_locally_consistent(rep);
  return rep;
}

}  // namespace orth
