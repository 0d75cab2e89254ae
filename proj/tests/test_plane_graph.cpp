#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "orthoradial/plane_graph.hpp"

using namespace orth;

// planar grid (not cylinder): rows x cols, ccw order E,N,W,S
static PlaneGraph planar_grid(int rows, int cols) {
  std::vector<std::string> names;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      names.push_back("g" + std::to_string(r) + "_" + std::to_string(c));
  auto id = [&](int r, int c) { return r * cols + c; };
  std::vector<std::vector<std::pair<int, int>>> adj(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) adj[id(r, c)].push_back({id(r, c + 1), 0});  // E
      if (r + 1 < rows) adj[id(r, c)].push_back({id(r + 1, c), 0});  // N
      if (c > 0) adj[id(r, c)].push_back({id(r, c - 1), 0});         // W
      if (r > 0) adj[id(r, c)].push_back({id(r - 1, c), 0});         // S
    }
  return PlaneGraph::build(names, adj);
}

TEST_CASE("plane_graph: build 4-cycle") {
  auto g = fx::graph({{"v1", {"v2", "v4"}},
                      {"v2", {"v3", "v1"}},
                      {"v3", {"v4", "v2"}},
                      {"v4", {"v1", "v3"}}});
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_darts() == 8);
  CHECK(g.num_faces() == 2);
  for (auto& w : g.face_walk) CHECK(w.size() == 4);
  // the two walks traverse the cycle in opposite directions
  int d = fx::dart(g, "v1", "v2");
  CHECK(g.dart_face[d] != g.dart_face[PlaneGraph::twin(d)]);
}

TEST_CASE("plane_graph: single edge has one face") {
  auto g = fx::graph({{"u", {"v"}}, {"v", {"u"}}});
  CHECK(g.num_faces() == 1);
  CHECK(g.face_walk[0].size() == 2);
}

TEST_CASE("plane_graph: path a-b-c gives one walk of length 4") {
  auto g = fx::graph({{"a", {"b"}}, {"b", {"a", "c"}}, {"c", {"b"}}});
  REQUIRE(g.num_faces() == 1);
  CHECK(g.face_walk[0].size() == 4);
  int visits_b = 0;
  for (int d : g.face_walk[0])
    if (g.origin(d) == fx::vertex(g, "b")) ++visits_b;
  CHECK(visits_b == 2);
}

TEST_CASE("plane_graph: K4 has four triangular faces") {
  // outer triangle v1 v2 v3 (ccw), v4 in the middle
  auto g = fx::graph({{"v1", {"v2", "v4", "v3"}},
                      {"v2", {"v3", "v4", "v1"}},
                      {"v3", {"v1", "v4", "v2"}},
                      {"v4", {"v1", "v2", "v3"}}});
  CHECK(g.num_faces() == 4);
  for (auto& w : g.face_walk) CHECK(w.size() == 3);
}

TEST_CASE("plane_graph: build errors") {
  CHECK_THROWS_AS(fx::graph({{"a", {"a"}}}), Error);
  // degree 5
  CHECK_THROWS_AS(fx::graph({{"c", {"n1", "n2", "n3", "n4", "n5"}},
                             {"n1", {"c"}},
                             {"n2", {"c"}},
                             {"n3", {"c"}},
                             {"n4", {"c"}},
                             {"n5", {"c"}}}),
                  Error);
  // unmatched adjacency entry
  CHECK_THROWS_AS(fx::graph({{"a", {"b"}}, {"b", {}}}), Error);
  // disconnected
  CHECK_THROWS_AS(fx::graph({{"a", {"b"}}, {"b", {"a"}}, {"c", {"d"}}, {"d", {"c"}}}), Error);
}

TEST_CASE("plane_graph: subdivide and smooth are inverse") {
  auto g = fx::graph({{"v1", {"v2", "v4"}},
                      {"v2", {"v3", "v1"}},
                      {"v3", {"v4", "v2"}},
                      {"v4", {"v1", "v3"}}});
  auto before_next = g.dart_next;
  auto before_origin = g.dart_origin;
  int e = g.edge_of(fx::dart(g, "v1", "v2"));
  int nfaces = g.num_faces();
  int z = g.subdivide(e, Tag::Subdivision);
  CHECK(g.num_darts() == 10);
  CHECK(g.num_faces() == nfaces);
  CHECK(g.degree(z) == 2);
  // twice -> path u - z1 - z2 - v
  int z2 = g.subdivide(e, Tag::Subdivision);
  CHECK(g.degree(z2) == 2);
  CHECK(g.num_vertices() == 6);
  g.smooth(z2);
  g.smooth(z);
  CHECK(g.dart_next == before_next);
  CHECK(g.dart_origin == before_origin);
}

TEST_CASE("plane_graph: insert chord splits interior face into triangles") {
  auto g = fx::graph({{"v1", {"v2", "v4"}},
                      {"v2", {"v3", "v1"}},
                      {"v3", {"v4", "v2"}},
                      {"v4", {"v1", "v3"}}});
  auto before_next = g.dart_next;
  // interior (clockwise) face: right of v1->v4
  int f = g.dart_face[fx::dart(g, "v1", "v4")];
  REQUIRE(g.face_walk[f].size() == 4);
  int pa = -1, pb = -1;
  for (int i = 0; i < 4; ++i) {
    int t = g.target(g.face_walk[f][i]);
    if (t == fx::vertex(g, "v4")) pa = i;
    if (t == fx::vertex(g, "v2")) pb = i;
  }
  int e = g.insert_edge_in_face(f, pa, pb, Tag::Augmentation);
  CHECK(g.num_faces() == 3);
  std::vector<size_t> lens;
  for (auto& w : g.face_walk) lens.push_back(w.size());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<size_t>{3, 3, 4});
  g.delete_edge(e);
  CHECK(g.dart_next == before_next);
  CHECK(g.num_faces() == 2);
}

TEST_CASE("plane_graph: chord between adjacent corners makes a 2-gon (parallel edge)") {
  auto g = fx::graph({{"v1", {"v2", "v4"}},
                      {"v2", {"v3", "v1"}},
                      {"v3", {"v4", "v2"}},
                      {"v4", {"v1", "v3"}}});
  int f = g.dart_face[fx::dart(g, "v1", "v4")];
  int pa = -1;
  for (int i = 0; i < 4; ++i)
    if (g.target(g.face_walk[f][i]) == fx::vertex(g, "v4")) pa = i;
  int pb = (pa + 1) % 4;
  g.insert_edge_in_face(f, pa, pb, Tag::Augmentation);
  std::vector<size_t> lens;
  for (auto& w : g.face_walk) lens.push_back(w.size());
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<size_t>{2, 4, 4});
}

TEST_CASE("plane_graph: interior_faces of the 3x3 grid boundary") {
  auto g = planar_grid(3, 3);
  // clockwise boundary (interior to the right): up the left side, across the
  // top, down the right side, back along the bottom
  std::vector<std::string> seq = {"g0_0", "g1_0", "g2_0", "g2_1", "g2_2",
                                  "g1_2", "g0_2", "g0_1", "g0_0"};
  std::vector<int> cyc;
  for (size_t i = 0; i + 1 < seq.size(); ++i) cyc.push_back(fx::dart(g, seq[i], seq[i + 1]));
  int outer = g.dart_face[fx::dart(g, "g0_0", "g0_1")];  // face below the bottom row
  auto in = g.interior_faces(cyc, outer);
  CHECK(in.size() == 4);
  CHECK(std::find(in.begin(), in.end(), outer) == in.end());
  // reversed orientation is rejected
  std::vector<int> rev;
  for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) rev.push_back(PlaneGraph::twin(*it));
  CHECK_THROWS_AS(g.interior_faces(rev, outer), Error);
}

TEST_CASE("plane_graph: interior of a facial walk is exactly that face") {
  auto g = planar_grid(2, 2);
  int outer = g.dart_face[PlaneGraph::twin(fx::dart(g, "g1_0", "g1_1"))];
  for (int f = 0; f < g.num_faces(); ++f) {
    if (f == outer) continue;
    auto in = g.interior_faces(g.face_walk[f], outer);
    CHECK(in == std::vector<int>{f});
  }
}

TEST_CASE("plane_graph: euler and degree sums on generated grids") {
  for (auto [r, s] : {std::pair{1, 5}, {2, 4}, {3, 6}}) {
    auto rep = make_cylinder_grid(r, s);
    const auto& g = rep.g();
    CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
    int degsum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.num_edges());
  }
}
