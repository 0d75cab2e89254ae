#pragma once

// Shared hand-built fixtures for the test suites.

#include <map>
#include <string>
#include <vector>

#include "orthoradial/generate.hpp"
#include "orthoradial/representation.hpp"

namespace fx {

using orth::PlaneGraph;
using orth::Rep;

// Helper to build graphs from readable adjacency descriptions.
// Entries "b" mean slot 0; "b/1" means slot 1 (parallel edges).
inline PlaneGraph graph(const std::vector<std::pair<std::string, std::vector<std::string>>>& desc) {
  std::vector<std::string> names;
  std::map<std::string, int> id;
  for (auto& [v, _] : desc) {
    id[v] = (int)names.size();
    names.push_back(v);
  }
  std::vector<std::vector<std::pair<int, int>>> adj(names.size());
  for (auto& [v, nbrs] : desc) {
    for (auto& s : nbrs) {
      auto slash = s.find('/');
      std::string nb = s.substr(0, slash == std::string::npos ? s.size() : slash);
      int slot = slash == std::string::npos ? 0 : std::stoi(s.substr(slash + 1));
      adj[id.at(v)].push_back({id.at(nb), slot});
    }
  }
  return PlaneGraph::build(names, adj);
}

inline int vertex(const PlaneGraph& g, const std::string& name) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.vertex_name[v] == name) return v;
  throw std::runtime_error("no vertex " + name);
}

inline int dart(const PlaneGraph& g, const std::string& from, const std::string& to, int slot = 0) {
  int u = vertex(g, from), v = vertex(g, to);
  int found = 0;
  for (int d : g.out_darts(u))
    if (g.target(d) == v) {
      if (found == slot) return d;
      ++found;
    }
  throw std::runtime_error("no dart " + from + "->" + to);
}

// dart of the (i,j)->(i,j+1) ring edge in a generator grid
inline int grid_east(const Rep& rep, int spokes, int i, int j) {
  int u = i * spokes + j, v = i * spokes + (j + 1) % spokes;
  for (int d : rep.g().out_darts(u))
    if (rep.g().target(d) == v) return d;
  throw std::runtime_error("no east dart");
}

}  // namespace fx
