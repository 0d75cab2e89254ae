#include "orthoradial/validity.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <set>
#include <thread>

namespace orth {

std::optional<std::vector<int>> left_first_dfs(const Rep& rep, int start) {
  const PlaneGraph& g = rep.g();
  const int v0 = g.origin(start);  // search target
  const int w0 = g.target(start);
  if (v0 == w0) return std::nullopt;

  struct Frame {
    int ref;   // tree dart into the vertex
    int cand;  // next candidate dart (clockwise sweep), twin(ref) terminates
    int lab;   // search label of ref
  };
  // scratch reused across starts (epoch stamps instead of clearing); the
  // all-starts searches make this the hottest allocation site otherwise
  thread_local std::vector<int> visited;
  thread_local int epoch = 0;
  thread_local std::vector<Frame> stk;
  thread_local std::vector<int> tree;  // darts of the current tree path
  if ((int)visited.size() < g.num_vertices() || epoch == INT_MAX) {
    visited.assign(std::max((size_t)g.num_vertices(), visited.size()), 0);
    epoch = 0;
  }
  ++epoch;
  stk.clear();
  tree.clear();

  visited[w0] = epoch;
  stk.push_back({start, g.dart_prev[PlaneGraph::twin(start)], 0});
  while (!stk.empty()) {
    Frame& fr = stk.back();
    if (fr.cand == PlaneGraph::twin(fr.ref)) {
      // clockwise sweep exhausted; backtrack
      stk.pop_back();
      if (!tree.empty()) tree.pop_back();
      continue;
    }
    const int o = fr.cand;
    fr.cand = g.dart_prev[fr.cand];
    const int t = g.target(o);
    if (t != v0 && visited[t] == epoch) continue;
    const int lab = fr.lab + rep.rot_between(fr.ref, o);
    if (lab < 0) continue;  // ignore edges with negative search labels
    if (t == v0) {
      std::vector<int> cyc;
      cyc.push_back(start);
      cyc.insert(cyc.end(), tree.begin(), tree.end());
      cyc.push_back(o);
      return cyc;
    }
    visited[t] = epoch;
    tree.push_back(o);
    stk.push_back({o, g.dart_prev[PlaneGraph::twin(o)], lab});
  }
  return std::nullopt;
}

static std::optional<MonotoneCycleWitness> verify_candidate(const Rep& rep,
                                                            const std::vector<int>& cyc) {
  if (!essential_in_direction(rep, cyc)) return std::nullopt;
  CycleLabeling lab = labels(rep, cyc);
  if (lab.cls != CycleClass::Decreasing) return std::nullopt;
  return MonotoneCycleWitness{std::move(lab)};
}

static std::optional<MonotoneCycleWitness> search_range(const Rep& rep, int lo, int hi,
                                                        std::atomic<bool>* stop) {
  // many starts rediscover the same candidate; remember rejected dart sets
  // (darts, not edges: the verdict depends on the cycle's direction)
  std::set<std::vector<int>> rejected;
  std::vector<int> key;
  for (int d = lo; d < hi; ++d) {
    if (stop && stop->load(std::memory_order_relaxed)) return std::nullopt;
    auto cyc = left_first_dfs(rep, d);
    if (!cyc) continue;
    key = *cyc;
    std::sort(key.begin(), key.end());
    if (rejected.count(key)) continue;
    auto w = verify_candidate(rep, *cyc);
    if (w) return w;
    rejected.insert(key);
  }
  return std::nullopt;
}

std::optional<MonotoneCycleWitness> find_decreasing_cycle(const Rep& rep, int jobs,
                                                          bool deterministic) {
  const int nd = rep.g().num_darts();
  if (jobs <= 1 || nd < 64) return search_range(rep, 0, nd, nullptr);
  // parallel starts; deterministic mode still returns the first hit in start
  // order by keeping per-chunk results
  const int chunks = jobs;
  std::vector<std::optional<MonotoneCycleWitness>> results(chunks);
  std::atomic<bool> stop{false};
  std::vector<std::thread> threads;
  for (int c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      int lo = (int)((long)nd * c / chunks), hi = (int)((long)nd * (c + 1) / chunks);
      results[c] = search_range(rep, lo, hi, deterministic ? nullptr : &stop);
      if (results[c] && !deterministic) stop.store(true, std::memory_order_relaxed);
    });
  }
  for (auto& t : threads) t.join();
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

std::optional<MonotoneCycleWitness> find_increasing_cycle(const Rep& rep, int jobs,
                                                          bool deterministic) {
  Rep m = mirror(rep);
  auto w = find_decreasing_cycle(m, jobs, deterministic);
  if (!w) return std::nullopt;
  // map back: reverse the cycle, negate the labels
  MonotoneCycleWitness out;
  auto& c = w->labeling.cycle;
  auto& l = w->labeling.labels;
  for (int i = (int)c.size() - 1; i >= 0; --i) {
    out.labeling.cycle.push_back(PlaneGraph::twin(c[i]));
    out.labeling.labels.push_back(-l[i]);
  }
  out.labeling.cls = CycleClass::Increasing;
  return out;
}

ValidityResult is_valid(const Rep& rep, int jobs, bool deterministic) {
  require_locally_consistent(rep);
  ValidityResult r;
  r.witness = find_decreasing_cycle(rep, jobs, deterministic);
  if (!r.witness) r.witness = find_increasing_cycle(rep, jobs, deterministic);
  r.valid = !r.witness.has_value();
  return r;
}

std::vector<std::vector<int>> enumerate_simple_cycles(const Rep& rep, int limit) {
  const PlaneGraph& g = rep.g();
  if (g.num_vertices() > limit)
    throw Error(Err::TooLarge, "oracle limited to " + std::to_string(limit) + " vertices");
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;  // sorted edge id sets
  std::vector<int> path;
  std::vector<char> onpath(g.num_vertices(), 0);

  auto canonical = [&](std::vector<int> cyc) {
    // direct with interior (side without the outer face) to the right
    auto right = g.right_side_faces(cyc);
    if (std::find(right.begin(), right.end(), rep.inst.outer_face) != right.end()) {
      std::reverse(cyc.begin(), cyc.end());
      for (int& d : cyc) d = PlaneGraph::twin(d);
    }
    return cyc;
  };

  // enumerate cycles whose minimum vertex is s
  std::function<void(int, int)> dfs = [&](int s, int u) {
    for (int d : g.out_darts(u)) {
      int v = g.target(d);
      if (v == s) {
        if (path.empty() || g.edge_of(d) == g.edge_of(path.back())) continue;
        path.push_back(d);
        std::vector<int> key;
        for (int x : path) key.push_back(g.edge_of(x));
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(canonical(path));
        path.pop_back();
        continue;
      }
      if (v < s || onpath[v]) continue;
      path.push_back(d);
      onpath[v] = 1;
      dfs(s, v);
      onpath[v] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    onpath[s] = 1;
    dfs(s, s);
    onpath[s] = 0;
  }
  return out;
}

std::vector<CycleLabeling> enumerate_essential_cycles(const Rep& rep, int limit) {
  std::vector<CycleLabeling> out;
  for (auto& cyc : enumerate_simple_cycles(rep, limit))
    if (essential_in_direction(rep, cyc)) out.push_back(labels(rep, cyc));
  return out;
}

std::vector<MonotoneCycleWitness> oracle_validity(const Rep& rep, int limit) {
  std::vector<MonotoneCycleWitness> out;
  for (auto& lab : enumerate_essential_cycles(rep, limit))
    if (lab.cls == CycleClass::Increasing || lab.cls == CycleClass::Decreasing)
      out.push_back(MonotoneCycleWitness{lab});
  return out;
}

}  // namespace orth
