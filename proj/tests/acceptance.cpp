// Acceptance harness: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Criteria are property-based over generated corpora plus a
// scaling measurement; each check recomputes its facts independently of the
// code paths under test where an oracle exists.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orthoradial/compaction.hpp"
#include "orthoradial/generate.hpp"
#include "orthoradial/io.hpp"

using namespace orth;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

static int failures = 0;

static void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d (%s): %s (%s)\n", idx, name, ok ? "PASS" : "FAIL",
              detail.c_str());
  if (!ok) ++failures;
}

// a witness must independently re-verify: essential orientation and strictly
// monotone labels recomputed from scratch
static bool witness_ok(const Rep& rep, const MonotoneCycleWitness& w) {
  if (!essential_in_direction(rep, w.labeling.cycle)) return false;
  auto fresh = labels(rep, w.labeling.cycle);
  if (fresh.labels != w.labeling.labels) return false;
  return fresh.cls == CycleClass::Increasing || fresh.cls == CycleClass::Decreasing;
}

static void criterion1_oracle_equivalence() {
  auto t0 = Clock::now();
  int total = 0, invalid = 0, mismatches = 0, bad_witness = 0;
  for (unsigned seed = 0; total < 1000; ++seed) {
    auto rep = generate(seed, 12, GenMode::Perturbed);
    if (rep.g().num_vertices() > 14) continue;
    ++total;
    auto fast = is_valid(rep);
    auto slow = oracle_validity(rep, 14);
    if (fast.valid != slow.empty()) ++mismatches;
    if (!fast.valid) {
      ++invalid;
      if (!witness_ok(rep, *fast.witness)) ++bad_witness;
      for (auto& ow : slow)
        if (!witness_ok(rep, ow)) ++bad_witness;
    }
  }
  double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d instances, %d invalid, %d mismatches, %d bad witnesses, %.1fs",
                total, invalid, mismatches, bad_witness, dt);
  report(1, "oracle equivalence", mismatches == 0 && bad_witness == 0 && dt < 300.0, buf);
}

// shared corpus for the drawing-related criteria
struct CorpusEntry {
  Rep rep;
  bool valid;
};

static std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> corpus;
  for (unsigned seed = 0; seed < 150; ++seed) {
    auto rep = generate(seed, 12, GenMode::Perturbed);
    corpus.push_back({rep, is_valid(rep).valid});
  }
  for (auto [r, s] : {std::pair{1, 4}, {1, 8}, {2, 5}, {3, 6}, {4, 4}, {5, 9}})
    corpus.push_back({make_cylinder_grid(r, s), true});
  for (unsigned seed = 0; seed < 15; ++seed)
    corpus.push_back({generate(seed, 16, GenMode::Spiral), false});
  return corpus;
}

static void criterion2_characterization(const std::vector<CorpusEntry>& corpus) {
  int drawn = 0, rejected = 0, errors = 0;
  for (auto& entry : corpus) {
    try {
      if (entry.valid) {
        auto rect = rectangulate(entry.rep);
        auto drawing = project_back(draw_rectangular(rect), rect, entry.rep);
        if (extract_corners(drawing, entry.rep) != entry.rep.corner)
          ++errors;
        else
          ++drawn;
      } else {
        auto res = is_valid(entry.rep);
        if (res.valid || !witness_ok(entry.rep, *res.witness)) {
          ++errors;
          continue;
        }
        // the pipeline must refuse the instance with the same error kind
        try {
          rectangulate(entry.rep);
          ++errors;
        } catch (const Error& e) {
          if (e.kind == Err::NotValid)
            ++rejected;
          else
            ++errors;
        }
      }
    } catch (...) {
      ++errors;
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d drawn with exact angles, %d rejected with witness, %d exceptions",
                drawn, rejected, errors);
  report(2, "drawable if and only if valid", errors == 0, buf);
}

static void criterion3_rectangular_invariants(const std::vector<CorpusEntry>& corpus) {
  int checked = 0, violations = 0;
  for (auto& entry : corpus) {
    if (!entry.valid) continue;
    auto rect = rectangulate(entry.rep);
    const Rep& rep = rect.rep;
    const PlaneGraph& g = rep.g();
    ++checked;

    for (int f = 0; f < g.num_faces(); ++f) {
      if (f == rep.inst.outer_face || f == rep.inst.central_face) continue;
      int plus = 0;
      for (int d : g.face_walk[f]) {
        if (rep.corner[d] < 0) ++violations;
        if (rep.corner[d] == 1) ++plus;
      }
      if (plus != 4) ++violations;
    }
    for (int l : labels(rep, outermost_cycle(rep)).labels)
      if (l != 0) ++violations;
    for (int l : labels(rep, central_cycle(rep)).labels)
      if (l != 0) ++violations;

    auto [nver, nhor] = build_networks(rect);
    for (auto* pair : {&nver, &nhor}) {
      Flow flow;
      try {
        flow = feasible_flow(*pair);
      } catch (const Error&) {
        ++violations;
        continue;
      }
      std::map<int, long> balance;
      for (size_t i = 0; i < pair->arcs.size(); ++i) {
        if (flow[i] < 1) ++violations;
        balance[pair->arcs[i].from] -= flow[i];
        balance[pair->arcs[i].to] += flow[i];
      }
      for (auto& [node, b] : balance)
        if (b != 0) ++violations;
    }

    auto drawing = draw_rectangular(rect);
    auto dirs = direction_map(rep);
    for (int f = 0; f < g.num_faces(); ++f) {
      if (f == rep.inst.outer_face || f == rep.inst.central_face) continue;
      int len[4] = {0, 0, 0, 0};
      for (int d : g.face_walk[f]) len[dirs[d]] += std::abs(drawing.edges[g.edge_of(d)].extent);
      if (len[DirRight] != len[DirLeft] || len[DirUp] != len[DirDown]) ++violations;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d rectangulations, %d violations", checked, violations);
  report(3, "rectangular invariants", checked > 0 && violations == 0, buf);
}

static void criterion4_label_algebra() {
  int cycles = 0, violations = 0;
  for (unsigned seed = 0; seed < 40; ++seed) {
    auto rep = generate(seed, 12, GenMode::Perturbed);
    if (rep.g().num_vertices() > 12) continue;
    auto all = enumerate_essential_cycles(rep, 12);
    auto m = mirror(rep);
    bool has_flip = true;
    Rep f;
    try {
      f = flip(rep);
    } catch (const Error&) {
      has_flip = false;
    }
    // labels of central-face darts must agree across all essential cycles
    std::map<int, std::set<int>> central_labels;
    for (auto& lab : all) {
      ++cycles;
      const auto& C = lab.cycle;
      // label difference along the cycle equals the subpath rotation
      for (size_t i = 0; i < C.size(); ++i) {
        size_t j = (i + 1) % C.size();
        if (lab.labels[j] - lab.labels[i] != rep.rot_between(C[i], C[j])) ++violations;
      }
      // mirror negates, flip preserves (on the reversed cycle)
      std::vector<int> R;
      for (auto it = C.rbegin(); it != C.rend(); ++it) R.push_back(PlaneGraph::twin(*it));
      auto labm = labels(m, R);
      for (size_t i = 0; i < R.size(); ++i)
        if (labm.labels[i] != -lab.labels[C.size() - 1 - i]) ++violations;
      if (has_flip) {
        auto labf = labels(f, R);
        for (size_t i = 0; i < R.size(); ++i)
          if (labf.labels[i] != lab.labels[C.size() - 1 - i]) ++violations;
      }
      for (size_t i = 0; i < C.size(); ++i)
        if (rep.g().dart_face[C[i]] == rep.inst.central_face)
          central_labels[C[i]].insert(lab.labels[i]);
    }
    for (auto& [d, ls] : central_labels)
      if (ls.size() != 1) ++violations;
    // horizontal cycles are disjoint from strictly monotone ones, and
    // increasing from decreasing
    for (auto& c1 : all) {
      if (c1.cls == CycleClass::NonMonotone) continue;
      std::set<int> verts;
      for (int d : c1.cycle) verts.insert(rep.g().origin(d));
      for (auto& c2 : all) {
        bool conflict =
            (c1.cls == CycleClass::Horizontal &&
             (c2.cls == CycleClass::Increasing || c2.cls == CycleClass::Decreasing)) ||
            (c1.cls == CycleClass::Increasing && c2.cls == CycleClass::Decreasing);
        if (!conflict) continue;
        for (int d : c2.cycle)
          if (verts.count(rep.g().origin(d))) ++violations;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d essential cycles, %d violations", cycles, violations);
  report(4, "label algebra", cycles > 0 && violations == 0, buf);
}

static void criterion5_rotation_constants() {
  int essential = 0, nonessential = 0, violations = 0;
  for (unsigned seed = 0; seed < 40; ++seed) {
    auto rep = generate(seed, 12, GenMode::Perturbed);
    for (auto& C : enumerate_simple_cycles(rep, 12)) {
      if (essential_in_direction(rep, C)) {
        ++essential;
        if (rep.rot_cycle(C) != 0) ++violations;
      } else {
        ++nonessential;
        if (rep.rot_cycle(C) != 4) ++violations;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d essential, %d non-essential, %d violations", essential,
                nonessential, violations);
  report(5, "cycle rotation constants", essential > 0 && nonessential > 0 && violations == 0,
         buf);
}

static void criterion6_fast_test(const std::vector<CorpusEntry>& corpus) {
  int augmentations = 0, disagreements = 0;
  auto hook = [&](const Rep& aug, int uz) {
    ++augmentations;
    if (fast_decreasing_test(aug, uz).has_value() != find_decreasing_cycle(aug).has_value())
      ++disagreements;
  };
  for (auto& entry : corpus) {
    if (!entry.valid) continue;
    rectangulate(entry.rep, RectStrategy::Fast, hook);
    rectangulate(entry.rep, RectStrategy::BinarySearch, hook);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d augmentations tested, %d disagreements", augmentations,
                disagreements);
  report(6, "fast decreasing-cycle test", augmentations > 0 && disagreements == 0, buf);
}

static void criterion7_scaling() {
  const int spokes = 40;
  std::vector<double> times;
  for (int rings : {25, 50, 100, 200}) {
    auto rep = make_cylinder_grid(rings, spokes);
    double best = 1e9;  // best of three runs, to dampen scheduler noise
    for (int run = 0; run < 3; ++run) {
      auto t0 = Clock::now();
      bool valid = is_valid(rep).valid;
      best = std::min(best, seconds_since(t0));
      if (!valid) {
        report(7, "validity scaling", false, "grid unexpectedly invalid");
        return;
      }
    }
    times.push_back(best);
  }
  // the growth rate per doubling is estimated over the whole series (the
  // geometric mean of the adjacent ratios); single pairs jitter by ~10%
  double worst = 0;
  for (size_t i = 1; i < times.size(); ++i)
    worst = std::max(worst, times[i] / std::max(times[i - 1], 1e-6));
  double doublings = (double)(times.size() - 1);
  double rate = std::pow(times.back() / std::max(times.front(), 1e-6), 1.0 / doublings);
  bool ok = times.back() < 60.0 && rate <= 5.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "n=1k..8k times %.2fs %.2fs %.2fs %.2fs, ratio per doubling %.2f (worst pair %.2f)",
                times[0], times[1], times[2], times[3], rate, worst);
  report(7, "validity scaling", ok, buf);
}

static void criterion8_size_bound(const std::vector<CorpusEntry>& corpus) {
  int checked = 0, violations = 0;
  double worst = 0, sum = 0;
  for (auto& entry : corpus) {
    if (!entry.valid) continue;
    auto rect = rectangulate(entry.rep);
    double ratio = (double)rect.rep.g().num_vertices() / entry.rep.g().num_vertices();
    worst = std::max(worst, ratio);
    sum += ratio;
    ++checked;
    if (ratio > 50.0) ++violations;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d rectangulations, mean ratio %.2f, worst %.2f, cap 50",
                checked, sum / std::max(checked, 1), worst);
  report(8, "rectangulation size bound", checked > 0 && violations == 0, buf);
}

int main() {
  auto corpus = make_corpus();
  criterion1_oracle_equivalence();
  criterion2_characterization(corpus);
  criterion3_rectangular_invariants(corpus);
  criterion4_label_algebra();
  criterion5_rotation_constants();
  criterion6_fast_test(corpus);
  criterion7_scaling();
  criterion8_size_bound(corpus);
  return failures == 0 ? 0 : 1;
}
