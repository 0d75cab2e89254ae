#include "orthoradial/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "orthoradial/generate.hpp"

namespace orth {

namespace {

// "name" or "name.slot"
std::pair<std::string, int> split_slot(const std::string& tok) {
  auto dot = tok.rfind('.');
  if (dot == std::string::npos || dot + 1 == tok.size()) return {tok, 0};
  const std::string tail = tok.substr(dot + 1);
  if (!std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return {tok, 0};
  return {tok.substr(0, dot), std::stoi(tail)};
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Original: return "original";
    case Tag::Subdivision: return "subdivision";
    case Tag::Augmentation: return "augmentation";
    case Tag::Preprocessing: return "preprocessing";
  }
  return "?";
}

// Slot of a dart for serialization: the rank of its edge among the parallel
// edges between the same endpoints (rank by edge id, so twins agree).
int slot_of(const PlaneGraph& g, int d) {
  const int u = g.origin(d), v = g.target(d);
  std::vector<int> es;
  for (int o : g.out_darts(u))
    if (g.target(o) == v) es.push_back(g.edge_of(o));
  if (es.size() <= 1) return 0;
  std::sort(es.begin(), es.end());
  return (int)(std::find(es.begin(), es.end(), g.edge_of(d)) - es.begin());
}

bool multi_edge(const PlaneGraph& g, int d) {
  int count = 0;
  for (int o : g.out_darts(g.origin(d)))
    if (g.target(o) == g.target(d)) ++count;
  return count > 1;
}

std::string dart_ref(const PlaneGraph& g, int d) {
  std::string s = g.name(g.origin(d)) + " " + g.name(g.target(d));
  if (multi_edge(g, d)) s += "." + std::to_string(slot_of(g, d));
  return s;
}

std::string end_ref(const PlaneGraph& g, int d) {  // "v" or "v.slot" (target side)
  std::string s = g.name(g.target(d));
  if (multi_edge(g, d)) s += "." + std::to_string(slot_of(g, d));
  return s;
}

}  // namespace

std::string serialize_instance(const Rep& rep) {
  const PlaneGraph& g = rep.g();
  std::ostringstream out;
  out << "vertices";
  for (int v = 0; v < g.num_vertices(); ++v) out << " " << g.name(v);
  out << "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "adj " << g.name(v) << ":";
    for (int d : g.out_darts(v)) out << " " << end_ref(g, d);
    out << "\n";
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "rotations " << g.name(v) << ":";
    for (int d : g.out_darts(v)) out << " " << (int)rep.corner[PlaneGraph::twin(d)];
    out << "\n";
  }
  out << "outer_face " << dart_ref(g, g.face_walk[rep.inst.outer_face][0]) << "\n";
  out << "central_face " << dart_ref(g, g.face_walk[rep.inst.central_face][0]) << "\n";
  out << "reference_edge " << dart_ref(g, rep.reference_dart) << "\n";
  return out.str();
}

Rep parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::map<std::string, int> id;
  // per vertex: list of (neighbor name, slot); rotation values
  std::map<std::string, std::vector<std::pair<std::string, int>>> adj_raw;
  std::map<std::string, std::vector<int>> rot_raw;
  std::string outer_ref, outer_ref2, central_ref, central_ref2, ref_a, ref_b;

  auto want_colon_name = [](std::vector<std::string>& toks) {
    // "adj name:" may come as "name:" in one token
    if (toks.size() >= 2 && !toks[1].empty() && toks[1].back() == ':') {
      toks[1].pop_back();
      return true;
    }
    throw Error(Err::ParseError, "expected 'name:' after keyword");
  };

  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "vertices") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (id.count(toks[i])) throw Error(Err::ParseError, "duplicate vertex " + toks[i]);
        id[toks[i]] = (int)names.size();
        names.push_back(toks[i]);
      }
    } else if (key == "adj") {
      want_colon_name(toks);
      auto& lst = adj_raw[toks[1]];
      for (size_t i = 2; i < toks.size(); ++i) lst.push_back(split_slot(toks[i]));
    } else if (key == "rotations" || key == "angles") {
      want_colon_name(toks);
      auto& lst = rot_raw[toks[1]];
      for (size_t i = 2; i < toks.size(); ++i) {
        int v;
        try {
          v = std::stoi(toks[i]);
        } catch (...) {
          throw Error(Err::ParseError, "bad number '" + toks[i] + "'");
        }
        if (key == "angles") {
          if (v % 90 != 0 || v < 90 || v > 360)
            throw Error(Err::ParseError, "angle must be one of 90/180/270/360");
          v = 2 - v / 90;
        }
        lst.push_back(v);
      }
    } else if (key == "outer_face" || key == "central_face" || key == "reference_edge") {
      if (toks.size() != 3) throw Error(Err::ParseError, key + " needs two vertex names");
      if (key == "outer_face") {
        outer_ref = toks[1];
        outer_ref2 = toks[2];
      } else if (key == "central_face") {
        central_ref = toks[1];
        central_ref2 = toks[2];
      } else {
        ref_a = toks[1];
        ref_b = toks[2];
      }
    } else {
      throw Error(Err::ParseError, "unknown keyword '" + key + "'");
    }
  }
  if (names.empty()) throw Error(Err::ParseError, "no vertices");
  if (outer_ref.empty() || central_ref.empty() || ref_a.empty())
    throw Error(Err::ParseError, "outer_face, central_face and reference_edge are required");

  std::vector<std::vector<std::pair<int, int>>> adj(names.size());
  for (auto& [name, lst] : adj_raw) {
    auto it = id.find(name);
    if (it == id.end()) throw Error(Err::ParseError, "adjacency of unknown vertex " + name);
    for (auto& [nbr, slot] : lst) {
      auto jt = id.find(nbr);
      if (jt == id.end()) throw Error(Err::ParseError, "unknown neighbor " + nbr);
      adj[it->second].push_back({jt->second, slot});
    }
  }
  Rep rep;
  rep.inst.g = PlaneGraph::build(names, adj);
  const PlaneGraph& g = rep.g();

  rep.corner.assign(g.num_darts(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto it = rot_raw.find(names[v]);
    if (it == rot_raw.end())
      throw Error(Err::ParseError, "missing rotations for " + names[v]);
    auto out = g.out_darts(v);
    if (it->second.size() != out.size())
      throw Error(Err::ParseError, "rotation count does not match degree of " + names[v]);
    for (size_t i = 0; i < out.size(); ++i) {
      const int r = it->second[i];
      if (r < -2 || r > 1)
        throw Error(Err::ParseError, "rotation out of range at " + names[v]);
      rep.corner[PlaneGraph::twin(out[i])] = (std::int8_t)r;
    }
  }

  auto find_dart = [&](const std::string& ua, const std::string& vb) {
    auto [vn, slot] = split_slot(vb);
    auto ui = id.find(ua);
    auto vi = id.find(vn);
    if (ui == id.end() || vi == id.end())
      throw Error(Err::ParseError, "unknown vertex in dart " + ua + " -> " + vb);
    for (int d : g.out_darts(ui->second))
      if (g.target(d) == vi->second && slot_of(g, d) == slot) return d;
    throw Error(Err::ParseError, "no dart " + ua + " -> " + vb);
  };
  rep.inst.outer_face = g.dart_face[find_dart(outer_ref, outer_ref2)];
  rep.inst.central_face = g.dart_face[find_dart(central_ref, central_ref2)];
  rep.reference_dart = find_dart(ref_a, ref_b);

  require_locally_consistent(rep);
  validate_rep(rep);
  return rep;
}

std::string serialize_drawing(const OrthoRadialDrawing& d, const PlaneGraph& g, bool with_tags) {
  std::ostringstream out;
  out << "phi " << d.phi << "\n";
  for (int v = 0; v < (int)d.ring.size(); ++v)
    out << "vertex " << d.names[v] << ": ring " << d.ring[v] << " tick " << d.tick[v] << "\n";
  for (int e = 0; e < (int)d.edges.size(); ++e)
    out << "edge " << dart_ref(g, 2 * e) << ": " << (d.edges[e].radial ? "radial" : "arc")
        << " " << d.edges[e].extent << "\n";
  if (with_tags)
    for (int v = 0; v < (int)d.ring.size(); ++v)
      out << "tag " << d.names[v] << ": " << tag_name(g.vertex_tag[v]) << "\n";
  return out.str();
}

OrthoRadialDrawing parse_drawing(const std::string& text, const PlaneGraph& g) {
  OrthoRadialDrawing d;
  d.ring.assign(g.num_vertices(), 0);
  d.tick.assign(g.num_vertices(), 0);
  d.names = g.vertex_name;
  d.edges.resize(g.num_edges());
  std::map<std::string, int> id;
  for (int v = 0; v < g.num_vertices(); ++v) id[g.name(v)] = v;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "phi" && toks.size() == 2) {
      d.phi = std::stoi(toks[1]);
    } else if (toks[0] == "vertex" && toks.size() == 6) {
      toks[1].pop_back();  // strip ':'
      auto it = id.find(toks[1]);
      if (it == id.end()) throw Error(Err::ParseError, "unknown vertex " + toks[1]);
      d.ring[it->second] = std::stoi(toks[3]);
      d.tick[it->second] = std::stoi(toks[5]);
    } else if (toks[0] == "edge" && toks.size() == 5) {
      toks[2].pop_back();  // strip ':'
      auto [vn, slot] = split_slot(toks[2]);
      auto ui = id.find(toks[1]), vi = id.find(vn);
      if (ui == id.end() || vi == id.end())
        throw Error(Err::ParseError, "unknown edge endpoint in '" + line + "'");
      int dart = -1;
      for (int o : g.out_darts(ui->second))
        if (g.target(o) == vi->second) {
          int count = 0;
          for (int o2 : g.out_darts(ui->second))
            if (g.target(o2) == vi->second && g.edge_of(o2) < g.edge_of(o)) ++count;
          if (count == slot) dart = o;
        }
      if (dart == -1) throw Error(Err::ParseError, "unknown edge in '" + line + "'");
      const int extent = std::stoi(toks[4]);
      d.edges[g.edge_of(dart)] = {toks[3] == "radial",
                                  dart % 2 == 0 ? extent : -extent};
    } else if (toks[0] == "tag") {
      // provenance is informational; ignored on load
    } else {
      throw Error(Err::ParseError, "bad drawing line '" + line + "'");
    }
  }
  if (d.phi <= 0) throw Error(Err::ParseError, "drawing without a positive phi");
  return d;
}

std::string render_svg(const OrthoRadialDrawing& d, const PlaneGraph& g, bool polar) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  int maxring = 0;
  for (int r : d.ring) maxring = std::max(maxring, r);
  const double W = 800, H = 800, cx = W / 2, cy = H / 2;
  const double rout = 360, delta = rout / (maxring + 2);
  const double unit = 24;
  auto radius = [&](int ring) { return rout - ring * delta; };
  auto px = [&](int v) {
    if (polar) {
      const double th = 2 * M_PI * d.tick[v] / d.phi;  // ticks run clockwise
      return std::pair{cx + radius(d.ring[v]) * std::sin(th),
                       cy - radius(d.ring[v]) * std::cos(th)};
    }
    return std::pair{40 + unit * d.tick[v], 40 + unit * d.ring[v]};
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\">\n<g stroke=\"black\" fill=\"none\">\n";
  for (int e = 0; e < g.num_edges(); ++e) {
    const int u = g.origin(2 * e), v = g.target(2 * e);
    auto [x1, y1] = px(u);
    const auto& geom = d.edges[e];
    if (!polar) {
      // unrolled view: draw by extent so seam-crossing edges stay one segment
      const double x2 = 40 + unit * (d.tick[u] + (geom.radial ? 0 : geom.extent));
      const double y2 = 40 + unit * (d.ring[u] + (geom.radial ? geom.extent : 0));
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\"/>\n";
      continue;
    }
    auto [x2, y2] = px(v);
    if (geom.radial) {
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\"/>\n";
    } else {
      const double r = radius(d.ring[u]);
      const int large = std::abs(geom.extent) * 2 > d.phi ? 1 : 0;
      const int sweep = geom.extent > 0 ? 1 : 0;  // positive ticks go clockwise
      out << "<path d=\"M " << x1 << " " << y1 << " A " << r << " " << r << " 0 " << large
          << " " << sweep << " " << x2 << " " << y2 << "\"/>\n";
    }
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto [x, y] = px(v);
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Err::ParseError, "cannot write " + path);
  out << text;
}

void print_witness(std::ostream& out, const PlaneGraph& g, const CycleLabeling& w) {
  out << cycle_class_name(w.cls) << " essential cycle:\n";
  for (size_t i = 0; i < w.cycle.size(); ++i)
    out << g.name(g.origin(w.cycle[i])) << " -> " << g.name(g.target(w.cycle[i])) << " : "
        << w.labels[i] << "\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ortho-radial drawings of plane 4-graphs"};
  app.require_subcommand(1);

  std::string input, output, svg_mode, strategy = "binary", gen_mode = "perturbed";
  int jobs = 1, oracle_limit = 0, gen_n = 0;
  std::uint64_t gen_seed = 0;
  bool deterministic = true, compact = false, keep_aug = false;

  auto* validate = app.add_subcommand("validate", "test validity, print a witness if invalid");
  validate->add_option("input", input, "instance file")->required();
  validate->add_option("--jobs", jobs, "parallel search starts");
  validate->add_flag("--deterministic,!--no-deterministic", deterministic,
                     "first witness in start order (default on)");
  validate->add_option("--oracle-limit", oracle_limit,
                       "use the brute-force cycle enumeration oracle (size cap)");

  auto* draw = app.add_subcommand("draw", "compute an ortho-radial drawing");
  draw->add_option("input", input, "instance file")->required();
  draw->add_option("-o,--output", output, "drawing file (stdout if omitted)");
  draw->add_option("--svg", svg_mode, "render view: polar or cylinder")
      ->check(CLI::IsMember({"polar", "cylinder"}));
  draw->add_flag("--compact", compact, "shrink the drawing by cycle canceling");
  draw->add_flag("--keep-augmentation", keep_aug,
                 "emit the rectangulated drawing with provenance tags");
  draw->add_option("--strategy", strategy, "rectangulation search: naive, fast or binary")
      ->check(CLI::IsMember({"naive", "fast", "binary"}));
  draw->add_option("--jobs", jobs, "parallel search starts");
  draw->add_flag("--deterministic,!--no-deterministic", deterministic, "");

  auto* gen = app.add_subcommand("generate", "deterministic pseudo-random instance");
  gen->add_option("seed", gen_seed, "rng seed")->required();
  gen->add_option("n", gen_n, "target vertex count")->required();
  gen->add_option("mode", gen_mode, "grid, perturbed or spiral")
      ->check(CLI::IsMember({"grid", "perturbed", "spiral"}));
  gen->add_option("-o,--output", output, "instance file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) {
      const GenMode m = gen_mode == "grid"      ? GenMode::Grid
                        : gen_mode == "spiral" ? GenMode::Spiral
                                               : GenMode::Perturbed;
      const std::string text = serialize_instance(generate(gen_seed, gen_n, m));
      if (output.empty())
        out << text;
      else
        write_file(output, text);
      return 0;
    }

    const Rep rep = parse_instance(read_file(input));

    if (validate->parsed()) {
      if (oracle_limit > 0) {
        auto witnesses = oracle_validity(rep, oracle_limit);
        if (witnesses.empty()) {
          out << "valid\n";
          return 0;
        }
        out << "invalid\n";
        print_witness(out, rep.g(), witnesses.front().labeling);
        return 2;
      }
      auto res = is_valid(rep, jobs, deterministic);
      if (res.valid) {
        out << "valid\n";
        return 0;
      }
      out << "invalid\n";
      print_witness(out, rep.g(), res.witness->labeling);
      return 2;
    }

    // draw
    auto res = is_valid(rep, jobs, deterministic);
    if (!res.valid) {
      err << "invalid\n";
      print_witness(err, rep.g(), res.witness->labeling);
      return 2;
    }
    const RectStrategy st = strategy == "naive"  ? RectStrategy::Naive
                            : strategy == "fast" ? RectStrategy::Fast
                                                 : RectStrategy::BinarySearch;
    const RectangularRep rect = rectangulate(rep, st);
    OrthoRadialDrawing drawing = draw_rectangular(rect, compact);
    const PlaneGraph& gout = keep_aug ? rect.rep.g() : rep.g();
    if (!keep_aug) drawing = project_back(drawing, rect, rep);

    const std::string text = serialize_drawing(drawing, gout, keep_aug);
    if (output.empty())
      out << text;
    else
      write_file(output, text);
    if (!svg_mode.empty()) {
      const std::string svg = render_svg(drawing, gout, svg_mode == "polar");
      if (output.empty())
        out << svg;
      else
        write_file(output + ".svg", svg);
    }
    return 0;
  } catch (const Error& e) {
    err << "error (" << err_name(e.kind) << "): " << e.what() << "\n";
    return 1;
  }
}

}  // namespace orth
