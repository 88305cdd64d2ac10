// Command-line front end: analyze surface specs, list curves, emit graphs,
// decompose classes, check boundaries, blow up, dump the catalog.
// Exit codes: 0 success, 1 input error, 2 verification failure.
#include "delpezzo/json_io.hpp"
#include "delpezzo/selftest.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace delpezzo;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SurfaceSpec load_spec(const std::string& path) {
  SurfaceSpec s = spec_from_json_text(read_file(path));
  if (s.model == Model::BlowupOfP2) validate_spec(s);
  return s;
}

Vec parse_class(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw SpecError("malformed class entry: \"" + tok + "\"");
    }
  }
  if (v.empty()) throw SpecError("empty class");
  return v;
}

int cmd_analyze(const std::string& file, bool json, const std::string& batch) {
  std::vector<std::string> files;
  if (!batch.empty()) {
    for (auto& e : std::filesystem::directory_iterator(batch))
      if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw SpecError("batch directory has no .json files");
  } else {
    files.push_back(file);
  }
  for (auto& f : files) {
    SurfaceSpec spec = load_spec(f);
    ComplexityReport rep = analyze(spec);
    if (!batch.empty()) std::cout << f << ":\n";
    if (json)
      std::cout << report_to_json(spec, rep).dump(2) << "\n";
    else
      std::cout << report_to_text(spec, rep);
  }
  return 0;
}

int cmd_curves(const std::string& file) {
  SurfaceSpec spec = load_spec(file);
  if (spec.model != Model::BlowupOfP2)
    throw SpecError("curves: only the blow-up model has a curve list");
  PicardLattice lat = spec.lattice();
  auto ncs = make_negative_curve_set(lat, spec.simple_roots);
  for (auto* c : ncs.all())
    std::cout << c->id << " " << (c->kind == CurveKind::MinusOne ? "(-1)" : "(-2)")
              << " " << class_to_string(c->cls) << "\n";
  return 0;
}

int cmd_graph(const std::string& file, bool dot) {
  SurfaceSpec spec = load_spec(file);
  DualGraph g = build_dual_graph(spec);
  if (dot) {
    std::cout << to_dot(g);
    return 0;
  }
  std::cout << (is_tree(g) ? "tree" : "contains a cycle") << ", " << g.size()
            << " curves\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.mult[i][j] > 0)
        std::cout << i << " -- " << j << " x" << g.mult[i][j] << "\n";
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& cls) {
  SurfaceSpec spec = load_spec(file);
  Vec L = parse_class(cls);
  PicardLattice lat = spec.lattice();
  lat.check(L);
  DualGraph g = build_dual_graph(spec);
  auto ncs = g.curves;
  bool fiber = lat.self_intersection(L) == 0 && lat.anticanonical_degree(L) == 2;
  auto decs = decompositions_of(spec, L);
  for (auto& d : decs) {
    std::string line;
    for (auto& [id, c] : d.terms) {
      if (!line.empty()) line += " + ";
      if (c != 1) line += std::to_string(c) + "*";
      line += "(" + class_to_string(ncs.by_id(id).cls) + ")";
    }
    if (fiber) {
      switch (classify_fiber_decomposition(spec, g, d)) {
        case FiberType::Type1: line += "   [type 1]"; break;
        case FiberType::Type2: line += "   [type 2]"; break;
        case FiberType::Type3: line += "   [type 3]"; break;
        case FiberType::NonConforming: line += "   [nonconforming]"; break;
      }
    }
    std::cout << line << "\n";
  }
  if (decs.empty()) std::cout << "no decompositions over D(Y)\n";
  return 0;
}

int cmd_lc_check(const std::string& file, const std::string& bfile) {
  SurfaceSpec spec = load_spec(file);
  BoundaryDivisor D = boundary_from_json_text(read_file(bfile));
  LcResult r = lc_check(spec, D);
  if (r.lc) {
    std::cout << "LC\n";
    return 0;
  }
  std::cout << "NotLC: " << r.witness << "\n";
  return 2;
}

int cmd_lct(const std::string& file, const std::string& bfile) {
  SurfaceSpec spec = load_spec(file);
  BoundaryDivisor D = boundary_from_json_text(read_file(bfile));
  std::cout << to_string(lct_pair(spec, D)) << "\n";
  return 0;
}

int cmd_blowup(const std::string& file, const std::string& on) {
  SurfaceSpec spec = load_spec(file);
  PointSpec p;
  if (!on.empty())
    for (auto x : parse_class(on)) p.on_curves.push_back((int)x);
  SurfaceSpec z = blow_up(spec, p);
  std::cout << spec_to_json(z).dump(2) << "\n";
  return 0;
}

int cmd_catalog(int degree) {
  Json out = Json::array();
  for (auto& e : catalog_entries()) {
    if (degree > 0 && e.degree != degree) continue;
    Json j;
    j["name"] = e.name;
    j["degree"] = e.degree;
    j["gamma"] = to_string(e.gamma);
    j["sigma"] = to_string(e.sigma());
    std::string kinds;
    for (auto k : e.kinds) kinds += k == CurveKind::MinusOne ? 'o' : 'x';
    j["nodes"] = kinds;
    j["edges"] = Json::array();
    for (auto& [a, b] : e.edges) j["edges"].push_back({a, b});
    j["dk"] = Json::array();
    for (auto& c : e.dk) j["dk"].push_back(to_string(c));
    j["roots"] = Json::array();
    for (auto& r : e.roots) j["roots"].push_back(r);
    out.push_back(j);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_selftest() {
  bool all = true;
  for (auto& r : run_acceptance_suite()) {
    std::cout << "criterion " << r.number << " (" << r.name << "): "
              << (r.pass ? "PASS" : "FAIL");
    if (!r.detail.empty()) std::cout << " - " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complexity and sigma-invariant of du Val del Pezzo surfaces"};
  app.require_subcommand(1);

  std::string file, batch, cls, bfile, on;
  bool json = false, dot = false;
  int degree = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "compute sigma/gamma with a certificate");
  analyze_cmd->add_option("file", file, "surface spec JSON");
  analyze_cmd->add_flag("--json", json, "machine-readable report");
  analyze_cmd->add_option("--batch", batch, "analyze every .json file in a directory");

  auto* curves_cmd = app.add_subcommand("curves", "list the negative curves D(Y)");
  curves_cmd->add_option("file", file)->required();

  auto* graph_cmd = app.add_subcommand("graph", "dual graph of D(Y)");
  graph_cmd->add_option("file", file)->required();
  graph_cmd->add_flag("--dot", dot, "emit Graphviz DOT");

  auto* dec_cmd = app.add_subcommand("decompose", "effective decompositions of a class");
  dec_cmd->add_option("file", file)->required();
  dec_cmd->add_option("--class", cls, "comma-separated class, e.g. \"1,-1,0\"")->required();

  auto* lc_cmd = app.add_subcommand("lc-check", "log-canonicity of a boundary");
  lc_cmd->add_option("file", file)->required();
  lc_cmd->add_option("boundary", bfile)->required();

  auto* lct_cmd = app.add_subcommand("lct", "log-canonical threshold of a support");
  lct_cmd->add_option("file", file)->required();
  lct_cmd->add_option("boundary", bfile)->required();

  auto* blow_cmd = app.add_subcommand("blowup", "blow up a point and print the new spec");
  blow_cmd->add_option("file", file)->required();
  blow_cmd->add_option("--on", on, "comma-separated (-1)-curve ids through the point");

  auto* cat_cmd = app.add_subcommand("catalog", "dump the tree-surface catalog");
  cat_cmd->add_option("--degree", degree, "restrict to one degree");

  app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (file.empty() && batch.empty())
        throw SpecError("analyze: need a spec file or --batch DIR");
      return cmd_analyze(file, json, batch);
    }
    if (curves_cmd->parsed()) return cmd_curves(file);
    if (graph_cmd->parsed()) return cmd_graph(file, dot);
    if (dec_cmd->parsed()) return cmd_decompose(file, cls);
    if (lc_cmd->parsed()) return cmd_lc_check(file, bfile);
    if (lct_cmd->parsed()) return cmd_lct(file, bfile);
    if (blow_cmd->parsed()) return cmd_blowup(file, on);
    if (cat_cmd->parsed()) return cmd_catalog(degree);
    return cmd_selftest();
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
