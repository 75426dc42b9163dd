// surfcurve: shortest curves of prescribed topological type on surfaces.
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible goal, 4 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "surfcurve/surfcurve.hpp"

using namespace surfcurve;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("IOError", "cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Input {
  std::string text;
  SurfaceMap map;
};

Input load(const std::string& path) {
  Input in;
  in.text = read_file(path);
  in.map = load_surface(in.text);
  return in;
}

Json report_header(const std::string& command, const Input& in) {
  Json j;
  j["command"] = command;
  j["input_hash"] = input_hash(in.text);
  return j;
}

void merge_into(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

// Canonical signature of a simple curve, when the surface has standard loops.
std::optional<Bits> canonical_signature(const SurfaceMap& m, const CurveDrawing& d) {
  if (m.orientable()) return std::nullopt;
  if (d.trivial) return Bits{0};
  LoopSystem ls = standard_loops(dual(m).map);
  return signature_change_matrix(ls.genus).apply(curve_signature(ls.parity, d));
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest simple closed curves of prescribed type on weighted surfaces"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "add wall-clock time to reports (breaks byte-identical output)");

  std::string file, out, report, goal_text = "orienting", kind = "standard", curve_file, rho_file, loops_file,
                                  eps_text = "auto", max_weight;
  int cap = 2;
  bool schema = false;

  auto* check = app.add_subcommand("check", "validate a surface and print its invariants");
  check->add_option("file", file, "SRF file")->required();

  auto* shortest = app.add_subcommand("shortest", "shortest simple curve of a given kind");
  shortest->add_option("file", file, "SRF file")->required();
  shortest->add_option("--goal", goal_text, "orienting | nonor1 | nonor2 | onesided")->required();
  shortest->add_option("-o,--output", out, "curve JSON (default: stdout)");
  shortest->add_option("--report", report, "report JSON");

  auto* orient = app.add_subcommand("orient-curve", "an orienting curve in linear time (not necessarily shortest)");
  orient->add_option("file", file, "SRF file")->required();
  orient->add_option("-o,--output", out, "curve JSON (default: stdout)");
  orient->add_option("--report", report, "report JSON");

  auto* loops = app.add_subcommand("loops", "standard loop system or hitting paths");
  loops->add_option("file", file, "SRF file")->required();
  loops->add_option("--kind", kind, "standard | hitting")->check(CLI::IsMember({"standard", "hitting"}));
  loops->add_option("-o,--output", out, "loops JSON (default: stdout)");

  auto* classify = app.add_subcommand("classify", "classify a simple curve by cutting along it");
  classify->add_option("file", file, "SRF file")->required();
  classify->add_option("curve", curve_file, "curve JSON")->required();
  classify->add_option("--report", report, "report JSON (default: stdout)");

  auto* cover = app.add_subcommand("cover", "subhomology cover given by a map rho");
  cover->add_option("file", file, "SRF file")->required();
  cover->add_option("--rho", rho_file, "rho JSON")->required();
  cover->add_option("--loops", loops_file, "loops JSON (default: computed standard loops)");
  cover->add_option("-o,--output", out, "cover SRF; sheet labels go to <output>.json")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force shortest curve of a given kind");
  oracle->add_option("file", file, "SRF file")->required();
  oracle->add_option("--goal", goal_text, "orienting | nonor1 | nonor2 | onesided")->required();
  oracle->add_option("--max-weight", max_weight, "largest curve length searched")->required();
  oracle->add_option("--cap", cap, "crossings per edge")->check(CLI::Range(1, 3));
  oracle->add_option("--report", report, "report JSON (default: stdout)");

  auto* hard = app.add_subcommand("gen-hardness", "weighted surface from a grid graph");
  hard->add_option("grid", file, "grid file, one 'x y' per line")->required();
  hard->add_option("--epsilon", eps_text, "auto or a rational below 1/(12n)");
  hard->add_option("-o,--output", out, "SRF file (default: stdout)");

  auto* render = app.add_subcommand("render", "schematic SVG of a surface and a curve, or of its loop schema");
  render->add_option("file", file, "SRF file")->required();
  render->add_option("--curve", curve_file, "curve JSON");
  render->add_flag("--schema", schema, "draw the polygonal schema of the standard loops instead");
  render->add_option("-o,--output", out, "SVG file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Timer timer;
  try {
    if (check->parsed()) {
      Input in = load(file);
      const SurfaceMap& m = in.map;
      std::cout << "vertices " << m.num_vertices() << "\nedges " << m.num_edges() << "\nfaces " << m.num_faces()
                << "\neuler_characteristic " << m.euler_characteristic() << "\ng=" << m.euler_genus() << " "
                << (m.orientable() ? "orientable" : "non-orientable") << "\n";
    } else if (shortest->parsed()) {
      Input in = load(file);
      SolveResult r = solve(in.map, parse_goal(goal_text));
      write_file(out, dump(curve_to_json(in.map, r.curve)));
      Json rep = report_header("shortest", in);
      merge_into(rep, solve_report(r));
      if (timing) rep["wall_seconds"] = timer.seconds();
      if (!report.empty()) write_file(report, dump(rep));
    } else if (orient->parsed()) {
      Input in = load(file);
      CurveDrawing d = orienting_curve(in.map);
      CurveClass c = classify_by_cutting(in.map, d);
      write_file(out, dump(curve_to_json(in.map, d)));
      Json rep = report_header("orient-curve", in);
      merge_into(rep, curve_report(curve_length(in.map, d), c, canonical_signature(in.map, d), in.map.euler_genus(),
                                   multiplicity(d)));
      if (timing) rep["wall_seconds"] = timer.seconds();
      if (!report.empty()) write_file(report, dump(rep));
    } else if (loops->parsed()) {
      Input in = load(file);
      if (kind == "hitting") {
        write_file(out, dump(hitting_to_json(hitting_paths(in.map))));
      } else {
        LoopSystem ls = in.map.orientable() ? canonical_loops_orientable(in.map) : standard_loops(in.map);
        write_file(out, dump(loops_to_json(ls)));
      }
    } else if (classify->parsed()) {
      Input in = load(file);
      CurveDrawing d = curve_from_json(in.map, parse_json_text(read_file(curve_file), curve_file));
      CurveClass c = classify_by_cutting(in.map, d);
      Json rep = report_header("classify", in);
      merge_into(rep, curve_report(curve_length(in.map, d), c, canonical_signature(in.map, d), in.map.euler_genus(),
                                   multiplicity(d)));
      if (timing) rep["wall_seconds"] = timer.seconds();
      write_file(report, dump(rep));
    } else if (cover->parsed()) {
      Input in = load(file);
      LoopSystem ls;
      if (!loops_file.empty()) ls = loops_from_json(in.map, parse_json_text(read_file(loops_file), loops_file));
      else ls = in.map.orientable() ? canonical_loops_orientable(in.map) : standard_loops(in.map);
      RhoMap rho = rho_from_json(parse_json_text(read_file(rho_file), rho_file), ls.genus);
      EdgeLabeling a = labeling_from_loops(in.map, ls, rho);
      SubhomologyCover cov = build_cover(in.map, a);
      write_file(out, write_srf(cov.map, "cover with " + std::to_string(cov.sheets()) + " sheets"));
      write_file(out + ".json", dump(cover_sidecar_json(cov)));
    } else if (oracle->parsed()) {
      Input in = load(file);
      EnumerationBudget b;
      b.max_weight = parse_rational(max_weight);
      b.cap = cap;
      OracleResult r = brute_shortest(in.map, parse_goal(goal_text), b);
      Json rep = report_header("oracle", in);
      merge_into(rep, curve_report(r.length, r.cls, canonical_signature(in.map, r.witness), in.map.euler_genus(),
                                   multiplicity(r.witness)));
      rep["candidates"] = r.stats.candidates;
      rep["curve"] = curve_to_json(in.map, r.witness);
      if (timing) rep["wall_seconds"] = timer.seconds();
      write_file(report, dump(rep));
    } else if (hard->parsed()) {
      GridGraph g = parse_grid(read_file(file));
      std::optional<Rational> eps;
      if (eps_text != "auto") eps = parse_rational(eps_text);
      HardnessInstance inst = grid_to_surface(g, eps);
      // curves of the instance are walks in G'; the file holds the dual map
      write_file(out, write_srf(dual(inst.map).map, "grid of " + std::to_string(inst.n) + " points, epsilon " +
                                                        format_rational(inst.epsilon) + ", threshold " +
                                                        format_rational(inst.threshold)));
    } else if (render->parsed()) {
      Input in = load(file);
      if (schema) {
        LoopSystem ls = in.map.orientable() ? canonical_loops_orientable(in.map) : standard_loops(in.map);
        write_file(out, render_schema_svg(ls));
      } else {
        std::optional<CurveDrawing> d;
        if (!curve_file.empty()) d = curve_from_json(in.map, parse_json_text(read_file(curve_file), curve_file));
        write_file(out, render_curve_svg(in.map, d ? &*d : nullptr));
      }
    }
  } catch (const Error& e) {
    std::cerr << "surfcurve: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "surfcurve: internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
