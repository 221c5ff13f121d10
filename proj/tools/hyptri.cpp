#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <thread>

#include "hyptri/error.hpp"
#include "hyptri/harness.hpp"
#include "hyptri/render.hpp"
#include "hyptri/tables.hpp"

using namespace hyptri;

namespace {

constexpr int kUsage = 2;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(',', start);
    const std::string part = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!part.empty()) out.push_back(part);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  const std::size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(s);
      return {v, v};
    }
    const auto a = std::stoull(s.substr(0, dots));
    const auto b = std::stoull(s.substr(dots + 2));
    if (b < a) throw Error(ErrorCode::ParseError, "empty seed range " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad seed range " + s);
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text(path, text);
  }
}

// Short names like "RId" select every table case with that suffix.
std::vector<std::string> table_selection(const std::string& name) {
  if (name == "all") return {"all"};
  const auto names = table_case_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return {name};
  std::vector<std::string> out;
  for (const auto& n : names) {
    const std::string tail = n.substr(n.find(':') + 1);
    if (tail == name || tail.substr(0, tail.find('-')) == name) out.push_back(n);
  }
  if (out.empty()) throw Error(ErrorCode::UnknownIdentity, "unknown table case: " + name);
  return out;
}

std::string kind_name(PointKind k) { return to_string(k); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic triangle centers and identity checks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded triangle as JSON");
  std::uint64_t gen_seed = 1;
  std::string gen_shape = "any", gen_out, gen_model = "klein";
  GenConstraints gc;
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--shape", gen_shape, "any|acute|isosceles|equilateral|right");
  gen->add_option("--model", gen_model, "Vertex model: klein|poincare|hyperboloid");
  gen->add_option("--max-radius", gc.max_radius, "Largest Klein radius of a vertex")->check(CLI::Range(0.01, 0.95));
  gen->add_option("--min-angle", gc.min_angle, "Smallest angle")->check(CLI::Range(0.05, 1.0));
  gen->add_option("--min-side", gc.min_side, "Shortest side")->check(CLI::Range(0.05, 5.0));
  gen->add_option("--min-side-difference", gc.min_side_difference, "Smallest pairwise side difference");
  gen->add_option("-o,--output", gen_out, "Output path (stdout if omitted)");

  // centers
  auto* cen = app.add_subcommand("centers", "Compute triangle centers");
  std::string cen_in, cen_which = "all";
  bool cen_json = false, cen_table = false;
  cen->add_option("triangle", cen_in, "Triangle JSON")->required();
  cen->add_option("--which", cen_which, "all or a comma list of M,O,O_A,O_B,O_C,I,I_A,I_B,I_C,H,K,L,S,Z,F");
  auto* jf = cen->add_flag("--json", cen_json, "JSON lines");
  cen->add_flag("--table", cen_table, "Aligned text table (default)")->excludes(jf);

  // verify
  auto* ver = app.add_subcommand("verify", "Evaluate the identity registry");
  std::string ver_in, ver_seeds, ver_ids, ver_out, ver_shape = "any";
  bool ver_fail_fast = false;
  int ver_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* vin = ver->add_option("triangle", ver_in, "Triangle JSON");
  auto* vseeds = ver->add_option("--seeds", ver_seeds, "Seed range A..B");
  vin->excludes(vseeds);
  ver->add_option("--ids", ver_ids, "Comma list of identity ids");
  ver->add_flag("--fail-fast", ver_fail_fast, "Stop at the first failing seed");
  ver->add_option("--jobs", ver_jobs, "Worker threads for --seeds")->check(CLI::PositiveNumber);
  ver->add_option("--shape", ver_shape, "Shape for --seeds");
  ver->add_option("-o,--output", ver_out, "Report path (stdout if omitted)");

  // render
  auto* ren = app.add_subcommand("render", "Draw a triangle and its centers as SVG");
  std::string ren_in, ren_model = "klein", ren_centers, ren_out;
  bool ren_euler = false;
  ren->add_option("triangle", ren_in, "Triangle JSON")->required();
  ren->add_option("--model", ren_model, "klein|poincare");
  ren->add_option("--centers", ren_centers, "Comma list of centers or all");
  ren->add_flag("--euler", ren_euler, "Draw the line through O and Z");
  ren->add_option("-o,--output", ren_out, "SVG path")->required();

  // tables
  auto* tab = app.add_subcommand("tables", "Check the extended distance and angle tables");
  std::string tab_case = "all";
  double tab_d = 0.7;
  bool tab_json = false;
  tab->add_option("--case", tab_case, "Case name (e.g. T1:RId, RId, InIn) or all");
  tab->add_option("--d", tab_d, "Auxiliary distance or angle");
  tab->add_flag("--json", tab_json, "JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      gc.shape = parse_shape(gen_shape);
      const TriangleData t = gen_triangle(gen_seed, gc);
      emit(triangle_to_json(t, gen_seed, parse_model(gen_model)).dump(2) + "\n", gen_out);
      return 0;
    }

    if (*cen) {
      const LoadedTriangle lt = read_triangle(cen_in);
      const auto rows = center_table(lt.triangle, split_list(cen_which));
      std::string out;
      for (const auto& r : rows) {
        if (cen_json) {
          out += nlohmann::json(r).dump() + "\n";
          continue;
        }
        char line[256];
        if (!r.result) {
          std::snprintf(line, sizeof line, "%-4s %-9s %s\n", r.name.c_str(), "error", r.error.c_str());
        } else {
          const auto& c = *r.result;
          const Vec3 h = c.kind == PointKind::Real ? normalized(c.point) : (1.0 / max_norm(c.point.h)) * c.point.h;
          const double m = std::max({std::abs(c.coords[0]), std::abs(c.coords[1]), std::abs(c.coords[2])});
          std::snprintf(line, sizeof line, "%-4s %-9s (%+.9f, %+.9f, %+.9f)  coords %+.9f : %+.9f : %+.9f\n",
                        r.name.c_str(), kind_name(c.kind).c_str(), h.x, h.y, h.w, c.coords[0] / m, c.coords[1] / m,
                        c.coords[2] / m);
        }
        out += line;
      }
      emit(out, "");
      return 0;
    }

    if (*ver) {
      SuiteOptions opt;
      opt.ids = split_list(ver_ids);
      opt.fail_fast = ver_fail_fast;
      std::vector<TrialReport> reports;
      if (!ver_seeds.empty()) {
        const auto [a, b] = parse_seed_range(ver_seeds);
        GenConstraints g;
        g.shape = parse_shape(ver_shape);
        reports = run_seeds(a, b, opt, ver_jobs, g);
      } else if (!ver_in.empty()) {
        const LoadedTriangle lt = read_triangle(ver_in);
        reports.push_back(run_suite(lt.triangle, lt.seed, opt));
      } else {
        std::cerr << "verify needs a triangle file or --seeds\n";
        return kUsage;
      }
      emit(report_lines(reports), ver_out);
      return summarize(reports).fail == 0 ? 0 : 1;
    }

    if (*ren) {
      const LoadedTriangle lt = read_triangle(ren_in);
      RenderOptions ro;
      ro.model = parse_model(ren_model);
      ro.centers = split_list(ren_centers);
      ro.euler_line = ren_euler;
      render_svg(lt.triangle, ro, ren_out);
      return 0;
    }

    if (*tab) {
      bool all_pass = true;
      std::string out;
      for (const auto& name : table_selection(tab_case)) {
        for (const auto& c : table_cases(name, tab_d)) {
          all_pass = all_pass && c.pass;
          if (tab_json) {
            out += nlohmann::json(c).dump() + "\n";
            continue;
          }
          const nlohmann::json j = c;
          out += c.name + "  " + (c.pass ? "pass" : "FAIL") + "  " + c.configuration + "\n    expected " +
                 j["expected"].dump() + "\n    actual   " + j["actual"].dump() + "\n";
        }
      }
      emit(out, "");
      return all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::IoFailure:
      case ErrorCode::UnknownIdentity:
      case ErrorCode::OutOfDomain:
        return kUsage;
      default:
        return 1;
    }
  }
  return kUsage;
}
