#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parallax/counterexamples.hpp"
#include "parallax/errors.hpp"
#include "parallax/report.hpp"
#include "parallax/svg.hpp"
#include "parallax/trig.hpp"
#include "parallax/version.hpp"

namespace {

using namespace parallax;

constexpr int kExitOk = 0;
constexpr int kExitPropositionFailure = 1;
constexpr int kExitUsage = 2;

// Shortest round-trip decimal form, never more than 17 significant digits.
std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_k_list(const std::string& spec) {
  std::vector<double> ks;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidParameter("empty curvature entry in '" + spec + "'");
    size_t used = 0;
    double k = 0;
    try {
      k = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidParameter("bad curvature '" + item + "'");
    // Verifiable envelope: below it the excess-based margins sink under
    // rounding noise, above it figure sizes collide with the degeneracy
    // tolerance.  Zero (the flat plane) is always admissible.
    if (k != 0.0 && (std::abs(k) < 1e-4 || std::abs(k) > 1e14))
      throw InvalidParameter("curvature magnitude outside the verifiable range "
                             "[1e-4, 1e14]; use 0 for the flat plane");
    ks.push_back(k);
  }
  if (ks.empty()) throw InvalidParameter("no curvatures given");
  return ks;
}

std::map<std::string, double> parse_params(const std::string& spec) {
  std::map<std::string, double> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InvalidParameter("parameter must look like name=value, got '" + item + "'");
    size_t used = 0;
    const double v = std::stod(item.substr(eq + 1), &used);
    if (used != item.size() - eq - 1) throw InvalidParameter("bad value in '" + item + "'");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << content;
  return static_cast<bool>(f);
}

int emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  if (!write_file(out_path, content)) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

uint64_t default_seed() {
  const char* env = std::getenv("PARALLAX_SEED");
  if (!env || !*env) return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw InvalidParameter("PARALLAX_SEED is not an integer");
  return v;
}

int cmd_verify(const std::string& k_spec, int trials, uint64_t seed, double scale, double margin,
               const std::string& out_path, bool with_timings) {
  SamplingConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.scale = scale;
  cfg.margin = margin;
  validate(cfg);

  std::vector<double> ks = parse_k_list(k_spec);
  std::sort(ks.begin(), ks.end());

  ReportDocument doc;
  doc.cfg = cfg;
  doc.ks = ks;
  doc.with_timings = with_timings;
  for (const CheckInfo& info : catalogue())
    for (double K : ks) {
      const CurvedPlane pl = make_plane(K);
      if (!info.evaluations.count(pl.sign())) continue;
      const auto t0 = std::chrono::steady_clock::now();
      doc.report.verdicts.push_back(run_check(pl, info.id, cfg));
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      if (with_timings)
        doc.timings.emplace_back(info.id + " K=" + fmt(K), dt.count());
    }

  const int rc = emit(out_path, canonical_dump(report_to_json(doc)));
  if (rc != kExitOk) return rc;
  if (!report_passes(doc.report)) {
    std::cerr << "failing checks:\n";
    for (const std::string& f : failing_checks(doc.report)) std::cerr << "  " << f << "\n";
    return kExitPropositionFailure;
  }
  return kExitOk;
}

int cmd_figure(const std::string& id, double K, const std::string& params_spec,
               const std::string& out_path) {
  const std::string svg = render_figure(make_plane(K), id, parse_params(params_spec));
  return emit(out_path, svg);
}

int cmd_counterexample(const std::string& id, double K, const std::string& out_path,
                       const std::string& svg_path) {
  const CurvedPlane pl = make_plane(K);
  const Witness w = counterexample_witness(pl, id);
  const int rc = emit(out_path, canonical_dump(witness_to_json(w)));
  if (rc != kExitOk) return rc;
  if (!svg_path.empty()) {
    const int rc_svg = emit(svg_path, render_witness(pl, w));
    if (rc_svg != kExitOk) return rc_svg;
  }
  return w.margin > 0 ? kExitOk : kExitPropositionFailure;
}

int cmd_trig_table(double K, double max_side, double step, const std::string& out_path) {
  if (!(step > 0) || !(max_side > 0) || !(max_side >= step))
    throw InvalidParameter("need 0 < step <= max");
  const CurvedPlane pl = make_plane(K);
  if (pl.K > 0 && max_side >= M_PI / (2 * pl.kappa()))
    throw InvalidParameter("table range reaches the hemisphere cap");
  std::string csv = "side,opposite_ratio_at_right_angle,angle_sum_equilateral\n";
  for (int i = 1;; ++i) {
    const double side = i * step;
    if (side > max_side + 1e-12) break;
    const double hyp = law_of_cosines(pl, side, side, M_PI / 2);
    csv += fmt(side) + "," + fmt(hyp / side) + "," +
           fmt(3 * equilateral_angle_from_side(pl, side)) + "\n";
  }
  return emit(out_path, csv);
}

// CLI11 refuses option values that begin with '-', such as "-1,0,1"; gluing
// the value onto its flag sidesteps that before parsing starts. Returns the
// reversed vector CLI11's parse(vector) overload expects.
std::vector<std::string> glue_flag_values(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--k" && i + 1 < argc) {
      const std::string v = argv[i + 1];
      if (v.size() >= 2 && v[0] == '-' &&
          (std::isdigit(static_cast<unsigned char>(v[1])) || v[1] == '.')) {
        args.push_back("--k=" + v);
        ++i;
        continue;
      }
    }
    args.push_back(std::move(a));
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambert parallel-theory verifier on constant-curvature planes"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the proposition catalogue");
  std::string v_k = "-1,0,1", v_out;
  int v_trials = 1000;
  double v_scale = 2.0, v_margin = 0.05;
  uint64_t v_seed = 0;
  bool v_seeded = false, v_timings = false;
  verify->add_option("--k", v_k, "comma-separated curvature list");
  verify->add_option("--trials", v_trials, "trials per check and curvature");
  verify->add_option("--seed", v_seed, "sampling seed")->each([&](const std::string&) {
    v_seeded = true;
  });
  verify->add_option("--scale", v_scale, "max figure size");
  verify->add_option("--margin", v_margin, "degeneracy exclusion margin");
  verify->add_option("--out", v_out, "report path (stdout when omitted)");
  verify->add_flag("--timings", v_timings, "include wall-clock timings (non-canonical)");

  auto* figure = app.add_subcommand("figure", "render a construction as SVG");
  std::string f_id, f_params, f_out;
  double f_k = -1.0;
  figure->add_option("--id", f_id, "figure name")->required();
  figure->add_option("--k", f_k, "curvature");
  figure->add_option("--params", f_params, "name=value pairs, comma separated");
  figure->add_option("--out", f_out, "SVG path (stdout when omitted)");

  auto* cx = app.add_subcommand("counterexample", "emit a falsifier witness");
  std::string c_id, c_out, c_svg;
  double c_k = -1.0;
  cx->add_option("--id", c_id, "falsifier name")->required();
  cx->add_option("--k", c_k, "curvature");
  cx->add_option("--out", c_out, "witness path (stdout when omitted)");
  cx->add_option("--svg", c_svg, "also render the configuration");

  auto* table = app.add_subcommand("trig-table", "side-dependence table as CSV");
  std::string t_out;
  double t_k = -1.0, t_max = 2.0, t_step = 0.1;
  table->add_option("--k", t_k, "curvature");
  table->add_option("--max", t_max, "largest side");
  table->add_option("--step", t_step, "side increment");
  table->add_option("--out", t_out, "CSV path (stdout when omitted)");

  try {
    app.parse(glue_flag_values(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      const uint64_t seed = v_seeded ? v_seed : default_seed();
      return cmd_verify(v_k, v_trials, seed, v_scale, v_margin, v_out, v_timings);
    }
    if (*figure) return cmd_figure(f_id, f_k, f_params, f_out);
    if (*cx) return cmd_counterexample(c_id, c_k, c_out, c_svg);
    if (*table) return cmd_trig_table(t_k, t_max, t_step, t_out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
