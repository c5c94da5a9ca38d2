#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "parallax/report.hpp"
#include "parallax/svg.hpp"

using namespace parallax;

namespace {

std::string cli_path() {
  const char* p = std::getenv("PARALLAX_CLI");
  REQUIRE_MESSAGE(p != nullptr, "PARALLAX_CLI must point at the built binary");
  return p;
}

std::string tmp(const std::string& name) {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("parallax-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return (dir / name).string();
}

int run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + "'" + cli_path() + "' " + args + " >/dev/null 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

// rows of a parsed CSV column
std::vector<double> csv_column(const std::string& text, int col) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> out;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int c = 0; c <= col; ++c) std::getline(cells, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("report JSON carries the canonical key set") {
  SamplingConfig cfg;
  cfg.trials = 4;
  ReportDocument doc;
  doc.cfg = cfg;
  doc.ks = {0.0};
  doc.report = run_suite(cfg, doc.ks);
  const Json j = report_to_json(doc);
  for (const char* key :
       {"tool_version", "catalogue_version", "cfg", "ks", "catalogue", "verdicts", "witnesses"})
    CHECK(j.contains(key));
  CHECK(!j.contains("timings"));
  CHECK(j.at("cfg").at("trials") == 4);
  CHECK(j.at("catalogue").size() == 24);
  CHECK(j.at("verdicts").size() == j.at("witnesses").size());

  doc.with_timings = true;
  doc.timings = {{"LAM-15 K=0", 0.01}};
  CHECK(report_to_json(doc).contains("timings"));
}

TEST_CASE("canonical dump is stable, sorted and newline-terminated") {
  const Json j{{"zeta", 1.0}, {"alpha", Json{{"b", 2}, {"a", 1}}}, {"mid", 0.1}};
  const std::string d1 = canonical_dump(j);
  const std::string d2 = canonical_dump(j);
  CHECK(d1 == d2);
  CHECK(d1.back() == '\n');
  CHECK(d1.find("\"alpha\"") < d1.find("\"mid\""));
  CHECK(d1.find("\"mid\"") < d1.find("\"zeta\""));
  // shortest round-trip float text
  CHECK(canonical_dump(Json{{"x", 0.1}}).find("0.1") != std::string::npos);
}

TEST_CASE("reports pass only when every verdict meets its expectation") {
  Verdict good;
  good.check = "LAM-15";
  good.expectation = "hold";
  good.holds = true;
  Verdict bad;
  bad.check = "LAM-73";
  bad.K = -1.0;
  bad.expectation = "hold";
  bad.holds = false;
  Report rep;
  rep.verdicts = {good, bad};
  CHECK(!report_passes(rep));
  const auto failing = failing_checks(rep);
  REQUIRE(failing.size() == 1);
  CHECK(failing[0].find("LAM-73") == 0);
  rep.verdicts = {good};
  CHECK(report_passes(rep));
}

TEST_CASE("figure SVG: one polyline per geodesic, densely sampled") {
  const std::string svg =
      render_figure(make_plane(-1.0), "lambert-quad", {{"a", 0.5}, {"b", 0.5}});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count_of(svg, "<polyline") == 4);
  // a polyline of >= 128 segments lists >= 129 sample points
  const size_t attr = svg.find("points=\"");
  REQUIRE(attr != std::string::npos);
  const size_t end = svg.find('"', attr + 8);
  CHECK(count_of(svg.substr(attr + 8, end - attr - 8), ",") >= 129);
  // hyperbolic frame: the disk boundary is drawn, but not as a polyline
  CHECK(svg.find("class=\"boundary\"") != std::string::npos);

  const std::string flat = render_figure(make_plane(0.0), "saccheri", {});
  CHECK(count_of(flat, "<polyline") == 4);
  CHECK(flat.find("class=\"boundary\"") == std::string::npos);
}

TEST_CASE("figure ids and parameter names are validated") {
  CHECK_THROWS_AS(render_figure(make_plane(-1.0), "heptagon", {}), UnknownCheck);
  CHECK_THROWS_AS(render_figure(make_plane(-1.0), "lambert-quad", {{"q", 1.0}}),
                  InvalidParameter);
}

TEST_CASE("every falsifier witness has a rendering") {
  const CurvedPlane hyp = make_plane(-1.0);
  for (const std::string& id : counterexample_ids()) {
    const Witness w = counterexample_witness(hyp, id);
    const std::string svg = render_witness(hyp, w);
    INFO("id=", id);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg ") != std::string::npos);
    CHECK(count_of(svg, "<polyline") >= 1);
  }
}

TEST_CASE("cli: verify is deterministic and exits 0") {
  const std::string a = tmp("report_a.json");
  const std::string b = tmp("report_b.json");
  const std::string flags = "verify --k -1,0,1 --trials 3 --seed 5 --out ";
  CHECK(run_cli(flags + a) == 0);
  CHECK(run_cli(flags + b) == 0);
  const std::string ra = slurp(a);
  CHECK(ra == slurp(b));
  const Json j = Json::parse(ra);
  CHECK(j.at("cfg").at("seed") == 5);
  CHECK(j.at("ks") == Json({-1.0, 0.0, 1.0}));
  CHECK(!j.contains("timings"));
}

TEST_CASE("cli: timings are opt-in and non-canonical") {
  const std::string a = tmp("report_t.json");
  CHECK(run_cli("verify --k 0 --trials 2 --timings --out " + a) == 0);
  CHECK(Json::parse(slurp(a)).contains("timings"));
}

TEST_CASE("cli: the seed falls back to PARALLAX_SEED") {
  const std::string a = tmp("seed_env.json");
  const std::string b = tmp("seed_flag.json");
  CHECK(run_cli("verify --k 0 --trials 2 --out " + a, "PARALLAX_SEED=7 ") == 0);
  CHECK(Json::parse(slurp(a)).at("cfg").at("seed") == 7);
  // an explicit flag wins over the environment
  CHECK(run_cli("verify --k 0 --trials 2 --seed 9 --out " + b, "PARALLAX_SEED=7 ") == 0);
  CHECK(Json::parse(slurp(b)).at("cfg").at("seed") == 9);
  CHECK(run_cli("verify --k 0 --trials 2", "PARALLAX_SEED=nonsense ") == 2);
}

TEST_CASE("cli: figure writes SVG and rejects unknown ids") {
  const std::string f = tmp("quad.svg");
  CHECK(run_cli("figure --id lambert-quad --k -1 --params a=0.5,b=0.5 --out " + f) == 0);
  const std::string svg = slurp(f);
  CHECK(count_of(svg, "<polyline") == 4);
  CHECK(run_cli("figure --id heptagon --out " + tmp("no.svg")) == 2);
  CHECK(run_cli("figure --id lambert-quad --params a=zero --out " + tmp("no2.svg")) == 2);
}

TEST_CASE("cli: counterexample emits a witness with positive margin") {
  const std::string w = tmp("khayyam.json");
  const std::string s = tmp("khayyam.svg");
  CHECK(run_cli("counterexample --id khayyam --out " + w + " --svg " + s) == 0);
  const Json j = Json::parse(slurp(w));
  CHECK(j.at("id") == "khayyam");
  CHECK(j.at("margin").get<double>() > 0.1);
  CHECK(count_of(slurp(s), "<polyline") >= 1);
  CHECK(run_cli("counterexample --id zeno --out " + tmp("no.json")) == 2);
}

TEST_CASE("cli: trig table shows the curvature through the ratio column") {
  const std::string f0 = tmp("table0.csv");
  CHECK(run_cli("trig-table --k 0 --max 1 --step 0.25 --out " + f0) == 0);
  const std::string flat = slurp(f0);
  CHECK(flat.rfind("side,opposite_ratio_at_right_angle,angle_sum_equilateral\n", 0) == 0);
  const auto flat_ratio = csv_column(flat, 1);
  REQUIRE(flat_ratio.size() == 4);
  for (double r : flat_ratio) CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  for (double s : csv_column(flat, 2)) CHECK(s == doctest::Approx(M_PI).epsilon(1e-12));

  const std::string fh = tmp("table_h.csv");
  CHECK(run_cli("trig-table --k -1 --max 1 --step 0.25 --out " + fh) == 0);
  const auto hyp_ratio = csv_column(slurp(fh), 1);
  for (size_t i = 1; i < hyp_ratio.size(); ++i) CHECK(hyp_ratio[i] > hyp_ratio[i - 1]);
  CHECK(hyp_ratio.front() > std::sqrt(2.0));

  const std::string fs = tmp("table_s.csv");
  CHECK(run_cli("trig-table --k 1 --max 1 --step 0.25 --out " + fs) == 0);
  const auto sph_ratio = csv_column(slurp(fs), 1);
  for (size_t i = 1; i < sph_ratio.size(); ++i) CHECK(sph_ratio[i] < sph_ratio[i - 1]);
  CHECK(sph_ratio.front() < std::sqrt(2.0));

  CHECK(run_cli("trig-table --k 1 --max 2 --step 0.5 --out " + tmp("no.csv")) == 2);
  CHECK(run_cli("trig-table --k 0 --max 1 --step 0 --out " + tmp("no2.csv")) == 2);

  // byte-identical on repetition
  const std::string again = tmp("table0_again.csv");
  CHECK(run_cli("trig-table --k 0 --max 1 --step 0.25 --out " + again) == 0);
  CHECK(slurp(again) == flat);
}

TEST_CASE("cli: unwritable output paths exit 2") {
  CHECK(run_cli("verify --k 0 --trials 1 --out /nonexistent-dir/sub/report.json") == 2);
}

TEST_CASE("cli: missing or malformed flags exit 2") {
  CHECK(run_cli("") == 2);
  CHECK(run_cli("figure") == 2);
  CHECK(run_cli("verify --k banana") == 2);
  CHECK(run_cli("verify --trials -3") == 2);
}
