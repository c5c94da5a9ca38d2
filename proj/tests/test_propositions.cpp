#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "parallax/propositions.hpp"
#include "parallax/trig.hpp"
#include "test_support.hpp"

using namespace parallax;

namespace {

SamplingConfig small_cfg(int trials = 25, uint64_t seed = 42) {
  SamplingConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("catalogue is sorted, unique and complete") {
  const auto& cat = catalogue();
  REQUIRE(cat.size() == 24);
  CHECK(std::is_sorted(cat.begin(), cat.end(),
                       [](const CheckInfo& a, const CheckInfo& b) { return a.id < b.id; }));
  for (size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].id != cat[i].id);
  for (const char* id : {"LAM-13", "LAM-16", "LAM-26", "LAM-2838", "LAM-41", "LAM-82"}) {
    CHECK_NOTHROW(check_info(id));
  }
  for (const auto& info : cat) {
    CHECK(!info.title.empty());
    CHECK(!info.evaluations.empty());
    // every regime where the claim holds is also evaluated
    for (int s : info.expected_regime) CHECK(info.evaluations.count(s) == 1);
  }
}

TEST_CASE("unknown check ids are rejected") {
  CHECK_THROWS_AS(check_info("LAM-999"), UnknownCheck);
  CHECK_THROWS_AS(run_check(make_plane(0.0), "nonsense", small_cfg()), UnknownCheck);
}

TEST_CASE("sampling configuration is validated") {
  SamplingConfig cfg = small_cfg();
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), InvalidParameter);
  cfg = small_cfg();
  cfg.margin = cfg.scale;
  CHECK_THROWS_AS(validate(cfg), InvalidParameter);
  cfg = small_cfg();
  cfg.margin = -0.1;
  CHECK_THROWS_AS(validate(cfg), InvalidParameter);
}

TEST_CASE("regimes outside a check's catalogue entry are not evaluated") {
  CHECK_THROWS_AS(run_check(make_plane(-1.0), "LAM-52", small_cfg()), WrongGeometry);
  CHECK_THROWS_AS(run_check(make_plane(1.0), "LAM-16", small_cfg()), WrongGeometry);
  const Verdict v = run_check(make_plane(1.0), "LAM-52", small_cfg());
  CHECK(v.note.find("only in the regimes") != std::string::npos);
}

TEST_CASE("run_check is deterministic in the seed") {
  const CurvedPlane pl = make_plane(-1.0);
  const Json a = verdict_to_json(run_check(pl, "LAM-82", small_cfg(25, 7)));
  const Json b = verdict_to_json(run_check(pl, "LAM-82", small_cfg(25, 7)));
  CHECK(a.dump() == b.dump());
  const Json c = verdict_to_json(run_check(pl, "LAM-82", small_cfg(25, 8)));
  CHECK(a.dump() != c.dump());
}

TEST_CASE("witnesses replay to the stored value bit for bit") {
  struct Probe {
    const char* id;
    double K;
  };
  for (const Probe pr : {Probe{"LAM-13", -1.0}, Probe{"LAM-15", 1.0}, Probe{"LAM-2838", -1.0},
                         Probe{"LAM-50", 0.0}, Probe{"LAM-55", 1.0}, Probe{"LAM-68", -1.0},
                         Probe{"LAM-73", -1.0}, Probe{"LAM-80", 1.0}, Probe{"LAM-82", -1.0}}) {
    const Verdict v = run_check(make_plane(pr.K), pr.id, small_cfg(12));
    REQUIRE(v.witness.contains("params"));
    const double replayed = replay_witness(v.witness);
    CHECK(replayed == v.witness.at("value").get<double>());
  }
}

TEST_CASE("the raised-perpendicular limit holds flat and fails hyperbolically") {
  const Verdict flat = run_check(make_plane(0.0), "LAM-16", small_cfg(50));
  CHECK(flat.expectation == "hold");
  CHECK(flat.holds);
  CHECK(meets_expectation(flat));

  const CurvedPlane hyp = make_plane(-1.0);
  const Verdict v = run_check(hyp, "LAM-16", small_cfg(50));
  CHECK(v.expectation == "fail");
  CHECK(!v.holds);
  CHECK(v.failures == v.trials);
  CHECK(v.min_margin > 1e-9);
  CHECK(meets_expectation(v));
  // the margin is the shortfall against the angle of parallelism of the height
  const double h = v.witness.at("params").at("h").get<double>();
  CHECK(v.min_margin ==
        doctest::Approx(M_PI / 2 - angle_of_parallelism(hyp, h)).epsilon(1e-6));
}

TEST_CASE("the angle-sum check asserts constancy only where it is true") {
  const Verdict flat = run_check(make_plane(0.0), "LAM-15", small_cfg(200));
  CHECK(flat.holds);
  CHECK(flat.note.find("deviation") != std::string::npos);
  // In curved regimes the check holds by exhibiting a wide spread of sums.
  for (double K : {-1.0, 1.0}) {
    const Verdict v = run_check(make_plane(K), "LAM-15", small_cfg(200));
    CHECK(v.expectation == "hold");
    CHECK(v.holds);
    CHECK(v.min_margin > 0);
    CHECK(v.note.find("spread") != std::string::npos);
    CHECK(meets_expectation(v));
  }
}

TEST_CASE("the probe check reports without asserting") {
  for (double K : support::standard_ks()) {
    const Verdict v = run_check(make_plane(K), "LAM-26", small_cfg(30));
    CHECK(v.expectation == "probe");
    CHECK(meets_expectation(v));
    CHECK(!v.note.empty());
  }
}

TEST_CASE("summit-angle classes match the curvature sign everywhere") {
  for (double K : support::standard_ks()) {
    const Verdict v = run_check(make_plane(K), "LAM-50", small_cfg(120));
    CHECK(v.holds);
    CHECK(v.failures == 0);
    CHECK(v.min_margin > 0);
  }
}

TEST_CASE("run_suite orders verdicts by check id then curvature") {
  SamplingConfig cfg = small_cfg(6);
  const Report rep = run_suite(cfg, {1.0, -1.0, 0.0});
  REQUIRE(!rep.verdicts.empty());
  for (size_t i = 1; i < rep.verdicts.size(); ++i) {
    const Verdict& a = rep.verdicts[i - 1];
    const Verdict& b = rep.verdicts[i];
    CHECK((a.check < b.check || (a.check == b.check && a.K < b.K)));
  }
  // sphere-only claims appear once, three-regime claims three times
  const auto count = [&](const std::string& id) {
    return std::count_if(rep.verdicts.begin(), rep.verdicts.end(),
                         [&](const Verdict& v) { return v.check == id; });
  };
  CHECK(count("LAM-52") == 1);
  CHECK(count("LAM-15") == 3);
  CHECK(count("LAM-16") == 2);
  CHECK_THROWS_AS(run_suite(cfg, {}), InvalidParameter);
}

TEST_CASE("every verdict of a quick full suite meets its expectation") {
  const Report rep = run_suite(small_cfg(60), {-1.0, 0.0, 1.0});
  for (const Verdict& v : rep.verdicts) {
    INFO(v.check, " at K=", v.K, " note=", v.note);
    CHECK(meets_expectation(v));
    if (v.expectation == "fail") CHECK(v.min_margin > 0);
  }
}

TEST_CASE("curvature magnitude does not disturb the verdicts") {
  for (double K : {-25.0, -0.04, 0.09, 16.0}) {
    for (const char* id : {"LAM-15", "LAM-2838", "LAM-73", "LAM-62", "LAM-71"}) {
      const CheckInfo& info = check_info(id);
      const CurvedPlane pl = make_plane(K);
      if (!info.evaluations.count(pl.sign())) continue;
      const Verdict v = run_check(pl, id, small_cfg(25));
      INFO(id, " at K=", K, " note=", v.note);
      CHECK(meets_expectation(v));
    }
  }
}
