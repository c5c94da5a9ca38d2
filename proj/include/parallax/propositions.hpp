#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parallax/geometry.hpp"
#include "parallax/sampling.hpp"

namespace parallax {

using Json = nlohmann::json;

// How a check is evaluated in a given curvature regime. Hold: the claim must
// pass every trial. Fail: the claim must fail, and the verdict carries a
// witness with a positive failure margin. Probe: the observation is reported,
// nothing is asserted. Regimes absent from a check's map are not evaluated
// (the claim is not meaningful there); the restriction is noted in the
// verdicts that do run.
enum class Expectation { Hold, Fail, Probe };

struct CheckInfo {
  std::string id;
  std::string title;
  std::set<int> expected_regime;           // curvature signs where the claim holds
  std::map<int, Expectation> evaluations;  // regimes evaluated, and how
};

struct SamplingConfig {
  int trials = 1000;
  uint64_t seed = 42;
  double scale = 2.0;   // max figure size
  double margin = 0.05; // degeneracy exclusion radius
};

void validate(const SamplingConfig& cfg);

struct Verdict {
  std::string check;
  double K = 0;
  std::string expectation;  // "hold" | "fail" | "probe"
  bool holds = false;
  int trials = 0;
  int failures = 0;
  double min_margin = 0;
  Json witness;  // worst-case configuration, replayable
  std::string note;
};

// True when the verdict is what the catalogue declares for this regime.
bool meets_expectation(const Verdict& v);

struct Report {
  std::vector<Verdict> verdicts;  // ordered by (check id, K)
};

const std::vector<CheckInfo>& catalogue();
const CheckInfo& check_info(const std::string& id);

Verdict run_check(const CurvedPlane& pl, const std::string& id, const SamplingConfig& cfg);

Report run_suite(const SamplingConfig& cfg, const std::vector<double>& Ks);

// Re-evaluates a witness produced by run_check and returns the recomputed
// per-trial value (margin or observable); bit-equal to witness["value"] for
// an untampered witness.
double replay_witness(const Json& witness);

Json verdict_to_json(const Verdict& v);

}  // namespace parallax
