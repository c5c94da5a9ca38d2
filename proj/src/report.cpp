#include "parallax/report.hpp"

#include <algorithm>

#include "parallax/version.hpp"

namespace parallax {

namespace {

Json catalogue_json() {
  Json arr = Json::array();
  for (const CheckInfo& c : catalogue()) {
    Json regimes = Json::array();
    for (const auto& [sign, exp] : c.evaluations) {
      const char* name = exp == Expectation::Hold ? "hold"
                         : exp == Expectation::Fail ? "fail"
                                                    : "probe";
      regimes.push_back(Json{{"sign", sign}, {"expectation", name}});
    }
    arr.push_back(Json{{"id", c.id}, {"title", c.title}, {"regimes", regimes}});
  }
  return arr;
}

}  // namespace

Json report_to_json(const ReportDocument& doc) {
  Json verdicts = Json::array();
  Json witnesses = Json::array();
  for (const Verdict& v : doc.report.verdicts) {
    verdicts.push_back(verdict_to_json(v));
    witnesses.push_back(v.witness);
  }
  Json j{{"tool_version", kToolVersion},
         {"catalogue_version", kCatalogueVersion},
         {"cfg",
          Json{{"trials", doc.cfg.trials},
               {"seed", doc.cfg.seed},
               {"scale", doc.cfg.scale},
               {"margin", doc.cfg.margin}}},
         {"ks", doc.ks},
         {"catalogue", catalogue_json()},
         {"verdicts", verdicts},
         {"witnesses", witnesses}};
  if (doc.with_timings) {
    Json t = Json::array();
    for (const auto& [label, seconds] : doc.timings)
      t.push_back(Json{{"check", label}, {"seconds", seconds}});
    j["timings"] = t;
  }
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

bool report_passes(const Report& rep) {
  return std::all_of(rep.verdicts.begin(), rep.verdicts.end(), meets_expectation);
}

std::vector<std::string> failing_checks(const Report& rep) {
  std::vector<std::string> out;
  for (const Verdict& v : rep.verdicts)
    if (!meets_expectation(v))
      out.push_back(v.check + " (K=" + std::to_string(v.K) + ")");
  return out;
}

}  // namespace parallax
