#pragma once

#include <string>
#include <vector>

#include "parallax/propositions.hpp"

namespace parallax {

// Timings are opt-in: they break byte-identity between runs, so the
// canonical report omits them unless explicitly requested.
struct ReportDocument {
  SamplingConfig cfg;
  std::vector<double> ks;
  Report report;
  bool with_timings = false;
  std::vector<std::pair<std::string, double>> timings;  // label -> seconds
};

Json report_to_json(const ReportDocument& doc);

// Canonical bytes: sorted keys, shortest round-trip floats (at most 17
// significant digits), two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

// True when every verdict matches its catalogued expectation.
bool report_passes(const Report& rep);

// Ids of the verdicts that do not.
std::vector<std::string> failing_checks(const Report& rep);

}  // namespace parallax
