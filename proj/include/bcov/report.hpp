#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "bcov/bezoutian.hpp"
#include "bcov/fintop.hpp"
#include "bcov/plcov.hpp"

namespace bcov {

using Json = nlohmann::ordered_json;

/* Every numeric value travels as a rational string; floats never enter. */
Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& field);
Json interval_json(const QInterval& iv);
QInterval interval_from_json(const Json& j, const std::string& field);

PLCovering plcov_from_json(const Json& j);
Json plcov_to_json(const PLCovering& cov);

Json branch_report_to_json(const BranchReport& rep);
BranchReport branch_report_from_json(const Json& j);

/* Flattened verdict of a bezout analyze run, serializable both ways. */
struct BezoutAnalysis {
  bool hyperbolic = false;
  std::vector<int> profile;
  int d = 0;
  long index = 0;
  long sheet_total = 0;
  bool collapse = false;
  bool branch = false;
  bool exact = false;
  std::vector<std::vector<Rat>> fiber_exact;
  std::vector<std::vector<QInterval>> fiber_iv;
};
BezoutAnalysis analyze_point(const SigmaPoint& a, int refine_steps = 64);
Json bezout_to_json(const BezoutAnalysis& a);
BezoutAnalysis bezout_from_json(const Json& j);

FinMap finmap_from_json(const Json& j);
Json finmap_to_json(const FinMap& m);
Json lemma_verdict_to_json(const LemmaVerdict& v);
Json fuzz_summary_to_json(const FuzzSummary& s);
FuzzSummary fuzz_summary_from_json(const Json& j);

Json make_envelope(const std::string& command, std::optional<std::uint64_t> seed,
                   double elapsed_ms, Json payload);

}  // namespace bcov
