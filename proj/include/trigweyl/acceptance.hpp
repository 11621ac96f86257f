#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigweyl/pipeline.hpp"

namespace trigweyl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// One line per finding.
  std::vector<std::string> detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  /// Criterion ids to run; all ten when empty.
  std::vector<int> only;
};

/// Runs the acceptance criteria against a pipeline whose table reaches at
/// least norm 56. Each criterion catches its own engine errors and reports
/// them as a failure.
std::vector<CriterionResult> run_acceptance(Pipeline& pipeline, const AcceptanceOptions& options = {});

/// "PASS  3  name" plus indented detail lines.
std::string to_text(const CriterionResult& result);

}  // namespace trigweyl
