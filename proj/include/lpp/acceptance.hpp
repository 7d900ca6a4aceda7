#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpp/replicas.hpp"

namespace lpp {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Measured values behind the verdict.
  std::string detail;
  double seconds = 0.0;
  /// Wall-clock budget; exceeding it fails the criterion. 0 means none.
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20241015;
  Execution exec = Execution::Parallel;
  /// Criterion ids to run; empty runs all of 1..9.
  std::vector<int> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

int acceptance_criterion_count();

/// Runs the acceptance suite. Exceptions inside a criterion are caught and
/// reported as a failure of that criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  3  title  (1.2 s)  detail" style table, one line per criterion.
std::string format_result_line(const CriterionResult& r);

}  // namespace lpp
