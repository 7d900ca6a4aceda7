#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpp/criticality.hpp"
#include "lpp/estimator.hpp"
#include "lpp/skeleton.hpp"
#include "lpp/window.hpp"

namespace lpp {

/// Malformed or inconsistent artifact input.
class ArtifactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolved run configuration, written verbatim at the top of every artifact.
/// Keys keep insertion order.
class RunConfig {
 public:
  RunConfig& set(std::string key, std::string value);
  RunConfig& set(std::string key, double value);
  RunConfig& set(std::string key, std::int64_t value);
  RunConfig& set(std::string key, std::uint64_t value);
  RunConfig& set(std::string key, int value) { return set(std::move(key), std::int64_t{value}); }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  /// One "# key=value" line per entry.
  void write_csv_header(std::ostream& out) const;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Shortest round-trip decimal for a double ("%.17g"); "nan" for NaN.
std::string format_double(double v);

/// {"n": int, "blue": [[i, j], ...]} with pairs in lexicographic order.
nlohmann::ordered_json window_to_json(const ColoredWindow& g);

/// Accepts a window object, or any object holding one under "graph".
/// Rejects missing fields, out-of-range or duplicate pairs.
ColoredWindow window_from_json(const nlohmann::json& j);
ColoredWindow read_window_file(const std::string& path);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
nlohmann::ordered_json sturm_to_json(const SturmWitness& w);

/// One top-level key per line, each value compact, trailing newline.
void write_json(std::ostream& out, const nlohmann::ordered_json& doc);

/// Columns x,p,nWindow,reps,mean,stderr,dPlus,dMinus,jump. Derivative
/// columns are empty when not available.
void write_estimate_csv(std::ostream& out, const RunConfig& config,
                        const std::vector<CurvePoint>& rows);
void write_delta_pmf_csv(std::ostream& out, const RunConfig& config, const DeltaPmf& pmf);
void write_renewal_csv(std::ostream& out, const RunConfig& config, const RenewalEstimate& est);

}  // namespace lpp
