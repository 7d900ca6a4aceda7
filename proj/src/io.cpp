#include "lpp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>

namespace lpp {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RunConfig& RunConfig::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

RunConfig& RunConfig::set(std::string key, double value) {
  return set(std::move(key), format_double(value));
}

RunConfig& RunConfig::set(std::string key, std::int64_t value) {
  return set(std::move(key), std::to_string(value));
}

RunConfig& RunConfig::set(std::string key, std::uint64_t value) {
  return set(std::move(key), std::to_string(value));
}

void RunConfig::write_csv_header(std::ostream& out) const {
  for (const auto& [k, v] : entries_) out << "# " << k << '=' << v << '\n';
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entries_) j[k] = v;
  return j;
}

nlohmann::ordered_json window_to_json(const ColoredWindow& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto blue = nlohmann::ordered_json::array();
  for (const auto& [i, k] : g.blue_edges()) blue.push_back({i, k});
  j["blue"] = std::move(blue);
  return j;
}

ColoredWindow window_from_json(const nlohmann::json& doc) {
  const nlohmann::json* w = &doc;
  if (doc.is_object() && doc.contains("graph")) w = &doc.at("graph");
  if (!w->is_object()) throw ArtifactError("window JSON must be an object");
  if (!w->contains("n") || !w->at("n").is_number_integer()) {
    throw ArtifactError("window JSON needs an integer field \"n\"");
  }
  if (!w->contains("blue") || !w->at("blue").is_array()) {
    throw ArtifactError("window JSON needs an array field \"blue\"");
  }
  const auto n = w->at("n").get<std::int64_t>();
  if (n < 1 || n > 1'000'000) throw ArtifactError("window size out of range: " + std::to_string(n));
  WindowBuilder b(static_cast<int>(n));
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& e : w->at("blue")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ArtifactError("blue entries must be [i, j] integer pairs");
    }
    const auto i = e[0].get<std::int64_t>();
    const auto j = e[1].get<std::int64_t>();
    if (i < 0 || j <= i || j > n) {
      throw ArtifactError("blue pair [" + std::to_string(i) + ", " + std::to_string(j) +
                          "] outside 0 <= i < j <= n");
    }
    if (!seen.insert({i, j}).second) {
      throw ArtifactError("duplicate blue pair [" + std::to_string(i) + ", " + std::to_string(j) + "]");
    }
    b.blue(static_cast<int>(i), static_cast<int>(j));
  }
  return std::move(b).build();
}

ColoredWindow read_window_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArtifactError("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArtifactError(path + ": " + e.what());
  }
  return window_from_json(doc);
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["construction"] = c.construction;
  j["x"] = to_string(c.x);
  j["n"] = c.graph.n();
  j["W"] = to_string(c.max_weight);
  j["path_a"] = c.path_a.vertices();
  j["path_b"] = c.path_b.vertices();
  j["red_a"] = c.red_a;
  j["red_b"] = c.red_b;
  j["dp_min_red"] = c.dp_min_red;
  j["dp_max_red"] = c.dp_max_red;
  j["is_h"] = c.is_h;
  j["graph"] = window_to_json(c.graph);
  return j;
}

nlohmann::ordered_json sturm_to_json(const SturmWitness& w) {
  auto j = certificate_to_json(w.certificate);
  const auto& sp = w.params;
  std::string word;
  for (int b : sp.sequence.bits) word += static_cast<char>('0' + b);
  nlohmann::ordered_json params;
  params["ell"] = sp.ell;
  params["s"] = sp.s;
  params["t"] = sp.t;
  params["m"] = sp.m;
  params["pivots"] = sp.pivots;
  params["sequence"] = word;
  // Keep the graph last so the summary fields read first.
  auto graph = j["graph"];
  j.erase("graph");
  j["sturm"] = std::move(params);
  j["graph"] = std::move(graph);
  return j;
}

void write_json(std::ostream& out, const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || doc.empty()) {
    out << doc.dump() << '\n';
    return;
  }
  out << "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out << "  " << nlohmann::ordered_json(key).dump() << ": " << value.dump();
    out << (++k < doc.size() ? ",\n" : "\n");
  }
  out << "}\n";
}

void write_estimate_csv(std::ostream& out, const RunConfig& config,
                        const std::vector<CurvePoint>& rows) {
  config.write_csv_header(out);
  out << "x,p,nWindow,reps,mean,stderr,dPlus,dMinus,jump\n";
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    out << to_string(e.x) << ',' << format_double(e.p) << ',' << e.n_window << ',' << e.reps << ','
        << format_double(e.mean) << ',' << format_double(e.stderr) << ',';
    if (row.derivatives) {
      out << format_double(row.derivatives->d_plus) << ',' << format_double(row.derivatives->d_minus)
          << ',' << format_double(row.derivatives->jump);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_delta_pmf_csv(std::ostream& out, const RunConfig& config, const DeltaPmf& pmf) {
  config.write_csv_header(out);
  out << "# total_mass=" << format_double(pmf.total_mass) << '\n'
      << "# mean=" << format_double(pmf.mean) << '\n'
      << "# mean_stderr=" << format_double(pmf.mean_stderr) << '\n';
  out << "n,phat,stderr\n";
  for (int m = 1; m <= pmf.n_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    out << m << ',' << format_double(pmf.phat[k]) << ',' << format_double(pmf.stderr[k]) << '\n';
  }
}

void write_renewal_csv(std::ostream& out, const RunConfig& config, const RenewalEstimate& est) {
  config.write_csv_header(out);
  out << "# gamma=" << format_double(est.gamma) << '\n'
      << "# estimate=" << format_double(est.mean) << '\n'
      << "# estimate_stderr=" << format_double(est.stderr) << '\n'
      << "# captured_mass=" << format_double(est.captured_mass) << '\n'
      << "# last_term=" << format_double(est.last_term) << '\n';
  out << "n,contribution,stderr,cumulative\n";
  for (const auto& t : est.terms) {
    out << t.m << ',' << format_double(t.contribution) << ',' << format_double(t.stderr) << ','
        << format_double(t.cumulative) << '\n';
  }
}

}  // namespace lpp
