#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lpp/io.hpp"

namespace lpp {
namespace {

using nlohmann::json;

TEST(FormatDouble, RoundTripsAndSpellsNan) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(WindowJson, RejectsMalformedInput) {
  EXPECT_THROW(window_from_json(json::parse(R"({"blue":[]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"({"n":0,"blue":[]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"({"n":2,"blue":[[0,3]]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"({"n":2,"blue":[[1,1]]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"({"n":2,"blue":[[0,1],[0,1]]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"({"n":2,"blue":[[0,1.5]]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"({"n":2,"blue":[[0]]})")), ArtifactError);
  EXPECT_THROW(window_from_json(json::parse(R"([1,2])")), ArtifactError);
  EXPECT_THROW(read_window_file("/nonexistent/window.json"), ArtifactError);
}

TEST(WindowJson, AcceptsNestedGraph) {
  const auto g = window_from_json(json::parse(R"({"config":{},"graph":{"n":2,"blue":[[0,2]]}})"));
  EXPECT_EQ(g.n(), 2);
  EXPECT_TRUE(g.is_blue(0, 2));
  EXPECT_FALSE(g.is_blue(0, 1));
}

TEST(CertificateJson, FieldsInOrderAndGraphRoundTrips) {
  const auto c = witness_reciprocal(3);
  const auto doc = certificate_to_json(c);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"construction", "x", "n", "W", "path_a", "path_b", "red_a",
                                            "red_b", "dp_min_red", "dp_max_red", "is_h", "graph"}));
  EXPECT_EQ(doc["x"], "1/3");
  EXPECT_EQ(doc["W"], "3");
  EXPECT_EQ(window_from_json(json::parse(doc.dump())), c.graph);
}

TEST(SturmJson, CarriesParameters) {
  const auto doc = sturm_to_json(sturm_graph(Rational(-11, 7)));
  EXPECT_EQ(doc["sturm"]["ell"], 2);
  EXPECT_EQ(doc["sturm"]["pivots"].dump(), "[31,35,40,44,49,53,58,62]");
  EXPECT_EQ(doc["n"], 93);
  EXPECT_EQ(doc["W"], "69");
}

TEST(WriteJson, OneTopLevelKeyPerLine) {
  nlohmann::ordered_json doc;
  doc["a"] = 1;
  doc["b"] = json::parse(R"({"c":[1,2]})");
  std::ostringstream out;
  write_json(out, doc);
  EXPECT_EQ(out.str(), "{\n  \"a\": 1,\n  \"b\": {\"c\":[1,2]}\n}\n");
  EXPECT_EQ(json::parse(out.str()), json::parse(R"({"a":1,"b":{"c":[1,2]}})"));
}

TEST(EstimateCsv, HeaderThenFixedColumns) {
  RunConfig config;
  config.set("tool", std::string("lpp")).set("p", 0.5).set("seed", std::uint64_t{7});
  const auto c = curve(0.5, {WeightParam(0.25), WeightParam(Rational(1, 2))}, 10, 50, 7);
  std::ostringstream out;
  write_estimate_csv(out, config, c.points);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# tool=lpp");
  std::getline(in, line);
  EXPECT_EQ(line, "# p=0.5");
  std::getline(in, line);
  EXPECT_EQ(line, "# seed=7");
  std::getline(in, line);
  EXPECT_EQ(line, "x,p,nWindow,reps,mean,stderr,dPlus,dMinus,jump");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("0.25,0.5,10,50,", 0), 0u) << line;
  EXPECT_EQ(line.substr(line.size() - 3), ",,,");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("1/2,0.5,10,50,", 0), 0u) << line;
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8);
  EXPECT_NE(line.back(), ',');
  EXPECT_FALSE(std::getline(in, line));
}

TEST(PmfCsv, OneRowPerGap) {
  const auto pmf = delta_pmf_mc(0.6, 5, 100, 3);
  std::ostringstream out;
  write_delta_pmf_csv(out, RunConfig{}, pmf);
  const std::string s = out.str();
  EXPECT_NE(s.find("n,phat,stderr\n1,"), std::string::npos);
  EXPECT_NE(s.find("\n5,"), std::string::npos);
  EXPECT_EQ(s.find("\n6,"), std::string::npos);
}

}  // namespace
}  // namespace lpp
