#include "multiquilt/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace multiquilt;

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("multiquilt_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST(Cli, TreesEnumerate) {
  const auto r = run({"trees", "enumerate", "--n", "3", "--colored", "--maximal"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["count"], 6);
  EXPECT_EQ(run({"trees", "enumerate", "--n", "4"}).json()["count"], 11);
}

TEST(Cli, PolytopeBuildHexagon) {
  const auto r = run({"polytope", "build", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["vertices"].size(), 6u);
  EXPECT_EQ(j["facets"].size(), 6u);
  EXPECT_EQ(j["dim"], 2);
}

TEST(Cli, OffOnlyForThreeDimensions) {
  const auto path = (std::filesystem::temp_directory_path() / "multiquilt_test_j4.off").string();
  EXPECT_EQ(run({"polytope", "build", "--n", "4", "--off", path}).code, 0);
  std::ifstream in(path);
  std::string head;
  in >> head;
  EXPECT_EQ(head, "OFF");
  EXPECT_EQ(run({"polytope", "build", "--n", "3", "--off", path}).code, 1);
}

TEST(Cli, VerifyCw) {
  const auto r = run({"polytope", "verify-cw", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.json()["passed"].get<bool>());
}

TEST(Cli, WeightedCells) {
  const auto r = run({"weighted", "cells", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["boundary_cells_by_dimension"]["2"], 23);
  EXPECT_EQ(run({"weighted", "cells", "--n", "5", "--rule", "product-face"}).json()["boundary_cells_by_dimension"]["2"],
            38);
}

TEST(Cli, ChartsVerifyIsDeterministic) {
  const auto a = run({"charts", "verify", "--n", "4", "--samples", "100", "--seed", "1"});
  const auto b = run({"charts", "verify", "--n", "4", "--samples", "100", "--seed", "1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"charts", "verify", "--n", "4", "--samples", "100", "--seed", "2"}).out);
}

TEST(Cli, EmbedDecodeRoundTrip) {
  const auto cfg = temp_file("cfg.json", R"({"x": ["1", "2", "1/2"], "y": "3"})");
  const auto e = run({"embed", "--config", cfg});
  ASSERT_EQ(e.code, 0) << e.out << e.err;
  const auto xr = temp_file("xr.json", e.out);
  const auto d = run({"decode", "--cross-ratios", xr});
  ASSERT_EQ(d.code, 0) << d.out;
  EXPECT_EQ(d.json()["point"], e.json()["point"]);
}

TEST(Cli, MetricCommands) {
  const auto tree = temp_file("bicolor.json",
                              R"({"tree": [[[{"c":[1]},{"c":[2]},{"c":[3]}],{"c":[4]}],{"c":[[5,6]]}],
                                  "lambda": {"1":1,"2":2,"3":3,"4":3,"5":3,"6":5,"7":6,"8":7}})");
  const auto c = run({"metric", "cone", "--tree", tree});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.json()["cone"]["independent"], nlohmann::json({1, 2, 3, 8}));
  const auto t = run({"metric", "theta", "--tree", tree, "--precision", "15"});
  EXPECT_EQ(t.code, 0) << t.out;
  EXPECT_EQ(t.json()["labels"].size(), 8u);
  const auto bad = temp_file("bad.json", R"({"tree": [[[{"c":[1]},{"c":[2]},{"c":[3]}],{"c":[4]}],{"c":[[5,6]]}],
                                  "lambda": {"1":1,"2":2,"3":3,"4":4,"5":3,"6":5,"7":6,"8":7}})");
  EXPECT_EQ(run({"metric", "cone", "--tree", bad}).code, 1);
  EXPECT_EQ(run({"metric", "theta", "--tree", bad}).code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"trees", "enumerate"}).code, 2);
  EXPECT_EQ(run({"trees", "enumerate", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"weighted", "cells", "--n", "5", "--rule", "glue"}).code, 2);
  EXPECT_EQ(run({"embed", "--config", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"embed", "--config", temp_file("junk.json", "{not json")}).code, 2);
  const auto invalid = run({"embed", "--config", temp_file("neg.json", R"({"x": ["1", "-2"], "y": "1"})")});
  EXPECT_EQ(invalid.code, 1);
  EXPECT_TRUE(invalid.json().contains("error"));
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifySingleCriterion) {
  const auto r = run({"verify", "--criterion", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["criteria"].size(), 1u);
}
