#include "multiquilt/charts.hpp"
#include "multiquilt/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace multiquilt;

namespace {

ColoredTree T(const char* s) { return ColoredTree::parse(s); }
ExtRat R(long p, long q = 1) { return ExtRat(Rational(p, q)); }

// z = (0, 1, 3), y = 2 in the y = 1 gauge
NodalConfiguration sample3() { return to_nodal(Configuration{{1, 2}, 2}); }

}  // namespace

TEST(CrossRatio, NormalForm) {
  for (long t : {-3L, 2L, 7L}) EXPECT_EQ(cross_ratio4(R(0), R(1), ExtRat::infinity(), R(t)), R(t));
  EXPECT_EQ(cross_ratio4(R(0), R(1), ExtRat::infinity(), R(5, 3)), R(5, 3));
}

TEST(CrossRatio, Values) {
  EXPECT_EQ(cross_ratio4(R(2), R(5), R(5), R(9)), R(0));
  EXPECT_EQ(cross_ratio4(R(0), R(1), R(4), R(3)), R(9));
  EXPECT_THROW(cross_ratio4(R(1), R(1), R(1), R(2)), DomainError);
}

TEST(CrossRatio, QuadOnConfigurations) {
  const auto s = sample3();
  EXPECT_EQ(rho_quad(s, 1, 2, 3, 0), R(-2));
  // markings 1 and 2 on a bubble: rho_{0123} has j = k in the limit
  NodalConfiguration b;
  b.type = T(R"({"c":[[1,2],3]})");
  b.components[0] = {0, 1};
  b.components[1] = {0, 1};
  EXPECT_EQ(rho_quad(b, 0, 1, 2, 3), R(0));
}

TEST(CrossRatio, PairValuesAndRelation) {
  const auto s = sample3();
  EXPECT_EQ(rho_pair(s, 1, 2), R(2));
  EXPECT_EQ(rho_pair(s, 2, 1), R(-2));
  const ExtRat via = rho_pair(s, 1, 2) / (-rho_quad(s, 1, 2, 3, 0));
  EXPECT_EQ(via, R(1));
  EXPECT_EQ(rho_pair(s, 2, 3), R(1));
}

TEST(CrossRatio, SymmetryOnSeededConfigs) {
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const auto s = to_nodal(random_config(5, rng));
    EXPECT_EQ(rho_quad(s, 2, 1, 3, 4), ExtRat(1) - rho_quad(s, 1, 2, 3, 4));
  }
}

TEST(CrossRatio, IdentitySuite) {
  for (const auto& c : cross_ratio_suite(5, 10, 3)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Embed, TwoMarkings) {
  const auto v = embed(to_nodal(Configuration{{1}, 1}));
  EXPECT_TRUE(v.quad.empty());
  ASSERT_EQ(v.pair.size(), 1u);
  EXPECT_EQ(v.p(1, 2), R(1));

  NodalConfiguration below;
  below.type = T(R"([{"c":[1]},{"c":[2]}])");
  below.components = {{0, {0, 1}}, {1, {0}}, {2, {0}}};
  EXPECT_EQ(embed(below).p(1, 2), R(0));
}

TEST(Embed, InjectiveOnInteriorPoints) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_config(4, rng), b = random_config(4, rng);
    if (normalize(a) == normalize(b)) continue;
    EXPECT_NE(embed(to_nodal(a)), embed(to_nodal(b)));
  }
}

TEST(Embed, JsonRoundTrip) {
  const auto v = embed(sample3());
  EXPECT_EQ(CrossRatioVector::from_json(v.to_json()), v);
}

TEST(Decode, TwoMarkingEndpoints) {
  CrossRatioVector zero{2, {}, {{{1, 2}, R(0)}}};
  EXPECT_EQ(decode(zero).type, T(R"([{"c":[1]},{"c":[2]}])"));
  CrossRatioVector inf{2, {}, {{{1, 2}, ExtRat::infinity()}}};
  EXPECT_EQ(decode(inf).type, T(R"({"c":[[1,2]]})"));
}

TEST(Decode, RoundTripEveryType) {
  for (const auto& c : decode_suite(4, 5, 9)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Decode, InconsistentVectorIsRejected) {
  auto v = embed(to_nodal(Configuration{{1, 2, 1}, 3}));
  v.pair[{1, 3}] = R(5);  // breaks rho_13 = rho_12 / (1 - rho_1230)
  EXPECT_THROW(decode(v), InconsistentCrossRatios);
  try {
    decode(v);
  } catch (const InconsistentCrossRatios& e) {
    EXPECT_FALSE(std::string(e.what()).empty());
  }
}

TEST(SimpleRatioChart, WorkedExample) {
  const auto t = T(R"({"c":[[1,[2,3]]]})");
  const auto b = simple_ratio_chart(t, sample3());
  EXPECT_EQ(b.labels, (std::map<int, Rational>{{1, Rational(1, 2)}, {2, 2}}));
  EXPECT_EQ(simple_ratio_name(t, 1), "x1/y");
  EXPECT_EQ(simple_ratio_name(t, 2), "x2/x1");
}

TEST(SimpleRatioChart, InteriorPositiveAndVertexZero) {
  Rng rng(4);
  for (const auto& t : enumerate_colored_trees(4, true)) {
    const auto inner = simple_ratio_chart(t, to_nodal(random_config(4, rng)));
    for (const auto& [e, q] : inner.labels) EXPECT_GT(q, 0);
    const auto vertex = simple_ratio_chart(t, random_nodal(t, rng));
    for (const auto& [e, q] : vertex.labels) EXPECT_EQ(q, 0);
  }
}

TEST(SimpleRatioChart, OutsideDomainIsRejected) {
  const auto t = T(R"({"c":[[1,[2,3]]]})");
  Rng rng(1);
  EXPECT_THROW(simple_ratio_chart(t, random_nodal(T(R"({"c":[[[1,2],3]]})"), rng)), DomainError);
}

TEST(Reconstruct, AllOnes) {
  for (const auto& t : enumerate_colored_trees(4, true)) {
    BalancedLabelling b{t, {}};
    for (int e : t.edges()) b.labels[e] = 1;
    EXPECT_EQ(to_configuration(reconstruct(t, b)), (Configuration{{1, 1, 1}, 1})) << t.code();
  }
}

TEST(Reconstruct, FusionPair) {
  // zero labels keep the two bubbles apart; equal positive labels fuse them
  const auto t = T(R"([{"c":[1]},{"c":[2]}])");
  EXPECT_EQ(reconstruct(t, BalancedLabelling{t, {{1, 0}, {2, 0}}}).type, t);
  EXPECT_EQ(reconstruct(t, BalancedLabelling{t, {{1, 3}, {2, 3}}}).type, T(R"({"c":[1,2]})"));
  const BalancedLabelling half{t, {{1, 0}, {2, 1}}};
  EXPECT_FALSE(is_balanced(half));
  EXPECT_THROW(reconstruct(t, half), DomainError);
}

TEST(Reconstruct, RoundTripsAndDetection) {
  for (const auto& c : chart_suite(3, 10, 5)) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(InducedLabelling, IdentityAndOnes) {
  Rng rng(8);
  for (const auto& t : enumerate_colored_trees(4, true)) {
    const auto b = random_balanced_labelling(t, {}, rng);
    EXPECT_EQ(induced_labelling(contract(t, {}), b), b);
    BalancedLabelling ones{t, {}};
    for (int e : t.edges()) ones.labels[e] = 1;
    for (const auto& [code, u] : all_contractions(t)) {
      const auto f = *find_morphism(t, u);
      for (const auto& [e, q] : induced_labelling(f, ones).labels) EXPECT_EQ(q, 1);
    }
  }
}

TEST(InducedLabelling, StaysBalanced) {
  Rng rng(12);
  for (const auto& t : enumerate_colored_trees(4, true)) {
    for (const auto& [code, u] : all_contractions(t)) {
      const auto f = *find_morphism(t, u);
      for (int k = 0; k < 100 / 20 + 1; ++k) {
        const auto b = random_balanced_labelling(t, {}, rng);
        const auto ind = induced_labelling(f, b);
        EXPECT_TRUE(is_balanced(ind)) << t.code() << " -> " << code << ": " << labelling_violation(ind).value_or("");
      }
    }
  }
}

TEST(ChartSpec, CoordinateCounts) {
  const auto corolla = chart_spec(colored_corolla(3));
  EXPECT_EQ(corolla.interior_count(), 2);
  EXPECT_EQ(corolla.edge_count(), 0);
  const auto vertex = chart_spec(T(R"({"c":[[1,[2,3]]]})"));
  EXPECT_EQ(vertex.interior_count(), 0);
  EXPECT_EQ(vertex.edge_count(), 2);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& t : enumerate_colored_trees(n, false)) {
      const auto spec = chart_spec(t);
      EXPECT_EQ(spec.interior_count(), stratum_dimension(t)) << t.code();
      EXPECT_EQ(spec.edge_count(), t.edge_count()) << t.code();
    }
  }
}

TEST(ChartSpec, ReducedChartDropsTheRedundantRatio) {
  const auto t = T(R"([[{"c":[1]},{"c":[2]}],[{"c":[3]},[{"c":[[4,5]]},{"c":[6]}]]])");
  const auto reduced = reduced_chart_edges(t);
  std::vector<int> dropped;
  for (int e : t.edges()) {
    if (std::find(reduced.begin(), reduced.end(), e) == reduced.end()) dropped.push_back(e);
  }
  ASSERT_EQ(dropped.size(), 1u);
  EXPECT_EQ(simple_ratio_name(t, dropped[0]), "y/x3");
  std::multiset<std::string> names;
  for (int e : reduced) names.insert(simple_ratio_name(t, e));
  EXPECT_EQ(names, (std::multiset<std::string>{"x1/x2", "x3/x2", "x5/x3", "x4/y", "y/x1", "y/x1", "y/x5", "y/x5"}));
}
