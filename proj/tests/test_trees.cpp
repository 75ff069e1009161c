#include "multiquilt/trees.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace multiquilt;

namespace {

ColoredTree T(const char* s) { return ColoredTree::parse(s); }

}  // namespace

TEST(RibbonTrees, CountsByCatalanAndFaces) {
  EXPECT_EQ(enumerate_ribbon_trees(2, true).size(), 1u);
  EXPECT_EQ(enumerate_ribbon_trees(3, true).size(), 2u);
  EXPECT_EQ(enumerate_ribbon_trees(4, false).size(), 11u);  // pentagon: 5 + 5 + 1
  EXPECT_EQ(enumerate_ribbon_trees(5, false).size(), 45u);
  EXPECT_EQ(enumerate_ribbon_trees(6, true).size(), 42u);
}

TEST(RibbonTrees, RejectsTooFewLeaves) { EXPECT_THROW(enumerate_ribbon_trees(1, true), DomainError); }

TEST(ColoredTrees, Counts) {
  const int maximal[] = {2, 6, 21, 80, 322};
  const int stable[] = {3, 13, 67, 381, 2311};
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(enumerate_colored_trees(n, true).size(), static_cast<std::size_t>(maximal[n - 2])) << n;
    EXPECT_EQ(enumerate_colored_trees(n, false).size(), static_cast<std::size_t>(stable[n - 2])) << n;
  }
}

TEST(ColoredTrees, OutputIsSortedAndUnique) {
  const auto ts = enumerate_colored_trees(4, false);
  for (std::size_t k = 1; k < ts.size(); ++k) EXPECT_LT(ts[k - 1].code(), ts[k].code());
}

TEST(ColoredTrees, AxiomIsEnforced) {
  EXPECT_THROW(T(R"([1,2])"), std::invalid_argument);               // no colored vertex
  EXPECT_THROW(T(R"({"c":[{"c":[1]},2]})"), std::invalid_argument);  // two on one path
  EXPECT_NO_THROW(T(R"([{"c":[1]},{"c":[2]}])"));
}

TEST(ColoredTrees, Stability) {
  EXPECT_TRUE(T(R"({"c":[1,2]})").is_stable());
  EXPECT_FALSE(T(R"([{"c":[1,2]}])").is_stable());  // uncolored vertex of valence 2
  EXPECT_FALSE(T(R"({"c":[[1]]})").is_stable());      // uncolored vertex with one child
}

TEST(ColoredTrees, JsonRoundTrip) {
  for (const auto& t : enumerate_colored_trees(4, false)) EXPECT_EQ(ColoredTree::from_json(t.to_json()), t);
}

TEST(Contract, EmptySetIsIdentity) {
  const auto t = T(R"([[{"c":[1]},{"c":[2]}],{"c":[3]}])");
  const auto f = contract(t, {});
  EXPECT_EQ(f.target, t);
  for (int v = 0; v < t.vertex_count(); ++v) EXPECT_EQ(f.vertex_map[v], v);
}

TEST(Contract, FusionLimitAndIllegalHalf) {
  const auto t = T(R"([{"c":[1]},{"c":[2]}])");
  const auto f = contract(t, {1, 2});
  EXPECT_EQ(f.target, T(R"({"c":[1,2]})"));
  EXPECT_THROW(contract(t, {1}), IllegalContraction);
  try {
    contract(t, {2});
  } catch (const IllegalContraction& e) {
    EXPECT_NE(std::string(e.what()).find("leaf"), std::string::npos) << e.what();
  }
}

TEST(FacePoset, SmallCases) {
  const auto p2 = face_poset(2);
  ASSERT_EQ(p2.elements.size(), 3u);
  const int top = p2.index_of(colored_corolla(2).code());
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(p2.leq[k][top]);

  const auto p3 = face_poset(3);
  ASSERT_EQ(p3.elements.size(), 13u);
  int minimal = 0, maximum = 0;
  for (std::size_t a = 0; a < 13; ++a) {
    bool is_min = true, is_max = true;
    for (std::size_t b = 0; b < 13; ++b) {
      if (a == b) continue;
      if (p3.leq[b][a]) is_min = false;
      if (p3.leq[a][b]) is_max = false;
    }
    minimal += is_min;
    maximum += is_max;
    if (is_min) {
      EXPECT_TRUE(p3.elements[a].is_maximal());
    }
  }
  EXPECT_EQ(minimal, 6);
  EXPECT_EQ(maximum, 1);
}

TEST(BasicMoves, TwoLeaves) {
  const auto moves = basic_moves(T(R"({"c":[[1,2]]})"));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].kind, BasicMove::Kind::Splitting);
  EXPECT_EQ(moves[0].result, T(R"([{"c":[1]},{"c":[2]}])"));
}

TEST(BasicMoves, RootColoredThreeLeaves) {
  const auto moves = basic_moves(T(R"({"c":[[[1,2],3]]})"));
  std::multiset<BasicMove::Kind> kinds;
  for (const auto& m : moves) kinds.insert(m.kind);
  EXPECT_EQ(kinds, (std::multiset<BasicMove::Kind>{BasicMove::Kind::Flop, BasicMove::Kind::Splitting}));
}

TEST(BasicMoves, HexagonIsASixCycle) {
  const auto trees = enumerate_colored_trees(3, true);
  std::set<std::pair<std::string, std::string>> edges;
  std::map<std::string, int> degree;
  for (const auto& t : trees) {
    for (const auto& m : basic_moves(t)) {
      auto e = std::minmax(t.code(), m.result.code());
      if (edges.insert(e).second) {
        ++degree[e.first];
        ++degree[e.second];
      }
    }
  }
  EXPECT_EQ(edges.size(), 6u);
  for (const auto& t : trees) EXPECT_EQ(degree[t.code()], 2) << t.code();
  // connected: walk the cycle
  std::set<std::string> seen{trees[0].code()};
  std::vector<std::string> stack{trees[0].code()};
  while (!stack.empty()) {
    const auto c = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges) {
      for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (x == c && seen.insert(y).second) stack.push_back(y);
      }
    }
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(BasicMoves, ResultIsTheCommonContractionOfACodimOneFace) {
  for (const auto& t : enumerate_colored_trees(4, true)) {
    for (const auto& m : basic_moves(t)) {
      EXPECT_TRUE(m.result.is_maximal());
      EXPECT_NE(m.result, t);
    }
  }
}

TEST(FacetTypes, Counts) {
  for (auto [n, comp, par] : {std::tuple{2, 1, 1}, {3, 3, 3}, {4, 7, 6}}) {
    int c = 0, p = 0;
    for (const auto& d : facet_types(n)) (d.family == FacetDescriptor::Family::Composition ? c : p)++;
    EXPECT_EQ(c, comp) << n;
    EXPECT_EQ(p, par) << n;
  }
}
