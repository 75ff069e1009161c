#include "multiquilt/polytope.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace multiquilt;

namespace {

ColoredTree T(const char* s) { return ColoredTree::parse(s); }

}  // namespace

TEST(StratumDimension, Examples) {
  EXPECT_EQ(stratum_dimension(colored_corolla(5)), 4);
  for (const auto& t : enumerate_colored_trees(4, true)) EXPECT_EQ(stratum_dimension(t), 0);
  EXPECT_EQ(stratum_dimension(T(R"({"c":[[1,2,3]]})")), 1);
}

TEST(WeightVector, HandExamples) {
  EXPECT_EQ(weight_vector(T(R"({"c":[[[1,2],3]]})")).entries, (IntVec{1, 2, 0}));
  EXPECT_EQ(weight_vector(T(R"([{"c":[1]},{"c":[2]}])")).entries, (IntVec{2, -1}));
  EXPECT_EQ(weight_vector(T(R"({"c":[[1,2]]})")).entries, (IntVec{1, 0}));
  EXPECT_EQ(weight_vector(T(R"([[{"c":[1]},{"c":[2]}],[{"c":[3]},[{"c":[[4,5]]},{"c":[6]}]]])")).entries,
            (IntVec{2, 16, 6, 1, 4, -14}));
  EXPECT_THROW(weight_vector(colored_corolla(3)), DomainError);
}

TEST(WeightVector, SumIsTriangular) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& t : enumerate_colored_trees(n, true)) {
      Integer s = 0;
      for (const auto& x : weight_vector(t).entries) s += x;
      EXPECT_EQ(s, n * (n - 1) / 2) << t.code();
    }
  }
}

TEST(MonomialRatio, HandExamples) {
  const auto a = T(R"({"c":[[[1,2],3]]})"), b = T(R"({"c":[[1,[2,3]]]})");
  EXPECT_EQ(monomial_ratio(a, b), (std::vector<std::pair<int, Integer>>{{2, 1}}));
  const auto leaves = T(R"([{"c":[1]},{"c":[2]}])"), root = T(R"({"c":[[1,2]]})");
  EXPECT_EQ(monomial_ratio(leaves, root), (std::vector<std::pair<int, Integer>>{{1, 1}}));
}

TEST(MonomialRatio, FlopAboveTheSeamHasDoubledExponent) {
  const auto a = T(R"([[{"c":[1]},{"c":[2]}],{"c":[3]}])"), b = T(R"([{"c":[1]},[{"c":[2]},{"c":[3]}]])");
  EXPECT_EQ(monomial_ratio(a, b), (std::vector<std::pair<int, Integer>>{{1, 2}}));
}

TEST(Hull, Degenerate) {
  const auto point = hull({{1, 2, 3}});
  EXPECT_EQ(point.dim, 0);
  EXPECT_TRUE(point.facets.empty());
  const auto seg = hull({{1, 0}, {2, -1}});
  EXPECT_EQ(seg.dim, 1);
  EXPECT_EQ(seg.vertices.size(), 2u);
  EXPECT_EQ(seg.facets.size(), 2u);
  EXPECT_EQ(face_lattice(seg).f_vector(1), std::vector<int>{2});
}

TEST(Hull, Hexagon) {
  const std::vector<IntVec> pts{{1, 2, 0}, {1, 4, -2}, {2, 4, -3}, {2, 1, 0}, {4, 1, -2}, {4, 2, -3}};
  const auto P = hull(pts);
  EXPECT_EQ(P.dim, 2);
  EXPECT_EQ(P.vertices.size(), 6u);
  EXPECT_EQ(P.facets.size(), 6u);
  const auto L = face_lattice(P);
  EXPECT_EQ(L.f_vector(2), (std::vector<int>{6, 6}));
  EXPECT_EQ(L.faces.size(), 6u + 6u + 2u);  // plus empty face and the hexagon
}

TEST(Hull, InteriorPointsAreNotVertices) {
  const auto P = hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}});
  EXPECT_EQ(P.vertices.size(), 4u);
  EXPECT_EQ(P.facets.size(), 4u);
}

TEST(Hull, CubeAndF) {
  std::vector<IntVec> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, m >> 1 & 1, m >> 2 & 1});
  const auto P = hull(cube);
  EXPECT_EQ(face_lattice(P).f_vector(3), (std::vector<int>{8, 12, 6}));
}

TEST(Multiplihedron, J4AndJ5) {
  const auto P4 = hull(weight_vectors(enumerate_colored_trees(4, true)));
  EXPECT_EQ(P4.dim, 3);
  EXPECT_EQ(face_lattice(P4).f_vector(3), (std::vector<int>{21, 32, 13}));
  const auto P5 = hull(weight_vectors(enumerate_colored_trees(5, true)));
  EXPECT_EQ(face_lattice(P5).f_vector(4), (std::vector<int>{80, 165, 110, 25}));
}

TEST(Multiplihedron, OffMesh) {
  const auto P4 = hull(weight_vectors(enumerate_colored_trees(4, true)));
  std::ostringstream os;
  write_off(os, P4);
  std::istringstream in(os.str());
  std::string head;
  int v = 0, f = 0, e = 0;
  in >> head >> v >> f >> e;
  EXPECT_EQ(head, "OFF");
  EXPECT_EQ(v, 21);
  EXPECT_EQ(f, 13);
  EXPECT_THROW(write_off(os, hull(weight_vectors(enumerate_colored_trees(3, true)))), DomainError);
}

TEST(CwIso, SmallCases) {
  for (int n = 2; n <= 4; ++n) {
    const auto rep = check_cw_iso(n);
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump(2);
    EXPECT_EQ(rep.trees, rep.faces);
  }
  EXPECT_EQ(check_cw_iso(2).trees, 3);
  const auto r3 = check_cw_iso(3);
  EXPECT_EQ(r3.trees, 13);
  EXPECT_EQ(r3.vertices, 6);
  EXPECT_EQ(check_cw_iso(4).facets, 13);
  EXPECT_THROW(check_cw_iso(7), DomainError);
}
