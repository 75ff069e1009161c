#include "multiquilt/weighted.hpp"

#include <gtest/gtest.h>

using namespace multiquilt;

TEST(Weighted, IntervalForThreeMarkings) {
  const auto cells = enumerate_weighted_strata(3);
  std::map<int, int> dims;
  for (const auto& s : cells) ++dims[s.dimension];
  EXPECT_EQ(dims, (std::map<int, int>{{0, 2}, {1, 1}}));
}

TEST(Weighted, SquareAndTwoTriangles) {
  int squares = 0, triangles = 0;
  for (const auto& s : enumerate_weighted_strata(4)) {
    if (s.dimension != 2) continue;
    const auto base = project_to_unweighted(s);
    if (base.vertex_count() == 1) {
      ++squares;
      EXPECT_EQ(s.free_classes(), 1);
    } else {
      ++triangles;
      EXPECT_TRUE(base.is_binary());
      EXPECT_EQ(s.free_classes(), 2);
    }
  }
  EXPECT_EQ(squares, 1);
  EXPECT_EQ(triangles, 2);
  const auto r = weighted_report(4, CellRule::EqualitySplit);
  EXPECT_EQ(r.boundary_cells, (std::map<int, int>{{0, 6}, {1, 6}}));
}

TEST(Weighted, FiveMarkingBoundary) {
  const auto r = weighted_report(5, CellRule::EqualitySplit);
  EXPECT_EQ(r.boundary_cells.at(2), 23);
  EXPECT_EQ(r.boundary_2cells_by_tree_dim, (std::map<int, int>{{0, 11}, {1, 10}, {2, 2}}));
  EXPECT_EQ(weighted_report(5, CellRule::ProductFace).boundary_cells.at(2), 38);
}

TEST(Weighted, TopDimension) {
  for (int n = 3; n <= 6; ++n) {
    int top = 0;
    for (const auto& s : enumerate_weighted_strata(n)) top = std::max(top, s.dimension);
    EXPECT_EQ(top, n - 2) << n;
  }
}

TEST(Weighted, WeightsAreMonotone) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& s : enumerate_weighted_strata(n)) {
      std::map<int, int> rank;  // component -> position of its class
      for (std::size_t k = 0; k < s.classes.size(); ++k) {
        for (int v : s.classes[k].components) rank[v] = static_cast<int>(k);
      }
      ASSERT_EQ(static_cast<int>(rank.size()), s.tree.vertex_count());
      for (int v = 1; v < s.tree.vertex_count(); ++v) EXPECT_LE(rank[v], rank[s.tree.parent(v)]);
    }
  }
}

TEST(Weighted, EulerCharacteristicOfADisk) {
  for (int n = 3; n <= 6; ++n) {
    long chi = 0;
    for (const auto& s : enumerate_weighted_strata(n)) chi += s.dimension % 2 ? -1 : 1;
    EXPECT_EQ(chi, 1) << n;
  }
}

TEST(Weighted, RuleParsing) {
  EXPECT_EQ(parse_cell_rule("product-face"), CellRule::ProductFace);
  EXPECT_THROW(parse_cell_rule("glue"), std::invalid_argument);
  EXPECT_THROW(enumerate_weighted_strata(2), DomainError);
}
