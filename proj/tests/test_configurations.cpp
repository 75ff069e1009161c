#include "multiquilt/configurations.hpp"

#include <gtest/gtest.h>

using namespace multiquilt;

TEST(Normalize, DividesByHeight) {
  const Configuration c{{2, 4}, 2};
  EXPECT_EQ(normalize(c), (Configuration{{1, 2}, 1}));
  EXPECT_EQ(normalize(normalize(c)), normalize(c));
}

TEST(Normalize, ScaleInvariant) {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto c = random_config(4, rng);
    const Rational a = rng.positive_rational();
    Configuration ac = c;
    for (auto& g : ac.x) g *= a;
    ac.y *= a;
    EXPECT_EQ(normalize(ac), normalize(c));
  }
}

TEST(RandomConfig, DeterministicAndValid) {
  EXPECT_EQ(random_config(3, 7), random_config(3, 7));
  EXPECT_NE(random_config(3, 7), random_config(3, 8));
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) EXPECT_NO_THROW(random_config(2 + k % 5, rng).validate());
  const auto c = random_config(2, 3);
  EXPECT_EQ(c.x.size(), 1u);
  EXPECT_GT(c.x[0], 0);
  EXPECT_GT(c.y, 0);
  EXPECT_THROW(random_config(1, 1), DomainError);
}

TEST(Configuration, RejectsNonPositive) {
  EXPECT_THROW((Configuration{{1, 0}, 1}).validate(), ValidationError);
  EXPECT_THROW((Configuration{{1}, -1}).validate(), ValidationError);
}

TEST(Configuration, JsonRoundTrip) {
  const Configuration c{{Rational(1, 3), 5}, Rational(7, 2)};
  EXPECT_EQ(Configuration::from_json(c.to_json()), c);
}

TEST(Nodal, InteriorTypeIsCorolla) {
  const auto s = to_nodal(Configuration{{1, 2}, 2});
  EXPECT_EQ(combinatorial_type(s), colored_corolla(3));
  EXPECT_EQ(to_configuration(s), normalize(Configuration{{1, 2}, 2}));
}

TEST(Nodal, BubbleAtCollidingMarkings) {
  // z_1 = z_2 under the seam: an uncolored bubble below a colored one
  NodalConfiguration s;
  s.type = ColoredTree::parse(R"({"c":[[1,2]]})");
  s.components[0] = {0};
  s.components[1] = {0, 1};
  EXPECT_NO_THROW(s.validate());
  EXPECT_EQ(combinatorial_type(s).colored_vertices(), std::vector<int>{0});
}

TEST(Nodal, UnstableComponentIsRejected) {
  NodalConfiguration s;
  s.type = ColoredTree::parse(R"({"c":[1,2]})");
  s.components[0] = {0, 1};
  EXPECT_NO_THROW(s.validate());
  s.type = ColoredTree::parse(R"({"c":[1,2,3]})");
  EXPECT_THROW(s.validate(), ValidationError);  // wrong point count
  EXPECT_THROW(NodalConfiguration::from_json(nlohmann::json::parse(R"({"tree":[{"c":[[1,2]]}],"components":{}})")),
               std::invalid_argument);
}

TEST(Nodal, ValidationNamesComponent) {
  NodalConfiguration s;
  s.type = ColoredTree::parse(R"([{"c":[1]},{"c":[2]}])");
  s.components[0] = {0, 2};
  s.components[1] = {0};
  s.components[2] = {0};
  try {
    s.validate();
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("component 0"), std::string::npos) << e.what();
  }
}

TEST(Nodal, JsonRoundTrip) {
  Rng rng(3);
  for (const auto& t : enumerate_colored_trees(4, false)) {
    const auto s = random_nodal(t, rng);
    EXPECT_EQ(NodalConfiguration::from_json(s.to_json()), s);
  }
}
