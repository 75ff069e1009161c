#ifndef MULTIQUILT_WEIGHTED_HPP
#define MULTIQUILT_WEIGHTED_HPP

// Strata of the moduli of weighted stable disks: an uncolored stable tree
// together with weights in [0, 1] on its components, non-increasing away from
// the root. With n markings (the root plus n-1 leaves) the components of a
// tree form a poset (child <= parent) and the weights range over its order
// polytope; cells are (tree, face of that polytope).

#include "multiquilt/rational.hpp"
#include "multiquilt/trees.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiquilt {

enum class CellRule {
  EqualitySplit,  // a cell is on the boundary iff some weight is 0 or 1
  ProductFace,    // ... or its tree is nodal
};

inline CellRule parse_cell_rule(const std::string& s) {
  if (s == "equality-split") return CellRule::EqualitySplit;
  if (s == "product-face") return CellRule::ProductFace;
  throw std::invalid_argument("unknown cell rule '" + s + "' (expected equality-split or product-face)");
}

inline const char* to_string(CellRule r) {
  return r == CellRule::EqualitySplit ? "equality-split" : "product-face";
}

struct WeightClass {
  enum class Label { Zero, Free, One };
  std::vector<int> components;
  Label label;
};

inline const char* to_string(WeightClass::Label l) {
  switch (l) {
    case WeightClass::Label::Zero: return "zero";
    case WeightClass::Label::Free: return "free";
    case WeightClass::Label::One: return "one";
  }
  return "?";
}

struct WeightedStratum {
  RibbonTree tree;
  std::vector<WeightClass> classes;  // zero class first, one class last, free classes in a linear extension
  int tree_dimension = 0;
  int dimension = 0;
  bool boundary = false;

  int free_classes() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const WeightClass& c) {
      return c.label == WeightClass::Label::Free;
    }));
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : classes) cs.push_back({{"components", c.components}, {"label", to_string(c.label)}});
    return {{"tree", tree.to_json()}, {"classes", cs}, {"dimension", dimension}, {"boundary", boundary}};
  }
};

inline int tree_dimension(const RibbonTree& t) {
  int d = 0;
  for (int v = 0; v < t.vertex_count(); ++v) d += t.valence(v) - 3;
  return d;
}

namespace detail {

/// All set partitions of {0..m-1} as block labels (restricted growth strings).
inline void for_each_partition(int m, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> block(m, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == m) {
      fn(block, used);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
}

/// Faces of the order polytope of the component poset of t, as block labels
/// on elements 0..V-1 (components), V (bottom, weight 0), V+1 (top, weight 1),
/// each with its blocks listed in a linear extension of the quotient order.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> order_polytope_faces(const RibbonTree& t) {
  const int V = t.vertex_count();
  const int bot = V, top = V + 1, m = V + 2;
  std::vector<std::pair<int, int>> covers;  // (smaller, larger)
  for (int v = 1; v < V; ++v) covers.emplace_back(v, t.parent(v));
  covers.emplace_back(0, top);
  for (int v = 0; v < V; ++v) {
    bool minimal = true;
    for (const auto& c : t.children(v)) {
      if (!c.is_leaf) minimal = false;
    }
    if (minimal) covers.emplace_back(bot, v);
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for_each_partition(m, [&](const std::vector<int>& block, int k) {
    if (block[bot] == block[top]) return;
    // each block connected in the cover graph
    std::vector<int> root(m);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (const auto& [a, b] : covers) {
      if (block[a] == block[b]) root[find(a)] = find(b);
    }
    std::vector<int> comp_of_block(k, -1);
    for (int x = 0; x < m; ++x) {
      const int r = find(x);
      if (comp_of_block[block[x]] < 0) {
        comp_of_block[block[x]] = r;
      } else if (comp_of_block[block[x]] != r) {
        return;
      }
    }
    // quotient order acyclic
    std::vector<std::vector<int>> succ(k);
    std::vector<int> indeg(k, 0);
    for (const auto& [a, b] : covers) {
      if (block[a] != block[b]) {
        succ[block[a]].push_back(block[b]);
        ++indeg[block[b]];
      }
    }
    std::vector<int> queue;
    for (int b = 0; b < k; ++b) {
      if (indeg[b] == 0) queue.push_back(b);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int s : succ[queue[h]]) {
        if (--indeg[s] == 0) queue.push_back(s);
      }
    }
    if (static_cast<int>(queue.size()) != k) return;
    out.emplace_back(block, queue);
  });
  return out;
}

}  // namespace detail

/// All cells of the weighted moduli space with n markings.
inline std::vector<WeightedStratum> enumerate_weighted_strata(int n, CellRule rule = CellRule::EqualitySplit) {
  if (n < 3) throw DomainError("enumerate_weighted_strata: need n >= 3");
  if (n > 8) throw DomainError("enumerate_weighted_strata: n > 8 is outside the supported range");
  std::vector<WeightedStratum> out;
  for (const auto& t : enumerate_ribbon_trees(n - 1, false)) {
    const int V = t.vertex_count();
    const int td = tree_dimension(t);
    for (const auto& [block, order] : detail::order_polytope_faces(t)) {
      const int k = static_cast<int>(order.size());
      const int bot = block[V], top = block[V + 1];
      std::vector<std::vector<int>> members(k);
      for (int v = 0; v < V; ++v) members[block[v]].push_back(v);
      WeightedStratum s;
      s.tree = t;
      s.tree_dimension = td;
      if (!members[bot].empty()) s.classes.push_back({members[bot], WeightClass::Label::Zero});
      std::vector<int> free;
      for (int b : order) {
        if (b != bot && b != top) free.push_back(b);
      }
      for (int b : free) s.classes.push_back({members[b], WeightClass::Label::Free});
      if (!members[top].empty()) s.classes.push_back({members[top], WeightClass::Label::One});
      const bool extreme = !members[bot].empty() || !members[top].empty();
      s.dimension = td + static_cast<int>(free.size());
      s.boundary = extreme || (rule == CellRule::ProductFace && V > 1);
      out.push_back(std::move(s));
    }
  }
  return out;
}

inline RibbonTree project_to_unweighted(const WeightedStratum& s) { return s.tree; }

struct WeightedReport {
  int n = 0;
  CellRule rule = CellRule::EqualitySplit;
  std::map<int, int> cells;            // dimension -> count
  std::map<int, int> boundary_cells;   // dimension -> count
  std::map<int, int> boundary_2cells_by_tree_dim;

  nlohmann::json to_json() const {
    auto conv = [](const std::map<int, int>& m) {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [k, v] : m) j[std::to_string(k)] = v;
      return j;
    };
    return {{"n", n},
            {"rule", to_string(rule)},
            {"cells_by_dimension", conv(cells)},
            {"boundary_cells_by_dimension", conv(boundary_cells)},
            {"boundary_2cells_by_tree_dimension", conv(boundary_2cells_by_tree_dim)}};
  }
};

inline WeightedReport weighted_report(int n, CellRule rule) {
  WeightedReport r;
  r.n = n;
  r.rule = rule;
  for (const auto& s : enumerate_weighted_strata(n, rule)) {
    ++r.cells[s.dimension];
    if (s.boundary) {
      ++r.boundary_cells[s.dimension];
      if (s.dimension == 2) ++r.boundary_2cells_by_tree_dim[tree_dimension(project_to_unweighted(s))];
    }
  }
  return r;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_WEIGHTED_HPP
