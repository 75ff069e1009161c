#ifndef MULTIQUILT_TREES_HPP
#define MULTIQUILT_TREES_HPP

// Rooted planar (ribbon) trees and colored rooted ribbon trees.
//
// Conventions used throughout the library:
//  * the root edge is the semi-infinite edge above the top vertex (marking 0);
//  * "rootward" means closer to the root, "leafward" the opposite;
//  * internal vertices are numbered in preorder, the top vertex is 0;
//  * interior (finite) edges are identified with the id of their lower
//    vertex, so the edge ids of a tree with V vertices are 1..V-1;
//  * T <= T' ("T refines T'") iff T' is obtained from T by contracting
//    interior edges; maximal trees are the minimal elements.

#include "multiquilt/parallel.hpp"
#include "multiquilt/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multiquilt {

/// Recursive value form of a tree, used to build and rewrite trees.
struct Shape {
  enum class Kind { Leaf, Plain, Colored };

  Kind kind = Kind::Leaf;
  int label = 0;
  std::vector<Shape> children;

  static Shape leaf(int label) { return Shape{Kind::Leaf, label, {}}; }
  static Shape plain(std::vector<Shape> children) { return Shape{Kind::Plain, 0, std::move(children)}; }
  static Shape colored(std::vector<Shape> children) {
    return Shape{Kind::Colored, 0, std::move(children)};
  }

  bool is_leaf() const { return kind == Kind::Leaf; }
};

inline nlohmann::json shape_to_json(const Shape& s) {
  if (s.is_leaf()) return s.label;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.children) arr.push_back(shape_to_json(c));
  if (s.kind == Shape::Kind::Colored) return nlohmann::json{{"c", arr}};
  return arr;
}

inline Shape shape_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Shape::leaf(j.get<int>());
  if (j.is_array()) {
    std::vector<Shape> kids;
    for (const auto& c : j) kids.push_back(shape_from_json(c));
    return Shape::plain(std::move(kids));
  }
  if (j.is_object() && j.size() == 1 && j.contains("c") && j["c"].is_array()) {
    std::vector<Shape> kids;
    for (const auto& c : j["c"]) kids.push_back(shape_from_json(c));
    return Shape::colored(std::move(kids));
  }
  throw std::invalid_argument("tree JSON: expected integer, array or {\"c\": [...]}, got " + j.dump());
}

/// A child slot of an internal vertex: either a leaf (by label) or a vertex (by id).
struct Child {
  bool is_leaf = false;
  int index = 0;
  friend bool operator==(const Child&, const Child&) = default;
};

class IllegalContraction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rooted planar tree with leaves 1..n in left-to-right order. Vertices may
/// carry a color flag; an uncolored RibbonTree simply has none set.
class RibbonTree {
 public:
  struct Vertex {
    int parent = -1;
    bool colored = false;
    std::vector<Child> children;
    int lo = 0, hi = 0;      // leaf labels spanned
    int subtree_end = 0;     // preorder ids of the subtree are [id, subtree_end)
    int depth = 0;
  };

  RibbonTree() = default;

  static RibbonTree from_shape(const Shape& s) {
    if (s.is_leaf()) throw std::invalid_argument("tree must have at least one internal vertex");
    RibbonTree t;
    int next_leaf = 1;
    t.build(s, -1, 0, next_leaf);
    t.leaf_count_ = next_leaf - 1;
    t.leaf_parent_.assign(t.leaf_count_ + 1, -1);
    for (int v = 0; v < t.vertex_count(); ++v) {
      for (const auto& c : t.vertices_[v].children) {
        if (c.is_leaf) t.leaf_parent_[c.index] = v;
      }
    }
    t.code_ = shape_to_json(s).dump();
    return t;
  }

  static RibbonTree from_json(const nlohmann::json& j) { return from_shape(shape_from_json(j)); }

  int leaf_count() const { return leaf_count_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const std::vector<Child>& children(int v) const { return vertices_.at(v).children; }
  int parent(int v) const { return vertices_.at(v).parent; }
  int leaf_parent(int leaf) const { return leaf_parent_.at(leaf); }
  int valence(int v) const { return static_cast<int>(vertices_.at(v).children.size()) + 1; }

  /// Interior edges, identified with their lower vertex.
  std::vector<int> edges() const {
    std::vector<int> out;
    for (int v = 1; v < vertex_count(); ++v) out.push_back(v);
    return out;
  }
  int edge_count() const { return std::max(0, vertex_count() - 1); }

  bool is_ancestor_or_self(int a, int b) const {
    return a <= b && b < vertices_.at(a).subtree_end;
  }
  bool contains_leaf(int v, int leaf) const {
    return vertices_.at(v).lo <= leaf && leaf <= vertices_.at(v).hi;
  }

  /// Index of the child slot of v whose subtree contains the leaf.
  int child_slot(int v, int leaf) const {
    const auto& ch = vertices_.at(v).children;
    for (int k = 0; k < static_cast<int>(ch.size()); ++k) {
      if (ch[k].is_leaf ? ch[k].index == leaf : contains_leaf(ch[k].index, leaf)) return k;
    }
    throw std::out_of_range("leaf " + std::to_string(leaf) + " not below vertex " + std::to_string(v));
  }

  /// Lowest common ancestor of two distinct leaves.
  int meet(int i, int j) const {
    int v = leaf_parent(i);
    while (!contains_leaf(v, j)) v = parent(v);
    return v;
  }

  bool is_stable() const {
    for (const auto& v : vertices_) {
      if (v.children.size() < 2) return false;
    }
    return true;
  }
  bool is_binary() const {
    for (const auto& v : vertices_) {
      if (v.children.size() != 2) return false;
    }
    return true;
  }

  Shape to_shape(int v = 0) const {
    std::vector<Shape> kids;
    for (const auto& c : vertices_.at(v).children) {
      kids.push_back(c.is_leaf ? Shape::leaf(c.index) : to_shape(c.index));
    }
    return vertices_.at(v).colored ? Shape::colored(std::move(kids)) : Shape::plain(std::move(kids));
  }

  /// Canonical code: compact JSON of the nested encoding.
  const std::string& code() const { return code_; }
  nlohmann::json to_json() const { return nlohmann::json::parse(code_); }

  friend bool operator==(const RibbonTree& a, const RibbonTree& b) { return a.code_ == b.code_; }
  friend bool operator<(const RibbonTree& a, const RibbonTree& b) { return a.code_ < b.code_; }

 private:
  int build(const Shape& s, int parent, int depth, int& next_leaf) {
    const int id = vertex_count();
    vertices_.push_back(Vertex{});
    vertices_[id].parent = parent;
    vertices_[id].colored = s.kind == Shape::Kind::Colored;
    vertices_[id].depth = depth;
    vertices_[id].lo = next_leaf;
    if (s.children.empty()) throw std::invalid_argument("internal vertex without children");
    for (const auto& c : s.children) {
      if (c.is_leaf()) {
        if (c.label != next_leaf) {
          throw std::invalid_argument("leaf labels must be 1..n in planar order; found " +
                                      std::to_string(c.label) + " where " +
                                      std::to_string(next_leaf) + " was expected");
        }
        vertices_[id].children.push_back(Child{true, next_leaf});
        ++next_leaf;
      } else {
        const int cid = build(c, id, depth + 1, next_leaf);
        vertices_[id].children.push_back(Child{false, cid});
      }
    }
    vertices_[id].hi = next_leaf - 1;
    vertices_[id].subtree_end = vertex_count();
    return id;
  }

  std::vector<Vertex> vertices_;
  std::vector<int> leaf_parent_;
  int leaf_count_ = 0;
  std::string code_;

  friend class ColoredTree;
};

/// Which side of the colored level a vertex lies on.
enum class Side { Rootward, Colored, Leafward };

/// Colored rooted ribbon tree: every leaf-to-root path crosses exactly one
/// colored vertex.
class ColoredTree {
 public:
  ColoredTree() = default;

  /// Builds and checks the one-colored-vertex-per-path axiom; stability is
  /// a separate predicate.
  static ColoredTree from_shape(const Shape& s) {
    ColoredTree t;
    t.base_ = RibbonTree::from_shape(s);
    if (auto why = t.axiom_violation()) throw std::invalid_argument("colored tree: " + *why);
    t.compute_sides();
    return t;
  }
  static ColoredTree from_json(const nlohmann::json& j) { return from_shape(shape_from_json(j)); }
  static ColoredTree parse(const std::string& text) { return from_json(nlohmann::json::parse(text)); }

  const RibbonTree& base() const { return base_; }
  int leaf_count() const { return base_.leaf_count(); }
  int vertex_count() const { return base_.vertex_count(); }
  const std::vector<Child>& children(int v) const { return base_.children(v); }
  int parent(int v) const { return base_.parent(v); }
  int valence(int v) const { return base_.valence(v); }
  int leaf_parent(int leaf) const { return base_.leaf_parent(leaf); }
  std::vector<int> edges() const { return base_.edges(); }
  int edge_count() const { return base_.edge_count(); }
  int meet(int i, int j) const { return base_.meet(i, j); }
  int child_slot(int v, int leaf) const { return base_.child_slot(v, leaf); }
  bool is_ancestor_or_self(int a, int b) const { return base_.is_ancestor_or_self(a, b); }
  std::pair<int, int> leaf_range(int v) const { return {base_.vertex(v).lo, base_.vertex(v).hi}; }
  bool is_colored(int v) const { return base_.vertex(v).colored; }
  Side side(int v) const { return sides_.at(v); }
  Shape to_shape(int v = 0) const { return base_.to_shape(v); }
  const std::string& code() const { return base_.code(); }
  nlohmann::json to_json() const { return base_.to_json(); }

  std::vector<int> colored_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v) {
      if (is_colored(v)) out.push_back(v);
    }
    return out;
  }

  /// The colored vertex on the path from v to the root (v itself if colored).
  std::optional<int> colored_ancestor(int v) const {
    for (int u = v; u >= 0; u = parent(u)) {
      if (is_colored(u)) return u;
    }
    return std::nullopt;
  }

  /// Colored vertices need valence >= 2, uncolored ones valence >= 3.
  bool is_stable() const { return !stability_violation().has_value(); }

  std::optional<std::string> stability_violation() const {
    for (int v = 0; v < vertex_count(); ++v) {
      const int need = is_colored(v) ? 2 : 3;
      if (valence(v) < need) {
        return "vertex " + std::to_string(v) + (is_colored(v) ? " (colored)" : " (uncolored)") +
               " has valence " + std::to_string(valence(v)) + " < " + std::to_string(need);
      }
    }
    return std::nullopt;
  }

  /// Colored vertices bivalent, uncolored vertices trivalent.
  bool is_maximal() const {
    for (int v = 0; v < vertex_count(); ++v) {
      if (valence(v) != (is_colored(v) ? 2 : 3)) return false;
    }
    return true;
  }

  friend bool operator==(const ColoredTree& a, const ColoredTree& b) { return a.code() == b.code(); }
  friend bool operator<(const ColoredTree& a, const ColoredTree& b) { return a.code() < b.code(); }

 private:
  std::optional<std::string> axiom_violation() const {
    for (int leaf = 1; leaf <= base_.leaf_count(); ++leaf) {
      int count = 0;
      for (int v = base_.leaf_parent(leaf); v >= 0; v = base_.parent(v)) {
        if (base_.vertex(v).colored) ++count;
      }
      if (count != 1) {
        return "path from leaf " + std::to_string(leaf) + " to the root crosses " +
               std::to_string(count) + " colored vertices";
      }
    }
    return std::nullopt;
  }

  void compute_sides() {
    sides_.assign(vertex_count(), Side::Rootward);
    for (int v = 0; v < vertex_count(); ++v) {
      if (is_colored(v)) {
        sides_[v] = Side::Colored;
      } else if (colored_ancestor(v)) {
        sides_[v] = Side::Leafward;
      }
    }
  }

  RibbonTree base_;
  std::vector<Side> sides_;
};

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// All ways to cut leaves [a, b] into consecutive nonempty blocks, with the
/// number of blocks in [min_blocks, max_blocks].
inline std::vector<std::vector<std::pair<int, int>>> compositions(int a, int b, int min_blocks,
                                                                   int max_blocks) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (start > b) {
      const int k = static_cast<int>(cur.size());
      if (k >= min_blocks && k <= max_blocks) out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_blocks) return;
    for (int end = start; end <= b; ++end) {
      cur.emplace_back(start, end);
      self(self, end + 1);
      cur.pop_back();
    }
  };
  rec(rec, a);
  return out;
}

template <typename Options>
std::vector<std::vector<Shape>> cartesian(const std::vector<const Options*>& lists) {
  std::vector<std::vector<Shape>> out{{}};
  for (const auto* list : lists) {
    std::vector<std::vector<Shape>> next;
    for (const auto& prefix : out) {
      for (const auto& s : *list) {
        auto p = prefix;
        p.push_back(s);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

class ShapeEnumerator {
 public:
  explicit ShapeEnumerator(bool only_maximal) : maximal_(only_maximal) {}

  /// Stable uncolored planar trees (or single leaf) on leaves [a, b].
  const std::vector<Shape>& uncolored(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = plain_.find(key); it != plain_.end()) return it->second;
    std::vector<Shape> out;
    if (a == b) {
      out.push_back(Shape::leaf(a));
    } else {
      for (const auto& blocks : compositions(a, b, 2, maximal_ ? 2 : b - a + 1)) {
        out_products(blocks, out, Shape::Kind::Plain, [this](int x, int y) -> const std::vector<Shape>& {
          return uncolored(x, y);
        });
      }
    }
    return plain_[key] = std::move(out);
  }

  /// Colored vertex at the top of leaves [a, b] with uncolored subtrees below.
  const std::vector<Shape>& colored_top(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = colored_.find(key); it != colored_.end()) return it->second;
    std::vector<Shape> out;
    for (const auto& blocks : compositions(a, b, 1, maximal_ ? 1 : b - a + 1)) {
      out_products(blocks, out, Shape::Kind::Colored, [this](int x, int y) -> const std::vector<Shape>& {
        return uncolored(x, y);
      });
    }
    return colored_[key] = std::move(out);
  }

  /// Colored trees on leaves [a, b]: a colored top, or an uncolored vertex
  /// whose children are again colored trees.
  const std::vector<Shape>& rooted(int a, int b) {
    auto key = std::make_pair(a, b);
    if (auto it = rooted_.find(key); it != rooted_.end()) return it->second;
    std::vector<Shape> out = colored_top(a, b);
    if (a < b) {
      for (const auto& blocks : compositions(a, b, 2, maximal_ ? 2 : b - a + 1)) {
        out_products(blocks, out, Shape::Kind::Plain, [this](int x, int y) -> const std::vector<Shape>& {
          return rooted(x, y);
        });
      }
    }
    return rooted_[key] = std::move(out);
  }

 private:
  template <typename Sub>
  void out_products(const std::vector<std::pair<int, int>>& blocks, std::vector<Shape>& out,
                    Shape::Kind kind, Sub&& sub) {
    std::vector<std::vector<Shape>> lists;
    lists.reserve(blocks.size());
    for (const auto& [x, y] : blocks) lists.push_back(sub(x, y));
    std::vector<const std::vector<Shape>*> ptrs;
    for (const auto& l : lists) ptrs.push_back(&l);
    for (auto& kids : cartesian<std::vector<Shape>>(ptrs)) {
      out.push_back(Shape{kind, 0, std::move(kids)});
    }
  }

  bool maximal_;
  std::map<std::pair<int, int>, std::vector<Shape>> plain_, colored_, rooted_;
};

}  // namespace detail

/// All stable rooted ribbon trees with n leaves (binary ones only if
/// only_maximal), sorted by canonical code.
inline std::vector<RibbonTree> enumerate_ribbon_trees(int n, bool only_maximal) {
  if (n < 2) throw DomainError("enumerate_ribbon_trees: need n >= 2");
  detail::ShapeEnumerator gen(only_maximal);
  std::vector<RibbonTree> out;
  for (const auto& s : gen.uncolored(1, n)) out.push_back(RibbonTree::from_shape(s));
  std::sort(out.begin(), out.end());
  return out;
}

/// All stable colored trees with n leaves (maximal ones only if
/// only_maximal), sorted by canonical code.
inline std::vector<ColoredTree> enumerate_colored_trees(int n, bool only_maximal) {
  if (n < 2) throw DomainError("enumerate_colored_trees: need n >= 2");
  detail::ShapeEnumerator gen(only_maximal);
  std::vector<ColoredTree> out;
  for (const auto& s : gen.rooted(1, n)) out.push_back(ColoredTree::from_shape(s));
  std::sort(out.begin(), out.end());
  return out;
}

/// The colored corolla: one colored vertex carrying all n leaves.
inline ColoredTree colored_corolla(int n) {
  std::vector<Shape> kids;
  for (int i = 1; i <= n; ++i) kids.push_back(Shape::leaf(i));
  return ColoredTree::from_shape(Shape::colored(std::move(kids)));
}

// ---------------------------------------------------------------------------
// Contraction

struct TreeMorphism {
  ColoredTree source;
  ColoredTree target;
  std::vector<int> collapsed;   // sorted edge ids of source
  std::vector<int> vertex_map;  // source vertex id -> target vertex id
};

namespace detail {

inline void splice(const ColoredTree& t, int v, const std::vector<char>& collapse, Shape& into) {
  for (const auto& c : t.children(v)) {
    if (c.is_leaf) {
      into.children.push_back(Shape::leaf(c.index));
    } else if (collapse[c.index]) {
      if (t.is_colored(c.index)) into.kind = Shape::Kind::Colored;
      splice(t, c.index, collapse, into);
    } else {
      Shape sub{t.is_colored(c.index) ? Shape::Kind::Colored : Shape::Kind::Plain, 0, {}};
      splice(t, c.index, collapse, sub);
      into.children.push_back(std::move(sub));
    }
  }
}

}  // namespace detail

/// Collapses the given interior edges. Throws IllegalContraction if the
/// quotient violates the one-colored-per-path axiom or stability.
inline TreeMorphism contract(const ColoredTree& t, const std::vector<int>& edges) {
  std::vector<char> collapse(t.vertex_count(), 0);
  for (int e : edges) {
    if (e <= 0 || e >= t.vertex_count()) {
      throw std::invalid_argument("contract: " + std::to_string(e) + " is not an interior edge");
    }
    collapse[e] = 1;
  }
  Shape top{t.is_colored(0) ? Shape::Kind::Colored : Shape::Kind::Plain, 0, {}};
  detail::splice(t, 0, collapse, top);

  ColoredTree quotient;
  try {
    quotient = ColoredTree::from_shape(top);
  } catch (const std::invalid_argument& e) {
    throw IllegalContraction(std::string("illegal contraction: ") + e.what());
  }
  if (auto why = quotient.stability_violation()) {
    throw IllegalContraction("illegal contraction: quotient unstable, " + *why);
  }

  TreeMorphism m;
  m.source = t;
  m.target = std::move(quotient);
  m.vertex_map.assign(t.vertex_count(), 0);
  int next = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v > 0 && collapse[v]) {
      m.vertex_map[v] = m.vertex_map[t.parent(v)];
    } else {
      m.vertex_map[v] = next++;
    }
    if (v > 0 && collapse[v]) m.collapsed.push_back(v);
  }
  return m;
}

/// Whether collapsing `edges` gives a legal stable colored tree.
inline std::optional<ColoredTree> try_contract(const ColoredTree& t, const std::vector<int>& edges) {
  try {
    return contract(t, edges).target;
  } catch (const IllegalContraction&) {
    return std::nullopt;
  }
}

/// Every legal contraction of t (including t itself), keyed by canonical code.
inline std::map<std::string, ColoredTree> all_contractions(const ColoredTree& t) {
  std::map<std::string, ColoredTree> out;
  const auto edges = t.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw DomainError("all_contractions: too many edges");
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> sel;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) sel.push_back(edges[k]);
    }
    if (auto q = try_contract(t, sel)) out.emplace(q->code(), *q);
  }
  return out;
}

/// The refinement order on stable colored trees with n leaves.
struct FacePoset {
  std::vector<ColoredTree> elements;               // canonical order
  std::vector<std::vector<char>> leq;              // leq[i][j]: elements[i] <= elements[j]
  std::vector<std::pair<int, int>> covers;         // (i, j): j covers i

  int index_of(const std::string& code) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), code,
                               [](const ColoredTree& t, const std::string& c) { return t.code() < c; });
    if (it == elements.end() || it->code() != code) return -1;
    return static_cast<int>(it - elements.begin());
  }
};

inline FacePoset face_poset(int n) {
  FacePoset p;
  p.elements = enumerate_colored_trees(n, false);
  const int size = static_cast<int>(p.elements.size());
  p.leq.assign(size, std::vector<char>(size, 0));
  parallel_for(size, [&](std::size_t i) {
    for (const auto& [code, q] : all_contractions(p.elements[i])) {
      const int j = p.index_of(code);
      if (j < 0) throw std::logic_error("contraction produced a tree missing from the enumeration");
      p.leq[i][j] = 1;
    }
  });
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < size && cover; ++k) {
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) cover = false;
      }
      if (cover) p.covers.emplace_back(i, j);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Basic moves

struct BasicMove {
  enum class Kind { Flop, Fusion, Splitting };
  Kind kind;
  int locus;  // edge id for a flop, uncolored vertex id for fusion/splitting
  ColoredTree result;
};

inline const char* to_string(BasicMove::Kind k) {
  switch (k) {
    case BasicMove::Kind::Flop: return "flop";
    case BasicMove::Kind::Fusion: return "fusion";
    case BasicMove::Kind::Splitting: return "splitting";
  }
  return "?";
}

namespace detail {

/// Rewrites the subtree rooted at vertex `target` of t with `f`.
template <typename F>
Shape rewrite_at(const ColoredTree& t, int v, int target, F&& f) {
  if (v == target) return f(t.to_shape(v));
  Shape s{t.is_colored(v) ? Shape::Kind::Colored : Shape::Kind::Plain, 0, {}};
  for (const auto& c : t.children(v)) {
    s.children.push_back(c.is_leaf ? Shape::leaf(c.index) : rewrite_at(t, c.index, target, f));
  }
  return s;
}

}  // namespace detail

inline std::vector<BasicMove> basic_moves(const ColoredTree& t) {
  if (!t.is_maximal()) throw DomainError("basic_moves: tree is not maximal");
  std::vector<BasicMove> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_colored(v)) continue;
    const auto& ch = t.children(v);
    // Flop of the edge above v, when its parent is uncolored too.
    if (v > 0 && !t.is_colored(t.parent(v))) {
      const int p = t.parent(v);
      const bool left = !t.children(p)[0].is_leaf && t.children(p)[0].index == v;
      Shape flopped = detail::rewrite_at(t, 0, p, [left](Shape s) {
        if (left) {
          Shape inner = std::move(s.children[0]);
          Shape rest = std::move(s.children[1]);
          return Shape::plain({std::move(inner.children[0]),
                               Shape::plain({std::move(inner.children[1]), std::move(rest)})});
        }
        Shape first = std::move(s.children[0]);
        Shape inner = std::move(s.children[1]);
        return Shape::plain({Shape::plain({std::move(first), std::move(inner.children[0])}),
                             std::move(inner.children[1])});
      });
      out.push_back({BasicMove::Kind::Flop, v, ColoredTree::from_shape(flopped)});
    }
    // Fusion: both children of v are (bivalent) colored vertices.
    const bool both_colored = !ch[0].is_leaf && !ch[1].is_leaf && t.is_colored(ch[0].index) &&
                              t.is_colored(ch[1].index);
    if (both_colored) {
      Shape fused = detail::rewrite_at(t, 0, v, [](Shape s) {
        return Shape::colored(
            {Shape::plain({std::move(s.children[0].children[0]), std::move(s.children[1].children[0])})});
      });
      out.push_back({BasicMove::Kind::Fusion, v, ColoredTree::from_shape(fused)});
    }
    // Splitting: v hangs directly below a colored vertex.
    if (v > 0 && t.is_colored(t.parent(v))) {
      Shape split = detail::rewrite_at(t, 0, t.parent(v), [](Shape s) {
        Shape inner = std::move(s.children[0]);
        return Shape::plain({Shape::colored({std::move(inner.children[0])}),
                             Shape::colored({std::move(inner.children[1])})});
      });
      out.push_back({BasicMove::Kind::Splitting, v, ColoredTree::from_shape(split)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Facet families

struct FacetDescriptor {
  enum class Family { Composition, Parenthesization };
  Family family;
  std::vector<int> parts;  // composition (i_1, ..., i_j), j >= 2
  int e = 0;               // parenthesized block size
  int position = 0;        // first leaf of the block
  ColoredTree tree;
};

inline std::vector<FacetDescriptor> facet_types(int n) {
  if (n < 2) throw DomainError("facet_types: need n >= 2");
  std::vector<FacetDescriptor> out;
  for (const auto& blocks : detail::compositions(1, n, 2, n)) {
    FacetDescriptor d{FacetDescriptor::Family::Composition, {}, 0, 0, {}};
    std::vector<Shape> kids;
    for (const auto& [a, b] : blocks) {
      d.parts.push_back(b - a + 1);
      std::vector<Shape> leaves;
      for (int i = a; i <= b; ++i) leaves.push_back(Shape::leaf(i));
      kids.push_back(Shape::colored(std::move(leaves)));
    }
    d.tree = ColoredTree::from_shape(Shape::plain(std::move(kids)));
    out.push_back(std::move(d));
  }
  for (int e = 2; e <= n; ++e) {
    for (int pos = 1; pos <= n - e + 1; ++pos) {
      std::vector<Shape> kids;
      for (int i = 1; i < pos; ++i) kids.push_back(Shape::leaf(i));
      std::vector<Shape> block;
      for (int i = pos; i < pos + e; ++i) block.push_back(Shape::leaf(i));
      kids.push_back(Shape::plain(std::move(block)));
      for (int i = pos + e; i <= n; ++i) kids.push_back(Shape::leaf(i));
      out.push_back({FacetDescriptor::Family::Parenthesization, {}, e, pos,
                     ColoredTree::from_shape(Shape::colored(std::move(kids)))});
    }
  }
  return out;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_TREES_HPP
