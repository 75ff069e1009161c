#ifndef MULTIQUILT_CHARTS_HPP
#define MULTIQUILT_CHARTS_HPP

// Cross-ratios, the canonical embedding and its inverse, simple-ratio charts
// and balanced labellings.

#include "multiquilt/configurations.hpp"
#include "multiquilt/random.hpp"
#include "multiquilt/rational.hpp"
#include "multiquilt/trees.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multiquilt {

class InconsistentCrossRatios : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Cross-ratios

/// (w2-w3)(w4-w1) / ((w1-w2)(w3-w4)), extended to at most two coincident points.
inline ExtRat cross_ratio4(const ExtRat& w1, const ExtRat& w2, const ExtRat& w3, const ExtRat& w4) {
  const bool e12 = w1 == w2, e13 = w1 == w3, e14 = w1 == w4;
  const bool e23 = w2 == w3, e24 = w2 == w4, e34 = w3 == w4;
  if ((e12 && e13) || (e12 && e14) || (e13 && e14) || (e23 && e24)) {
    throw DomainError("cross_ratio4: three or more coincident points");
  }
  if (e23 || e14) return ExtRat(0);
  if (e13 || e24) return ExtRat(1);
  if (e12 || e34) return ExtRat::infinity();
  if (w1.is_infinite()) return (w3 - w2) / (w3 - w4);
  if (w2.is_infinite()) return -(w4 - w1) / (w3 - w4);
  if (w3.is_infinite()) return -(w4 - w1) / (w1 - w2);
  if (w4.is_infinite()) return -(w2 - w3) / (w1 - w2);
  return ((w2 - w3) * (w4 - w1)) / ((w1 - w2) * (w3 - w4));
}

namespace detail {

/// Direction of marking i (0 = root) at component v, as a child slot, or -1
/// for the root direction.
inline int direction(const ColoredTree& t, int v, int i) {
  if (i == 0) return -1;
  const auto [lo, hi] = t.leaf_range(v);
  if (i < lo || i > hi) return -1;
  return t.child_slot(v, i);
}

inline ExtRat slot_point(const NodalConfiguration& s, int v, int slot) {
  if (slot < 0) return ExtRat::infinity();
  return ExtRat(s.positions(v)[slot]);
}

}  // namespace detail

/// rho_{ijkl} for distinct markings in 0..n, in the given order.
inline ExtRat rho_quad(const NodalConfiguration& s, int i, int j, int k, int l) {
  const int n = s.type.leaf_count();
  const std::array<int, 4> idx{i, j, k, l};
  for (int a = 0; a < 4; ++a) {
    if (idx[a] < 0 || idx[a] > n) throw DomainError("rho_quad: index out of range");
    for (int b = 0; b < a; ++b) {
      if (idx[a] == idx[b]) throw DomainError("rho_quad: indices must be distinct");
    }
  }
  const auto& t = s.type;
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::array<int, 4> d{};
    for (int a = 0; a < 4; ++a) d[a] = detail::direction(t, v, idx[a]);
    const std::set<int> distinct(d.begin(), d.end());
    if (distinct.size() >= 3) {
      return cross_ratio4(detail::slot_point(s, v, d[0]), detail::slot_point(s, v, d[1]),
                          detail::slot_point(s, v, d[2]), detail::slot_point(s, v, d[3]));
    }
  }
  throw std::logic_error("rho_quad: no component separates the four markings");
}

/// rho_{ij} = y / (z_j - z_i) on the component where i, j, 0 separate; 0 if
/// that component is rootward of the colored level, inf if leafward.
inline ExtRat rho_pair(const NodalConfiguration& s, int i, int j) {
  const int n = s.type.leaf_count();
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw DomainError("rho_pair: bad indices");
  const auto& t = s.type;
  const int a = std::min(i, j), b = std::max(i, j);
  const int v = t.meet(a, b);
  ExtRat r;
  switch (t.side(v)) {
    case Side::Rootward: r = ExtRat(0); break;
    case Side::Leafward: r = ExtRat::infinity(); break;
    case Side::Colored: {
      const auto& p = s.positions(v);
      r = ExtRat(Rational(1 / (p[t.child_slot(v, b)] - p[t.child_slot(v, a)])));
      break;
    }
  }
  return i < j ? r : -r;
}

/// All rho_{ijkl} (i<j<k<l in 0..n) and rho_{ij} (i<j in 1..n).
struct CrossRatioVector {
  int n = 0;
  std::map<std::array<int, 4>, ExtRat> quad;
  std::map<std::pair<int, int>, ExtRat> pair;

  const ExtRat& q(int i, int j, int k, int l) const {
    auto it = quad.find({i, j, k, l});
    if (it == quad.end()) {
      throw InconsistentCrossRatios("missing quad entry " + std::to_string(i) + "," + std::to_string(j) +
                                    "," + std::to_string(k) + "," + std::to_string(l));
    }
    return it->second;
  }
  const ExtRat& p(int i, int j) const {
    auto it = pair.find({i, j});
    if (it == pair.end()) {
      throw InconsistentCrossRatios("missing pair entry " + std::to_string(i) + "," + std::to_string(j));
    }
    return it->second;
  }

  friend bool operator==(const CrossRatioVector&, const CrossRatioVector&) = default;

  nlohmann::json to_json() const {
    nlohmann::json jq = nlohmann::json::object(), jp = nlohmann::json::object();
    for (const auto& [k, v] : quad) {
      jq[std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
         std::to_string(k[3])] = v.str();
    }
    for (const auto& [k, v] : pair) jp[std::to_string(k.first) + "," + std::to_string(k.second)] = v.str();
    return {{"n", n}, {"quad", jq}, {"pair", jp}};
  }

  static CrossRatioVector from_json(const nlohmann::json& j) {
    auto split = [](const std::string& key) {
      std::vector<int> out;
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
      return out;
    };
    CrossRatioVector v;
    int max_index = 0;
    for (const auto& [key, val] : j.at("pair").items()) {
      auto ix = split(key);
      if (ix.size() != 2 || ix[0] >= ix[1]) throw std::invalid_argument("bad pair key '" + key + "'");
      v.pair[{ix[0], ix[1]}] = ExtRat::parse(val.get<std::string>());
      max_index = std::max(max_index, ix[1]);
    }
    for (const auto& [key, val] : j.at("quad").items()) {
      auto ix = split(key);
      if (ix.size() != 4) throw std::invalid_argument("bad quad key '" + key + "'");
      v.quad[{ix[0], ix[1], ix[2], ix[3]}] = ExtRat::parse(val.get<std::string>());
      max_index = std::max(max_index, ix[3]);
    }
    v.n = j.contains("n") ? j.at("n").get<int>() : max_index;
    return v;
  }
};

inline CrossRatioVector embed(const NodalConfiguration& s) {
  s.validate();
  CrossRatioVector v;
  const int n = s.type.leaf_count();
  v.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) v.quad[{i, j, k, l}] = rho_quad(s, i, j, k, l);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v.pair[{i, j}] = rho_pair(s, i, j);
  return v;
}

/// Embedding of an interior configuration given by raw marking positions z
/// (z_0 at infinity) and seam height y, in any affine gauge.
inline CrossRatioVector embed_raw(const std::vector<Rational>& z, const Rational& y) {
  const int n = static_cast<int>(z.size());
  auto w = [&](int i) { return i == 0 ? ExtRat::infinity() : ExtRat(z[i - 1]); };
  CrossRatioVector v;
  v.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) v.quad[{i, j, k, l}] = cross_ratio4(w(i), w(j), w(k), w(l));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v.pair[{i, j}] = ExtRat(Rational(y / (z[j - 1] - z[i - 1])));
  return v;
}

namespace detail {

/// Whether the stored (sorted) quad value shows {a, b} | {c, d} split.
inline bool shows_split(const CrossRatioVector& v, int a, int b, int c, int d) {
  std::array<int, 4> s{a, b, c, d};
  std::sort(s.begin(), s.end());
  int pa = 0, pb = 0;
  for (int k = 0; k < 4; ++k) {
    if (s[k] == a) pa = k;
    if (s[k] == b) pb = k;
  }
  if (pa > pb) std::swap(pa, pb);
  const ExtRat& val = v.q(s[0], s[1], s[2], s[3]);
  if ((pa == 0 && pb == 1) || (pa == 2 && pb == 3)) return val.is_infinite();
  if ((pa == 1 && pb == 2) || (pa == 0 && pb == 3)) return val.is_zero();
  return val == ExtRat(1);
}

enum class Level { Zero, Finite, Infinite };

struct Decoder {
  const CrossRatioVector& v;
  RibbonTree plain;                          // underlying uncolored tree
  std::vector<std::vector<Rational>> pos;    // uncolored gauge, per plain vertex
  std::vector<Level> level;
  std::vector<Rational> height;              // rho_{r1 r2} for Finite vertices
  std::vector<std::vector<Rational>> out;    // positions in output preorder

  int rep(int u, int slot) const {
    const Child& c = plain.children(u)[slot];
    return c.is_leaf ? c.index : plain.vertex(c.index).lo;
  }

  Shape emit(int u, bool colored_above) {
    const std::string where = "component spanning leaves " + std::to_string(plain.vertex(u).lo) + ".." +
                              std::to_string(plain.vertex(u).hi);
    const int r1 = rep(u, 0), r2 = rep(u, 1);
    const std::string pname = "rho_{" + std::to_string(r1) + "," + std::to_string(r2) + "}";
    switch (level[u]) {
      case Level::Zero: {
        if (colored_above) {
          throw InconsistentCrossRatios("monotonicity violated: " + pname + " = 0 at " + where +
                                        " although a rootward component is already quilted");
        }
        out.push_back(pos[u]);
        Shape s = Shape::plain({});
        for (const auto& c : plain.children(u)) {
          if (c.is_leaf) {
            out.push_back({Rational(0)});
            s.children.push_back(Shape::colored({Shape::leaf(c.index)}));
          } else if (level[c.index] == Level::Infinite) {
            out.push_back({Rational(0)});
            s.children.push_back(Shape::colored({emit(c.index, true)}));
          } else {
            s.children.push_back(emit(c.index, false));
          }
        }
        return s;
      }
      case Level::Finite: {
        if (colored_above) {
          throw InconsistentCrossRatios("monotonicity violated: " + pname + " finite at " + where +
                                        " below another quilted component");
        }
        std::vector<Rational> p = pos[u];
        for (auto& q : p) q /= height[u];
        out.push_back(std::move(p));
        Shape s = Shape::colored({});
        for (const auto& c : plain.children(u)) {
          if (c.is_leaf) {
            s.children.push_back(Shape::leaf(c.index));
          } else {
            s.children.push_back(emit(c.index, true));
          }
        }
        return s;
      }
      case Level::Infinite: {
        if (!colored_above) {
          throw InconsistentCrossRatios("monotonicity violated: " + pname + " = inf at " + where +
                                        " with no quilted component rootward of it");
        }
        out.push_back(pos[u]);
        Shape s = Shape::plain({});
        for (const auto& c : plain.children(u)) {
          s.children.push_back(c.is_leaf ? Shape::leaf(c.index) : emit(c.index, true));
        }
        return s;
      }
    }
    return {};
  }
};

}  // namespace detail

/// Inverse of embed on the ordered rational locus.
inline NodalConfiguration decode(const CrossRatioVector& v) {
  const int n = v.n;
  if (n < 2) throw DomainError("decode: need n >= 2");

  // (1) leaf clusters from the quad entries.
  std::vector<std::pair<int, int>> clusters;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (b - a + 1 >= n) continue;
      std::vector<int> outside{0};
      for (int k = 1; k <= n; ++k) {
        if (k < a || k > b) outside.push_back(k);
      }
      bool ok = true;
      for (int i = a; i <= b && ok; ++i)
        for (int j = i + 1; j <= b && ok; ++j)
          for (std::size_t k = 0; k < outside.size() && ok; ++k)
            for (std::size_t l = k + 1; l < outside.size() && ok; ++l)
              ok = detail::shows_split(v, i, j, outside[k], outside[l]);
      if (ok) clusters.emplace_back(a, b);
    }
  }
  for (const auto& [a, b] : clusters) {
    for (const auto& [c, d] : clusters) {
      if (a < c && c <= b && b < d) {
        throw InconsistentCrossRatios("quad entries do not describe a tree: clusters " + std::to_string(a) +
                                      ".." + std::to_string(b) + " and " + std::to_string(c) + ".." +
                                      std::to_string(d) + " overlap");
      }
    }
  }

  // (2) the uncolored tree of the laminar family.
  auto build = [&](auto&& self, int a, int b) -> Shape {
    Shape s = Shape::plain({});
    int i = a;
    while (i <= b) {
      int best = i;
      for (const auto& [c, d] : clusters) {
        if (c == i && d <= b && !(c == a && d == b) && d > best) best = d;
      }
      s.children.push_back(best == i ? Shape::leaf(i) : self(self, i, best));
      i = best + 1;
    }
    return s;
  };
  detail::Decoder dec{v, RibbonTree::from_shape(build(build, 1, n)), {}, {}, {}, {}};
  const auto& U = dec.plain;

  // (3) component positions and (4) levels.
  dec.pos.resize(U.vertex_count());
  dec.level.resize(U.vertex_count());
  dec.height.resize(U.vertex_count());
  for (int u = 0; u < U.vertex_count(); ++u) {
    const int r1 = dec.rep(u, 0), r2 = dec.rep(u, 1);
    auto& p = dec.pos[u];
    p = {Rational(0), Rational(1)};
    for (int m = 2; m < static_cast<int>(U.children(u).size()); ++m) {
      const int rm = dec.rep(u, m);
      const ExtRat& r = v.q(0, r1, r2, rm);
      if (r.is_infinite() || r.is_zero() || r == ExtRat(1)) {
        throw InconsistentCrossRatios("rho_{0," + std::to_string(r1) + "," + std::to_string(r2) + "," +
                                      std::to_string(rm) + "} = " + r.str() +
                                      " is degenerate on a component where the markings are distinct");
      }
      p.push_back(Rational(1 - 1 / r.value()));
    }
    const ExtRat& h = v.p(r1, r2);
    if (h.is_zero()) {
      dec.level[u] = detail::Level::Zero;
    } else if (h.is_infinite()) {
      dec.level[u] = detail::Level::Infinite;
    } else {
      dec.level[u] = detail::Level::Finite;
      dec.height[u] = h.value();
    }
  }

  // (5) colored vertices, (6) rescaling, done while emitting.
  Shape top;
  if (dec.level[0] == detail::Level::Infinite) {
    dec.out.push_back({Rational(0)});
    top = Shape::colored({dec.emit(0, true)});
  } else {
    top = dec.emit(0, false);
  }

  NodalConfiguration s;
  try {
    s.type = ColoredTree::from_shape(top);
  } catch (const std::invalid_argument& e) {
    throw InconsistentCrossRatios(std::string("decoded type is not a colored tree: ") + e.what());
  }
  for (int w = 0; w < static_cast<int>(dec.out.size()); ++w) s.components[w] = dec.out[w];
  try {
    s.validate();
  } catch (const ValidationError& e) {
    throw InconsistentCrossRatios(std::string("decoded configuration is invalid: ") + e.what());
  }

  // (7) every remaining entry must agree with the reconstruction.
  const CrossRatioVector back = embed(s);
  for (const auto& [k, val] : v.pair) {
    const ExtRat& got = back.p(k.first, k.second);
    if (!(got == val)) {
      throw InconsistentCrossRatios("relation violated at rho_{" + std::to_string(k.first) + "," +
                                    std::to_string(k.second) + "}: given " + val.str() +
                                    ", forced to " + got.str() + " by the other coordinates");
    }
  }
  for (const auto& [k, val] : v.quad) {
    const ExtRat& got = back.q(k[0], k[1], k[2], k[3]);
    if (!(got == val)) {
      throw InconsistentCrossRatios("relation violated at rho_{" + std::to_string(k[0]) + "," +
                                    std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
                                    std::to_string(k[3]) + "}: given " + val.str() + ", forced to " +
                                    got.str() + " by the other coordinates");
    }
  }
  if (back.quad.size() != v.quad.size() || back.pair.size() != v.pair.size()) {
    throw InconsistentCrossRatios("cross-ratio vector has missing or extra entries");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Balanced labellings

struct BalancedLabelling {
  ColoredTree tree;
  std::map<int, Rational> labels;  // interior edge id -> label

  friend bool operator==(const BalancedLabelling&, const BalancedLabelling&) = default;

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, q] : labels) j[std::to_string(e)] = q.str();
    return {{"tree", tree.to_json()}, {"labels", j}};
  }
};

namespace detail {

/// Product of labels on the downward path from `top` to `bottom`.
inline Rational path_product(const BalancedLabelling& b, int top, int bottom) {
  Rational prod = 1;
  for (int u = bottom; u != top; u = b.tree.parent(u)) prod *= b.labels.at(u);
  return prod;
}

}  // namespace detail

/// Reason the labelling is not a point of X(T), or nullopt.
inline std::optional<std::string> labelling_violation(const BalancedLabelling& b) {
  const auto& t = b.tree;
  for (int e : t.edges()) {
    auto it = b.labels.find(e);
    if (it == b.labels.end()) return "edge " + std::to_string(e) + " has no label";
    if (it->second < 0) return "edge " + std::to_string(e) + " has a negative label";
  }
  if (b.labels.size() != static_cast<std::size_t>(t.edge_count())) return "labels on non-edges";
  for (int v0 = 0; v0 < t.vertex_count(); ++v0) {
    if (t.side(v0) != Side::Rootward) continue;
    std::optional<Rational> common;
    int first = -1;
    for (int c : t.colored_vertices()) {
      if (!t.is_ancestor_or_self(v0, c)) continue;
      const Rational p = detail::path_product(b, v0, c);
      if (!common) {
        common = p;
        first = c;
      } else if (*common != p) {
        return "unbalanced at vertex " + std::to_string(v0) + ": path products to colored vertices " +
               std::to_string(first) + " and " + std::to_string(c) + " differ";
      }
    }
  }
  std::vector<int> nonzero;
  for (const auto& [e, q] : b.labels) {
    if (q != 0) nonzero.push_back(e);
  }
  try {
    contract(t, nonzero);
  } catch (const IllegalContraction& e) {
    return std::string("zero set is not a legal edge set: ") + e.what();
  }
  return std::nullopt;
}

inline bool is_balanced(const BalancedLabelling& b) { return !labelling_violation(b).has_value(); }

/// The morphism t -> u if u is a contraction of t.
inline std::optional<TreeMorphism> find_morphism(const ColoredTree& t, const ColoredTree& u) {
  const int target_edges = u.edge_count();
  const int k = t.edge_count() - target_edges;
  if (k < 0 || t.leaf_count() != u.leaf_count()) return std::nullopt;
  const auto edges = t.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> pick;
  std::optional<TreeMorphism> found;
  auto rec = [&](auto&& self, int start) -> void {
    if (found) return;
    if (static_cast<int>(pick.size()) == k) {
      try {
        auto f = contract(t, pick);
        if (f.target == u) found = std::move(f);
      } catch (const IllegalContraction&) {
      }
      return;
    }
    for (int a = start; a < m; ++a) {
      pick.push_back(edges[a]);
      self(self, a + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

namespace detail {

/// For an uncolored vertex v of a maximal tree: the index i with v = meet(i, i+1).
inline int gap_index(const ColoredTree& t, int v) {
  const Child& c = t.children(v)[0];
  return c.is_leaf ? c.index : t.leaf_range(c.index).second;
}

}  // namespace detail

/// Name of the simple ratio on edge e of a maximal tree, e.g. "x2/x1" or "y/x3".
inline std::string simple_ratio_name(const ColoredTree& t, int e) {
  auto name = [&](int v) {
    return t.is_colored(v) ? std::string("y") : "x" + std::to_string(detail::gap_index(t, v));
  };
  return name(e) + "/" + name(t.parent(e));
}

/// Simple-ratio chart of the maximal tree f.source at a point s of type
/// f.target.
inline BalancedLabelling simple_ratio_chart(const TreeMorphism& f, const NodalConfiguration& s) {
  const auto& t = f.source;
  const auto& u = s.type;
  if (!(f.target == u)) throw DomainError("simple_ratio_chart: morphism target differs from the configuration type");
  auto potential = [&](int v) -> Rational {
    const int w = f.vertex_map[v];
    if (t.is_colored(v)) return 1;  // seam height in the colored gauge
    const int i = detail::gap_index(t, v);
    const auto& p = s.positions(w);
    return p[u.child_slot(w, i + 1)] - p[u.child_slot(w, i)];
  };
  std::set<int> collapsed(f.collapsed.begin(), f.collapsed.end());
  BalancedLabelling b{t, {}};
  for (int e : t.edges()) {
    b.labels[e] = collapsed.count(e) ? Rational(potential(e) / potential(t.parent(e))) : Rational(0);
  }
  return b;
}

/// Simple-ratio chart of the maximal tree t evaluated at s.
inline BalancedLabelling simple_ratio_chart(const ColoredTree& t, const NodalConfiguration& s) {
  if (!t.is_maximal()) throw DomainError("simple_ratio_chart: chart tree must be maximal");
  s.validate();
  auto f = find_morphism(t, s.type);
  if (!f) throw DomainError("simple_ratio_chart: configuration type is not a contraction of the chart tree");
  return simple_ratio_chart(*f, s);
}

/// Inverse of simple_ratio_chart.
inline NodalConfiguration reconstruct(const ColoredTree& t, const BalancedLabelling& b) {
  if (!t.is_maximal()) throw DomainError("reconstruct: chart tree must be maximal");
  if (!(b.tree == t)) throw DomainError("reconstruct: labelling lives on a different tree");
  if (auto why = labelling_violation(b)) throw DomainError("reconstruct: " + *why);
  std::vector<int> nonzero;
  for (const auto& [e, q] : b.labels) {
    if (q != 0) nonzero.push_back(e);
  }
  const TreeMorphism f = contract(t, nonzero);
  const auto& u = f.target;

  std::vector<Rational> P(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    P[v] = (v == 0 || b.labels.at(v) == 0) ? Rational(1) : Rational(P[t.parent(v)] * b.labels.at(v));
  }
  NodalConfiguration s;
  s.type = u;
  for (int w = 0; w < u.vertex_count(); ++w) {
    const auto& ch = u.children(w);
    std::vector<Rational> p{Rational(0)};
    for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
      const int i = ch[k].is_leaf ? ch[k].index : u.leaf_range(ch[k].index).second;
      p.push_back(p.back() + P[t.meet(i, i + 1)]);
    }
    Rational scale = p.size() > 1 ? p[1] : Rational(1);
    if (u.is_colored(w)) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        if (f.vertex_map[v] == w && t.is_colored(v)) {
          scale = P[v];
          break;
        }
      }
    }
    for (auto& q : p) q /= scale;
    s.components[w] = std::move(p);
  }
  s.validate();
  return s;
}

/// Labelling of f.target induced by a balanced labelling of f.source: the
/// label of a surviving edge is the product of the source labels on the
/// path between the representatives of its two end components (the colored
/// vertex of a quilted component, otherwise its top vertex).
inline BalancedLabelling induced_labelling(const TreeMorphism& f, const BalancedLabelling& b) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  std::vector<int> top(tgt.vertex_count(), -1);
  for (int v = 0; v < src.vertex_count(); ++v) {
    if (top[f.vertex_map[v]] < 0) top[f.vertex_map[v]] = v;  // preorder: first is topmost
  }
  BalancedLabelling out{tgt, {}};
  for (int e1 : tgt.edges()) {
    const int u0 = top[e1];
    const int p0 = src.parent(u0);
    const int wp = f.vertex_map[p0];
    int anchor = top[wp];
    if (tgt.is_colored(wp)) {
      for (int a = p0; a >= 0 && f.vertex_map[a] == wp; a = src.parent(a)) {
        if (src.is_colored(a)) {
          anchor = a;
          break;
        }
      }
    }
    Rational label = detail::path_product(b, anchor, p0) * b.labels.at(u0);
    if (tgt.is_colored(e1) && !src.is_colored(u0)) {
      const int end = src.base().vertex(u0).subtree_end;
      for (int c = u0; c < end; ++c) {
        if (src.is_colored(c) && f.vertex_map[c] == e1) {
          label *= detail::path_product(b, u0, c);
          break;
        }
      }
    }
    out.labels[e1] = label;
  }
  return out;
}

/// Random point of X(t) whose zero set is exactly `present`.
inline BalancedLabelling random_balanced_labelling(const ColoredTree& t, const std::set<int>& present, Rng& rng) {
  std::vector<int> collapsed;
  for (int e : t.edges()) {
    if (!present.count(e)) collapsed.push_back(e);
  }
  const TreeMorphism f = contract(t, collapsed);
  std::map<int, Rational> seam;  // one seam height per quilted component
  std::vector<Rational> P(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_colored(v)) {
      auto it = seam.find(f.vertex_map[v]);
      if (it == seam.end()) it = seam.emplace(f.vertex_map[v], rng.positive_rational()).first;
      P[v] = it->second;
    } else {
      P[v] = rng.positive_rational();
    }
  }
  BalancedLabelling b{t, {}};
  for (int e : t.edges()) b.labels[e] = present.count(e) ? Rational(0) : Rational(P[e] / P[t.parent(e)]);
  return b;
}

// ---------------------------------------------------------------------------
// Cross-ratio charts

struct ChartCoordinate {
  enum class Kind { Quad, Pair, InvPair };
  Kind kind;
  std::array<int, 4> idx{};      // Pair/InvPair use the first two
  std::optional<int> edge;       // detected interior edge
  std::string range;

  /// -rho_{ijkl} for Quad, rho_{ij} for Pair, 1/rho_{ij} for InvPair;
  /// nonnegative on the chart domain.
  ExtRat evaluate(const NodalConfiguration& s) const {
    switch (kind) {
      case Kind::Quad: return -rho_quad(s, idx[0], idx[1], idx[2], idx[3]);
      case Kind::Pair: return rho_pair(s, idx[0], idx[1]);
      case Kind::InvPair: return ExtRat(1) / rho_pair(s, idx[0], idx[1]);
    }
    return {};
  }

  std::string describe() const {
    auto join = [](auto... xs) {
      std::string out;
      ((out += (out.empty() ? "" : ",") + std::to_string(xs)), ...);
      return out;
    };
    switch (kind) {
      case Kind::Quad: return "-rho_{" + join(idx[0], idx[1], idx[2], idx[3]) + "}";
      case Kind::Pair: return "rho_{" + join(idx[0], idx[1]) + "}";
      case Kind::InvPair: return "1/rho_{" + join(idx[0], idx[1]) + "}";
    }
    return "?";
  }
};

struct ChartSpec {
  ColoredTree tree;
  std::vector<ChartCoordinate> coordinates;
  std::vector<int> reduced_edges;  // maximal trees only

  int interior_count() const {
    int k = 0;
    for (const auto& c : coordinates) k += !c.edge.has_value();
    return k;
  }
  int edge_count() const { return static_cast<int>(coordinates.size()) - interior_count(); }
};

/// Edges of a maximal tree that carry a basic move.
inline std::vector<int> reduced_chart_edges(const ColoredTree& t) {
  if (!t.is_maximal()) throw DomainError("reduced_chart_edges: tree must be maximal");
  std::vector<int> out;
  for (int e : t.edges()) {
    const int p = t.parent(e);
    bool keep = true;
    if (t.is_colored(e)) {
      // fusion needs the sibling to be colored as well
      keep = false;
      for (const auto& c : t.children(p)) {
        if (!c.is_leaf && c.index != e && t.is_colored(c.index)) keep = true;
      }
    }
    if (keep) out.push_back(e);
  }
  return out;
}

inline ChartSpec chart_spec(const ColoredTree& t) {
  if (auto why = t.stability_violation()) throw DomainError("chart_spec: " + *why);
  ChartSpec spec{t, {}, {}};
  auto lo = [&](const Child& c) { return c.is_leaf ? c.index : t.leaf_range(c.index).first; };
  auto hi = [&](const Child& c) { return c.is_leaf ? c.index : t.leaf_range(c.index).second; };
  using K = ChartCoordinate::Kind;

  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& ch = t.children(v);
    if (ch.size() < 2) continue;
    const int r1 = lo(ch[0]), r2 = lo(ch[1]);
    if (t.is_colored(v)) spec.coordinates.push_back({K::Pair, {r1, r2, 0, 0}, std::nullopt, "(0,inf)"});
    for (std::size_t m = 2; m < ch.size(); ++m) {
      spec.coordinates.push_back({K::Quad, {r1, r2, lo(ch[m]), 0}, std::nullopt, "(0,inf)"});
    }
  }
  for (int e : t.edges()) {
    const int p = t.parent(e);
    const auto& pch = t.children(p);
    const auto [i, j] = t.leaf_range(e);
    if (t.is_colored(e) && t.children(e).size() == 1) {
      const int slot = t.child_slot(p, i);
      int a, b;
      if (slot + 1 < static_cast<int>(pch.size())) {
        a = j;
        b = lo(pch[slot + 1]);
      } else {
        a = hi(pch[slot - 1]);
        b = i;
      }
      spec.coordinates.push_back({K::Pair, {a, b, 0, 0}, e, "[0,inf)"});
    } else if (t.is_colored(p) && pch.size() == 1) {
      spec.coordinates.push_back({K::InvPair, {i, j, 0, 0}, e, "[0,inf)"});
    } else if (j + 1 <= t.leaf_range(p).second) {
      spec.coordinates.push_back({K::Quad, {0, i, j, j + 1}, e, "[0,inf)"});
    } else {
      spec.coordinates.push_back({K::Quad, {i - 1, i, j, 0}, e, "[0,inf)"});
    }
  }
  if (t.is_maximal()) spec.reduced_edges = reduced_chart_edges(t);
  return spec;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_CHARTS_HPP
