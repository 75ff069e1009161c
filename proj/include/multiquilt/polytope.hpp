#ifndef MULTIQUILT_POLYTOPE_HPP
#define MULTIQUILT_POLYTOPE_HPP

// Weight vectors of maximal colored trees, their exact convex hull and the
// comparison of its face lattice with the poset of colored trees.

#include "multiquilt/parallel.hpp"
#include "multiquilt/rational.hpp"
#include "multiquilt/report.hpp"
#include "multiquilt/trees.hpp"

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace multiquilt {

using IntVec = std::vector<Integer>;

inline nlohmann::json intvec_to_json(const IntVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

/// Sum over uncolored vertices of (valence - 3) plus over colored of (valence - 2).
inline int stratum_dimension(const ColoredTree& t) {
  int d = 0;
  for (int v = 0; v < t.vertex_count(); ++v) d += t.valence(v) - (t.is_colored(v) ? 2 : 3);
  return d;
}

// ---------------------------------------------------------------------------
// Weight vectors

struct WeightVector {
  IntVec entries;  // x_1..x_{n-1}, then y
  struct Term {
    int a = 0, b = 0, delta = 0;
  };
  std::vector<Term> derivation;  // per i = 1..n-1
};

inline WeightVector weight_vector(const ColoredTree& t) {
  if (!t.is_maximal()) throw DomainError("weight_vector: tree is not maximal");
  const int n = t.leaf_count();
  WeightVector w;
  Integer ysum = 0;
  for (int i = 1; i < n; ++i) {
    const int v = t.meet(i, i + 1);
    if (t.is_colored(v) || t.side(v) == Side::Colored) {
      throw DomainError("weight_vector: meet of leaves " + std::to_string(i) + "," + std::to_string(i + 1) +
                        " is colored");
    }
    auto size = [&](const Child& c) {
      if (c.is_leaf) return 1;
      const auto [lo, hi] = t.leaf_range(c.index);
      return hi - lo + 1;
    };
    WeightVector::Term term{size(t.children(v)[0]), size(t.children(v)[1]), t.side(v) == Side::Rootward ? 1 : 0};
    const Integer ab = Integer(term.a) * term.b;
    w.entries.push_back(ab * (1 + term.delta));
    ysum += term.delta * ab;
    w.derivation.push_back(term);
  }
  w.entries.push_back(-ysum);
  return w;
}

/// Exponents (edge of t, m) with x^{mu_t'} / x^{mu_t} = prod phi_{t,e}^m, found
/// as a flow decomposition of the exponent difference along the edges of t.
inline std::vector<std::pair<int, Integer>> monomial_ratio(const ColoredTree& t, const ColoredTree& tp) {
  if (t.leaf_count() != tp.leaf_count()) throw DomainError("monomial_ratio: leaf counts differ");
  const IntVec mu = weight_vector(t).entries, mup = weight_vector(tp).entries;
  const int n = t.leaf_count();
  // nodes: 0..n-2 = x_1..x_{n-1}, n-1 = y, n = source, n+1 = sink
  const int Y = n - 1, S = n, T = n + 1, N = n + 2;
  auto node_of = [&](int v) {
    if (t.is_colored(v)) return Y;
    const Child& c = t.children(v)[0];
    return (c.is_leaf ? c.index : t.leaf_range(c.index).second) - 1;
  };
  const Integer INF = Integer(1) << 62;
  std::vector<std::vector<Integer>> cap(N, std::vector<Integer>(N, Integer(0)));
  std::map<std::pair<int, int>, int> arc_edge;  // (parent node, child node) -> edge id
  for (int e : t.edges()) {
    const int a = node_of(t.parent(e)), b = node_of(e);
    if (arc_edge.emplace(std::make_pair(a, b), e).second) cap[a][b] = INF;
  }
  Integer need = 0;
  for (int k = 0; k < n; ++k) {
    const Integer d = mup[k] - mu[k];
    if (d < 0) cap[S][k] = -d;
    if (d > 0) {
      cap[k][T] = d;
      need += d;
    }
  }
  // Edmonds-Karp
  std::vector<std::vector<Integer>> flow(N, std::vector<Integer>(N, Integer(0)));
  Integer total = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    prev[S] = S;
    std::deque<int> queue{S};
    while (!queue.empty() && prev[T] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int w = 0; w < N; ++w) {
        if (prev[w] < 0 && cap[u][w] - flow[u][w] + flow[w][u] > 0) {
          prev[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (prev[T] < 0) break;
    Integer push = INF;
    for (int w = T; w != S; w = prev[w]) push = std::min(push, Integer(cap[prev[w]][w] - flow[prev[w]][w] + flow[w][prev[w]]));
    for (int w = T; w != S; w = prev[w]) {
      const int u = prev[w];
      const Integer back = std::min(push, flow[w][u]);
      flow[w][u] -= back;
      flow[u][w] += push - back;
    }
    total += push;
  }
  if (total != need) throw std::logic_error("monomial_ratio: exponent difference is not a nonnegative combination");
  std::vector<std::pair<int, Integer>> out;
  for (const auto& [arc, e] : arc_edge) {
    if (flow[arc.first][arc.second] > 0) out.emplace_back(e, flow[arc.first][arc.second]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact convex hull

struct Facet {
  IntVec normal;  // normal . x <= offset
  Integer offset;
  friend bool operator<(const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  }
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct Polytope {
  int ambient = 0;
  int dim = -1;
  std::vector<IntVec> vertices;
  std::vector<Facet> facets;
  std::vector<std::vector<char>> incidence;  // [vertex][facet]
  std::vector<int> chart_coordinates;        // coordinates projecting the affine span isomorphically

  int vertex_index(const IntVec& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p) return -1;
    return static_cast<int>(it - vertices.begin());
  }

  nlohmann::json to_json() const {
    nlohmann::json vs = nlohmann::json::array(), fs = nlohmann::json::array();
    for (const auto& v : vertices) vs.push_back(intvec_to_json(v));
    for (const auto& f : facets) fs.push_back({{"normal", intvec_to_json(f.normal)}, {"offset", f.offset.convert_to<long long>()}});
    return {{"dim", dim}, {"vertices", vs}, {"facets", fs}};
  }
};

namespace detail {

inline Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, Integer(abs(x)));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

/// Rank of a rational matrix, with the pivot columns of its row echelon form.
inline std::pair<int, std::vector<int>> rank_and_pivots(std::vector<std::vector<Rational>> m) {
  std::vector<int> pivots;
  if (m.empty()) return {0, pivots};
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(m.size()); ++c) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    for (int r = row + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[row][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return {row, pivots};
}

inline int affine_rank(const std::vector<IntVec>& pts) {
  if (pts.size() <= 1) return pts.empty() ? -1 : 0;
  std::vector<std::vector<Rational>> m;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<Rational> r;
    for (std::size_t c = 0; c < pts[0].size(); ++c) r.emplace_back(pts[k][c] - pts[0][c]);
    m.push_back(std::move(r));
  }
  return rank_and_pivots(std::move(m)).first;
}

/// Double description for the cone of valid inequalities (a, b) with
/// b - a.q >= 0 over full-dimensional points q in Z^d; returns its extreme rays.
inline std::vector<IntVec> facet_rays(const std::vector<IntVec>& q, int d) {
  const int m = static_cast<int>(q.size());
  auto row = [&](int k) {
    IntVec r;
    for (int c = 0; c < d; ++c) r.push_back(-q[k][c]);
    r.emplace_back(1);
    return r;
  };
  // initial simplex: d+1 affinely independent points, chosen greedily
  std::vector<int> basis;
  std::vector<IntVec> chosen;
  for (int k = 0; k < m && static_cast<int>(basis.size()) < d + 1; ++k) {
    chosen.push_back(q[k]);
    if (affine_rank(chosen) == static_cast<int>(chosen.size()) - 1) {
      basis.push_back(k);
    } else {
      chosen.pop_back();
    }
  }
  // rays = columns of the inverse of the (d+1)x(d+1) constraint matrix
  const int D = d + 1;
  std::vector<std::vector<Rational>> aug(D, std::vector<Rational>(2 * D, Rational(0)));
  for (int r = 0; r < D; ++r) {
    const IntVec rr = row(basis[r]);
    for (int c = 0; c < D; ++c) aug[r][c] = Rational(rr[c]);
    aug[r][D + r] = 1;
  }
  for (int c = 0; c < D; ++c) {
    int sel = c;
    while (aug[sel][c] == 0) ++sel;
    std::swap(aug[c], aug[sel]);
    const Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (int r = 0; r < D; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (int k = 0; k < 2 * D; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  struct Ray {
    IntVec v;
    boost::dynamic_bitset<> zero;
  };
  std::vector<Ray> rays;
  std::vector<int> order = basis;
  for (int j = 0; j < D; ++j) {
    Integer lcm = 1;
    for (int r = 0; r < D; ++r) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(aug[r][D + j])));
    IntVec v;
    for (int r = 0; r < D; ++r) v.push_back(Integer(numerator(aug[r][D + j]) * (lcm / denominator(aug[r][D + j]))));
    make_primitive(v);
    Ray ray{std::move(v), boost::dynamic_bitset<>(m)};
    for (int r = 0; r < D; ++r) {
      if (r != j) ray.zero.set(basis[r]);
    }
    rays.push_back(std::move(ray));
  }
  std::vector<char> used(m, 0);
  for (int k : basis) used[k] = 1;
  for (int k = 0; k < m; ++k) {
    if (used[k]) continue;
    const IntVec h = row(k);
    std::vector<Integer> val(rays.size());
    std::vector<int> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(h, rays[r].v);
      if (val[r] > 0) pos.push_back(static_cast<int>(r));
      if (val[r] < 0) neg.push_back(static_cast<int>(r));
      if (val[r] >= 0) {
        Ray keep = rays[r];
        if (val[r] == 0) keep.zero.set(k);
        next.push_back(std::move(keep));
      }
    }
    for (int a : pos) {
      for (int b : neg) {
        const auto common = rays[a].zero & rays[b].zero;
        if (static_cast<int>(common.count()) < d - 1) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (static_cast<int>(r) == a || static_cast<int>(r) == b) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec v(D);
        for (int c = 0; c < D; ++c) v[c] = val[a] * rays[b].v[c] - val[b] * rays[a].v[c];
        make_primitive(v);
        Ray nr{std::move(v), common};
        nr.zero.set(k);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    used[k] = 1;
  }
  std::vector<IntVec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace detail

/// Exact convex hull within the affine span of the points.
inline Polytope hull(std::vector<IntVec> points) {
  if (points.empty()) throw DomainError("hull: no points");
  const std::size_t D = points[0].size();
  for (const auto& p : points) {
    if (p.size() != D) throw DomainError("hull: points of different dimensions");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope P;
  P.ambient = static_cast<int>(D);
  // affine span and a coordinate projection that is injective on it
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<Rational> r;
    for (std::size_t c = 0; c < D; ++c) r.emplace_back(points[k][c] - points[0][c]);
    diffs.push_back(std::move(r));
  }
  auto [d, pivots] = detail::rank_and_pivots(diffs);
  P.dim = d;
  P.chart_coordinates = pivots;
  if (d == 0) {
    P.vertices = points;
    P.incidence.assign(1, {});
    return P;
  }
  std::vector<IntVec> q;
  for (const auto& p : points) {
    IntVec r;
    for (int c : pivots) r.push_back(p[c]);
    q.push_back(std::move(r));
  }
  for (const auto& ray : detail::facet_rays(q, d)) {
    Facet f{IntVec(D, Integer(0)), ray[d]};
    for (int c = 0; c < d; ++c) f.normal[pivots[c]] = ray[c];
    P.facets.push_back(std::move(f));
  }
  std::sort(P.facets.begin(), P.facets.end());

  // extreme points: tight facet normals of full rank
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<std::vector<Rational>> tight;
    for (const auto& f : P.facets) {
      if (detail::dot(f.normal, points[k]) == f.offset) {
        std::vector<Rational> r;
        for (int c : pivots) r.emplace_back(f.normal[c]);
        tight.push_back(std::move(r));
      }
    }
    if (detail::rank_and_pivots(std::move(tight)).first == d) P.vertices.push_back(points[k]);
  }
  for (const auto& v : P.vertices) {
    std::vector<char> row;
    for (const auto& f : P.facets) row.push_back(detail::dot(f.normal, v) == f.offset);
    P.incidence.push_back(std::move(row));
  }
  return P;
}

/// OFF mesh of a 3-dimensional polytope, vertices given in chart coordinates.
inline void write_off(std::ostream& os, const Polytope& P) {
  if (P.dim != 3) throw DomainError("write_off: only 3-dimensional polytopes are supported");
  os << "OFF\n" << P.vertices.size() << " " << P.facets.size() << " 0\n";
  for (const auto& v : P.vertices) {
    for (std::size_t c = 0; c < P.chart_coordinates.size(); ++c) {
      os << (c ? " " : "") << v[P.chart_coordinates[c]];
    }
    os << "\n";
  }
  for (std::size_t f = 0; f < P.facets.size(); ++f) {
    std::vector<int> ids;
    for (std::size_t v = 0; v < P.vertices.size(); ++v) {
      if (P.incidence[v][f]) ids.push_back(static_cast<int>(v));
    }
    // order the facet's vertices cyclically around their centroid
    const auto& nrm = P.facets[f].normal;
    std::vector<std::array<double, 3>> xyz;
    for (int id : ids) {
      std::array<double, 3> p{};
      for (int c = 0; c < 3; ++c) p[c] = P.vertices[id][P.chart_coordinates[c]].convert_to<double>();
      xyz.push_back(p);
    }
    std::array<double, 3> cen{}, n3{};
    for (const auto& p : xyz)
      for (int c = 0; c < 3; ++c) cen[c] += p[c] / xyz.size();
    for (int c = 0; c < 3; ++c) n3[c] = nrm[P.chart_coordinates[c]].convert_to<double>();
    std::array<double, 3> u{xyz[0][0] - cen[0], xyz[0][1] - cen[1], xyz[0][2] - cen[2]};
    std::array<double, 3> w{n3[1] * u[2] - n3[2] * u[1], n3[2] * u[0] - n3[0] * u[2], n3[0] * u[1] - n3[1] * u[0]};
    std::vector<std::pair<double, int>> ang;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      double pu = 0, pw = 0;
      for (int c = 0; c < 3; ++c) {
        pu += (xyz[k][c] - cen[c]) * u[c];
        pw += (xyz[k][c] - cen[c]) * w[c];
      }
      ang.emplace_back(std::atan2(pw, pu), ids[k]);
    }
    std::sort(ang.begin(), ang.end());
    os << ids.size();
    for (const auto& a : ang) os << " " << a.second;
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// Face lattice

struct Face {
  std::vector<int> vertices;  // sorted vertex indices
  int rank = -1;              // affine dimension; -1 for the empty face
  friend bool operator<(const Face& a, const Face& b) {
    return std::tie(a.rank, a.vertices) < std::tie(b.rank, b.vertices);
  }
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (rank, vertex set); bottom first, top last

  int index_of(const std::vector<int>& vs) const {
    for (std::size_t k = 0; k < faces.size(); ++k) {
      if (faces[k].vertices == vs) return static_cast<int>(k);
    }
    return -1;
  }
  bool leq(int a, int b) const {
    return std::includes(faces[b].vertices.begin(), faces[b].vertices.end(), faces[a].vertices.begin(),
                         faces[a].vertices.end());
  }
  /// Number of faces of each dimension 0..dim-1 (proper nonempty faces).
  std::vector<int> f_vector(int dim) const {
    std::vector<int> f(std::max(dim, 0), 0);
    for (const auto& face : faces) {
      if (face.rank >= 0 && face.rank < dim) ++f[face.rank];
    }
    return f;
  }
};

inline FaceLattice face_lattice(const Polytope& P) {
  const int nv = static_cast<int>(P.vertices.size());
  std::vector<std::vector<int>> facet_sets;
  for (std::size_t f = 0; f < P.facets.size(); ++f) {
    std::vector<int> s;
    for (int v = 0; v < nv; ++v) {
      if (P.incidence[v][f]) s.push_back(v);
    }
    facet_sets.push_back(std::move(s));
  }
  std::set<std::vector<int>> seen;
  std::vector<int> all(nv);
  for (int v = 0; v < nv; ++v) all[v] = v;
  seen.insert(all);
  seen.insert({});
  std::deque<std::vector<int>> work;
  for (const auto& s : facet_sets) {
    if (seen.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    const auto cur = work.front();
    work.pop_front();
    for (const auto& s : facet_sets) {
      std::vector<int> meet;
      std::set_intersection(cur.begin(), cur.end(), s.begin(), s.end(), std::back_inserter(meet));
      if (seen.insert(meet).second) work.push_back(std::move(meet));
    }
  }
  FaceLattice L;
  for (const auto& s : seen) {
    std::vector<IntVec> pts;
    for (int v : s) pts.push_back(P.vertices[v]);
    L.faces.push_back({s, detail::affine_rank(pts)});
  }
  std::sort(L.faces.begin(), L.faces.end());
  return L;
}

// ---------------------------------------------------------------------------
// Comparison with the tree poset

struct CwReport {
  int n = 0;
  int trees = 0, maximal_trees = 0, faces = 0, vertices = 0, facets = 0, dim = 0;
  std::vector<int> f_vector;
  std::vector<CheckResult> checks;

  bool passed() const { return all_passed(checks); }

  nlohmann::json to_json() const {
    const nlohmann::json cs = checks_to_json(checks);
    return {{"n", n},           {"trees", trees},   {"maximal_trees", maximal_trees},
            {"faces", faces},   {"vertices", vertices}, {"facets", facets},
            {"dim", dim},       {"f_vector", f_vector}, {"checks", cs},
            {"passed", passed()}};
  }
};

inline std::vector<IntVec> weight_vectors(const std::vector<ColoredTree>& maximal) {
  std::vector<IntVec> out(maximal.size());
  parallel_for(maximal.size(), [&](std::size_t k) { out[k] = weight_vector(maximal[k]).entries; });
  return out;
}

inline CwReport check_cw_iso(int n) {
  if (n < 2) throw DomainError("check_cw_iso: need n >= 2");
  if (n > 6) throw DomainError("check_cw_iso: n > 6 is outside the supported range");
  CwReport rep;
  rep.n = n;
  const FacePoset poset = face_poset(n);
  const auto& trees = poset.elements;
  std::vector<int> max_idx;
  std::vector<ColoredTree> maximal;
  for (int k = 0; k < static_cast<int>(trees.size()); ++k) {
    if (trees[k].is_maximal()) {
      max_idx.push_back(k);
      maximal.push_back(trees[k]);
    }
  }
  const auto mu = weight_vectors(maximal);
  const Polytope P = hull(mu);
  const FaceLattice L = face_lattice(P);
  rep.trees = static_cast<int>(trees.size());
  rep.maximal_trees = static_cast<int>(maximal.size());
  rep.faces = static_cast<int>(L.faces.size()) - 1;  // nonempty
  rep.vertices = static_cast<int>(P.vertices.size());
  rep.facets = static_cast<int>(P.facets.size());
  rep.dim = P.dim;
  rep.f_vector = L.f_vector(P.dim);

  // (4) weight vectors are distinct hull vertices
  {
    std::set<IntVec> distinct(mu.begin(), mu.end());
    std::string bad;
    for (std::size_t k = 0; k < mu.size() && bad.empty(); ++k) {
      if (P.vertex_index(mu[k]) < 0) bad = "weight vector of " + maximal[k].code() + " is not a hull vertex";
    }
    if (bad.empty() && distinct.size() != mu.size()) bad = "two maximal trees share a weight vector";
    if (bad.empty() && P.vertices.size() != mu.size()) bad = "hull has vertices that are not weight vectors";
    rep.checks.push_back({"weight vectors are distinct hull vertices", bad.empty(),
                          bad.empty() ? std::to_string(mu.size()) + " vertices" : bad});
  }

  // F(T): hull vertices of the maximal trees refining T
  std::vector<std::vector<int>> F(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (std::size_t m = 0; m < max_idx.size(); ++m) {
      if (poset.leq[max_idx[m]][t]) {
        const int v = P.vertex_index(mu[m]);
        if (v >= 0) F[t].push_back(v);
      }
    }
    std::sort(F[t].begin(), F[t].end());
  }
  std::vector<int> face_of(trees.size(), -1);
  {
    std::string bad;
    std::vector<int> hit(L.faces.size(), -1);
    for (std::size_t t = 0; t < trees.size() && bad.empty(); ++t) {
      face_of[t] = L.index_of(F[t]);
      if (face_of[t] < 0) {
        bad = "vertex set of " + trees[t].code() + " is not a face";
      } else if (hit[face_of[t]] >= 0) {
        bad = trees[hit[face_of[t]]].code() + " and " + trees[t].code() + " give the same face";
      } else {
        hit[face_of[t]] = static_cast<int>(t);
      }
    }
    for (std::size_t f = 1; f < L.faces.size() && bad.empty(); ++f) {
      if (hit[f] < 0) bad = "a face of rank " + std::to_string(L.faces[f].rank) + " comes from no tree";
    }
    rep.checks.push_back({"trees correspond bijectively to nonempty faces", bad.empty(),
                          bad.empty() ? std::to_string(trees.size()) + " trees, " + std::to_string(rep.faces) + " faces"
                                      : bad});
  }
  {
    std::string bad;
    for (std::size_t a = 0; a < trees.size() && bad.empty(); ++a) {
      for (std::size_t b = 0; b < trees.size() && bad.empty(); ++b) {
        const bool sub = std::includes(F[b].begin(), F[b].end(), F[a].begin(), F[a].end());
        if (static_cast<bool>(poset.leq[a][b]) != sub) {
          bad = trees[a].code() + " vs " + trees[b].code() + ": refinement and face containment disagree";
        }
      }
    }
    rep.checks.push_back({"T refines T' iff F(T) is contained in F(T')", bad.empty(),
                          bad.empty() ? "more edges, smaller face" : bad});
  }
  {
    std::string bad;
    for (std::size_t t = 0; t < trees.size() && bad.empty(); ++t) {
      if (face_of[t] < 0) continue;
      const int got = L.faces[face_of[t]].rank, want = stratum_dimension(trees[t]);
      if (got != want) {
        bad = trees[t].code() + ": face dimension " + std::to_string(got) + ", stratum dimension " +
              std::to_string(want);
      }
    }
    rep.checks.push_back({"dim F(T) equals stratum dimension", bad.empty(), bad.empty() ? "all trees" : bad});
  }
  {
    std::set<std::string> expected, got;
    for (const auto& d : facet_types(n)) expected.insert(d.tree.code());
    for (std::size_t t = 0; t < trees.size(); ++t) {
      if (face_of[t] >= 0 && L.faces[face_of[t]].rank == P.dim - 1) got.insert(trees[t].code());
    }
    const bool ok = expected == got && static_cast<int>(expected.size()) == rep.facets;
    rep.checks.push_back({"facets match the two facet families", ok,
                          std::to_string(rep.facets) + " hull facets, " + std::to_string(expected.size()) +
                              " facet descriptors"});
  }
  return rep;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_POLYTOPE_HPP
