#ifndef MULTIQUILT_METRIC_HPP
#define MULTIQUILT_METRIC_HPP

// Colored metric ribbon trees: the cone of admissible edge lengths and the
// exponential map onto balanced labellings.

#include "multiquilt/random.hpp"
#include "multiquilt/rational.hpp"
#include "multiquilt/trees.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multiquilt {

using Lengths = std::map<int, Rational>;  // interior edge id -> length

struct MetricColoredTree {
  ColoredTree tree;
  Lengths lambda;

  nlohmann::json to_json() const {
    nlohmann::json l = nlohmann::json::object();
    for (const auto& [e, q] : lambda) l[std::to_string(e)] = q.str();
    return {{"tree", tree.to_json()}, {"lambda", l}};
  }
};

struct MetricCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // colored vertices with differing root sums
  std::string message;
};

/// Sum of lengths on the path from v up to the top vertex.
inline Rational root_path_sum(const ColoredTree& t, const Lengths& lambda, int v) {
  Rational s = 0;
  for (int u = v; u > 0; u = t.parent(u)) s += lambda.at(u);
  return s;
}

inline MetricCheck validate_metric(const ColoredTree& t, const Lengths& lambda) {
  for (int e : t.edges()) {
    auto it = lambda.find(e);
    if (it == lambda.end()) return {false, std::nullopt, "edge " + std::to_string(e) + " has no length"};
    if (it->second < 0) return {false, std::nullopt, "edge " + std::to_string(e) + " has negative length"};
  }
  const auto colored = t.colored_vertices();
  const Rational ref = root_path_sum(t, lambda, colored.front());
  for (int c : colored) {
    if (root_path_sum(t, lambda, c) != ref) {
      return {false, std::make_pair(colored.front(), c),
              "colored vertices " + std::to_string(colored.front()) + " and " + std::to_string(c) +
                  " have different distances to the root"};
    }
  }
  return {true, std::nullopt, "ok"};
}

/// Admissible lengths as a polyhedral cone: the dependent lengths are integer
/// combinations of the independent ones.
struct ConeDescription {
  std::vector<int> independent;
  std::map<int, std::map<int, Integer>> dependent;  // edge -> {independent edge -> coefficient}
  int dimension = 0;

  nlohmann::json to_json() const {
    nlohmann::json dep = nlohmann::json::object();
    for (const auto& [e, expr] : dependent) {
      nlohmann::json terms = nlohmann::json::object();
      for (const auto& [f, c] : expr) terms[std::to_string(f)] = c.str();
      dep[std::to_string(e)] = terms;
    }
    return {{"independent", independent}, {"dependent", dep}, {"dimension", dimension}};
  }
};

/// Solves the balance relations, pivoting on the highest edge ids first.
inline ConeDescription cone_basis(const ColoredTree& t) {
  if (auto why = t.stability_violation()) throw DomainError("cone_basis: " + *why);
  const int m = t.edge_count();
  const auto colored = t.colored_vertices();
  // columns ordered by descending edge id
  auto col_of = [m](int e) { return m - e; };
  auto edge_of = [m](int c) { return m - c; };
  std::vector<std::vector<Rational>> rows;
  auto path_row = [&](int v) {
    std::vector<Rational> r(m, Rational(0));
    for (int u = v; u > 0; u = t.parent(u)) r[col_of(u)] += 1;
    return r;
  };
  const auto base = path_row(colored.front());
  for (std::size_t k = 1; k < colored.size(); ++k) {
    auto r = path_row(colored[k]);
    for (int c = 0; c < m; ++c) r[c] -= base[c];
    rows.push_back(std::move(r));
  }

  std::vector<int> pivot_cols;
  int row = 0;
  for (int c = 0; c < m && row < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[row], rows[sel]);
    const Rational inv = 1 / rows[row][c];
    for (auto& x : rows[row]) x *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == row || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (int k = 0; k < m; ++k) rows[r][k] -= f * rows[row][k];
    }
    pivot_cols.push_back(c);
    ++row;
  }

  ConeDescription cone;
  std::vector<char> is_pivot(m, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  for (int e = 1; e <= m; ++e) {
    if (!is_pivot[col_of(e)]) cone.independent.push_back(e);
  }
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    std::map<int, Integer> expr;
    for (int c = 0; c < m; ++c) {
      if (is_pivot[c] || rows[r][c] == 0) continue;
      const Rational coeff = -rows[r][c];
      if (denominator(coeff) != 1) throw std::logic_error("cone_basis: non-integral coefficient");
      expr[edge_of(c)] = numerator(coeff);
    }
    cone.dependent[edge_of(pivot_cols[r])] = std::move(expr);
  }
  cone.dimension = static_cast<int>(cone.independent.size());
  return cone;
}

/// Seeded admissible lengths, all positive.
inline Lengths random_admissible_lengths(const ColoredTree& t, Rng& rng) {
  // height above the colored level for rootward vertices, built leaves-up
  std::vector<Rational> h(t.vertex_count(), Rational(0));
  for (int v = t.vertex_count() - 1; v >= 0; --v) {
    if (t.side(v) != Side::Rootward) continue;
    Rational top = 0;
    for (const auto& c : t.children(v)) {
      if (!c.is_leaf && t.side(c.index) != Side::Leafward) top = std::max(top, h[c.index]);
    }
    h[v] = top + rng.positive_rational();
  }
  Lengths lambda;
  for (int e : t.edges()) {
    lambda[e] = t.side(e) == Side::Leafward ? rng.positive_rational() : Rational(h[t.parent(e)] - h[e]);
  }
  return lambda;
}

using Real = boost::multiprecision::mpfr_float;

struct ThetaLabelling {
  ColoredTree tree;
  std::map<int, Real> labels;
  unsigned precision = 0;
};

/// Labels e^{-lambda(e)} computed with `precision` decimal digits.
inline ThetaLabelling theta(const ColoredTree& t, const Lengths& lambda, unsigned precision) {
  if (precision < 2) throw DomainError("theta: precision must be at least 2 digits");
  const auto check = validate_metric(t, lambda);
  if (!check.ok) throw DomainError("theta: invalid metric: " + check.message);
  ThetaLabelling out{t, {}, precision};
  for (const auto& [e, q] : lambda) {
    Real x(0, precision);
    x.precision(precision);
    x = Real(numerator(q).str(), precision) / Real(denominator(q).str(), precision);
    Real label = exp(-x);
    label.precision(precision);
    out.labels.emplace(e, std::move(label));
  }
  return out;
}

/// Largest relative discrepancy among path products from a rootward vertex
/// to the colored vertices below it (0 for an exactly balanced labelling).
inline Real theta_balance_error(const ThetaLabelling& th) {
  const auto& t = th.tree;
  Real worst(0, th.precision);
  for (int v0 = 0; v0 < t.vertex_count(); ++v0) {
    if (t.side(v0) != Side::Rootward) continue;
    std::optional<Real> ref;
    for (int c : t.colored_vertices()) {
      if (!t.is_ancestor_or_self(v0, c)) continue;
      Real p(1, th.precision);
      for (int u = c; u != v0; u = t.parent(u)) p *= th.labels.at(u);
      if (!ref) {
        ref = p;
      } else {
        Real err = abs(p - *ref) / *ref;
        if (err > worst) worst = err;
      }
    }
  }
  return worst;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_METRIC_HPP
