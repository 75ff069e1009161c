#ifndef MULTIQUILT_VERIFY_HPP
#define MULTIQUILT_VERIFY_HPP

// Property suites shared by the command-line front end and the test
// binaries. Every suite is deterministic given its seed.

#include "multiquilt/charts.hpp"
#include "multiquilt/configurations.hpp"
#include "multiquilt/metric.hpp"
#include "multiquilt/polytope.hpp"
#include "multiquilt/random.hpp"
#include "multiquilt/rational.hpp"
#include "multiquilt/report.hpp"
#include "multiquilt/trees.hpp"
#include "multiquilt/weighted.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace multiquilt {

namespace detail {

/// Accumulates failures; keeps the first message.
struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& why) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = why();
  }

  CheckResult result(const std::string& name, const std::string& extra = "") const {
    std::string d = std::to_string(checked) + " checked";
    if (!extra.empty()) d += ", " + extra;
    if (failed) d += "; " + std::to_string(failed) + " failed, first: " + first;
    return {name, failed == 0 && checked > 0, d};
  }
};

inline Rational ipow(const Rational& b, long long e) {
  Rational r = 1;
  const Rational base = e < 0 ? Rational(1 / b) : b;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
  return r;
}

inline std::string ordered(int a, int b, int c = -1, int d = -1, int e = -1) {
  std::string s = std::to_string(a) + "," + std::to_string(b);
  for (int x : {c, d, e}) {
    if (x >= 0) s += "," + std::to_string(x);
  }
  return "(" + s + ")";
}

/// Signed nonzero rational with numerator and denominator in [1, 9].
inline Rational nonzero_rational(Rng& rng) {
  Rational q(Integer(static_cast<long long>(rng.uniform(1, 9))), Integer(static_cast<long long>(rng.uniform(1, 9))));
  return rng.uniform(0, 1) ? q : Rational(-q);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cross-ratio identities on interior configurations

inline std::vector<CheckResult> cross_ratio_suite(int n, int samples, std::uint64_t seed) {
  if (n < 4) throw DomainError("cross_ratio_suite: need n >= 4");
  Rng rng(seed);
  detail::Tally inv, sym, swap, antisym, rec, rel1, rel2;
  long long guarded_out = 0;
  for (int s = 0; s < samples; ++s) {
    const Configuration c = random_config(n, rng);
    const auto z = c.positions();
    std::vector<ExtRat> w{ExtRat::infinity()};
    for (const auto& q : z) w.emplace_back(q);
    auto rho = [&](int i, int j, int k, int l) { return cross_ratio4(w[i], w[j], w[k], w[l]); };
    auto rho2 = [&](int i, int j) { return ExtRat(Rational(c.y / (z[j - 1] - z[i - 1]))); };
    const std::string tag = "sample " + std::to_string(s);

    // invariance under z -> a z + b, y -> a y
    {
      const Rational a = detail::nonzero_rational(rng), b = detail::nonzero_rational(rng);
      std::vector<Rational> z2;
      for (const auto& q : z) z2.push_back(a * q + b);
      const auto v1 = embed_raw(z, c.y), v2 = embed_raw(z2, Rational(a * c.y));
      inv.expect(v1 == v2, [&] { return tag + ": embedding changes under a=" + a.str() + ", b=" + b.str(); });
    }

    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k)
          for (int l = 0; l <= n; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
            const ExtRat r = rho(i, j, k, l);
            const ExtRat one_minus = ExtRat(1) - r;
            sym.expect(rho(j, i, k, l) == one_minus && rho(i, j, l, k) == one_minus,
                       [&] { return tag + ": rho_jikl = rho_ijlk = 1 - rho_ijkl fails at " + detail::ordered(i, j, k, l); });
            swap.expect(rho(i, k, j, l) == r / (r - ExtRat(1)),
                        [&] { return tag + ": rho_ikjl = rho/(rho-1) fails at " + detail::ordered(i, j, k, l); });
            for (int m = 0; m <= n; ++m) {
              if (m == i || m == j || m == k || m == l) continue;
              const ExtRat rl = r, rm = rho(i, j, k, m);
              std::set<std::string> distinct{"1", "inf", rl.str(), rm.str()};
              if (distinct.size() < 3) {
                ++guarded_out;
                continue;
              }
              rec.expect(rho(j, k, l, m) == (rm - ExtRat(1)) / (rm - rl),
                         [&] { return tag + ": recursion fails at " + detail::ordered(i, j, k, l, m); });
            }
          }

    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        antisym.expect(rho2(i, j) == -rho2(j, i), [&] { return tag + ": rho_ij != -rho_ji at " + detail::ordered(i, j); });
        for (int k = 1; k <= n; ++k) {
          if (k == i || k == j) continue;
          const ExtRat r0 = rho(i, j, k, 0);
          rel1.expect(rho2(j, k) == rho2(i, j) / (-r0),
                      [&] { return tag + ": rho_jk = rho_ij/(-rho_ijk0) fails at " + detail::ordered(i, j, k); });
          rel2.expect(rho2(i, k) == rho2(i, j) / (ExtRat(1) - r0),
                      [&] { return tag + ": rho_ik = rho_ij/(1-rho_ijk0) fails at " + detail::ordered(i, j, k); });
        }
      }
  }
  return {inv.result("invariance under z -> az+b"),
          sym.result("symmetry rho_jikl = rho_ijlk = 1 - rho_ijkl"),
          swap.result("symmetry rho_ikjl = rho_ijkl/(rho_ijkl - 1)"),
          antisym.result("antisymmetry rho_ij = -rho_ji"),
          rec.result("recursion rho_jklm = (rho_ijkm - 1)/(rho_ijkm - rho_ijkl)",
                     std::to_string(guarded_out) + " excluded by the guard"),
          rel1.result("relation rho_jk = rho_ij/(-rho_ijk0)"),
          rel2.result("relation rho_ik = rho_ij/(1 - rho_ijk0)")};
}

// ---------------------------------------------------------------------------
// decode(embed(s)) on every combinatorial type

inline std::vector<CheckResult> decode_suite(int max_n, int samples, std::uint64_t seed) {
  detail::Tally round, types;
  int with_zero = 0, with_infinite = 0, with_both = 0, total = 0;
  for (int n = 2; n <= max_n; ++n) {
    const auto trees = enumerate_colored_trees(n, false);
    std::vector<detail::Tally> per(trees.size());
    parallel_for(trees.size(), [&](std::size_t k) {
      Rng rng(seed + 7919ULL * static_cast<std::uint64_t>(n) + 104729ULL * k);
      for (int s = 0; s < samples; ++s) {
        const auto pt = random_nodal(trees[k], rng);
        std::string err;
        bool ok = false;
        try {
          ok = decode(embed(pt)) == pt;
          if (!ok) err = "decoded point differs";
        } catch (const std::exception& e) {
          err = e.what();
        }
        per[k].expect(ok, [&] { return trees[k].code() + ": " + err; });
      }
    });
    for (std::size_t k = 0; k < trees.size(); ++k) {
      round.checked += per[k].checked;
      if (per[k].failed && !round.failed) round.first = per[k].first;
      round.failed += per[k].failed;
      bool zero = false, inf = false;
      for (int v = 0; v < trees[k].vertex_count(); ++v) {
        if (trees[k].is_colored(v)) continue;
        zero |= trees[k].side(v) == Side::Leafward;
        inf |= trees[k].side(v) == Side::Rootward;
      }
      with_zero += zero;
      with_infinite += inf;
      with_both += zero && inf;
      ++total;
    }
  }
  types.expect(with_zero > 0 && with_infinite > 0 && with_both > 0,
               [] { return std::string("some level of the partition is never exercised"); });
  return {round.result("decode(embed(s)) = s", std::to_string(total) + " types"),
          types.result("types with bubbles below and above the seam level",
                       std::to_string(with_zero) + " below, " + std::to_string(with_infinite) + " above, " +
                           std::to_string(with_both) + " both")};
}

// ---------------------------------------------------------------------------
// Simple-ratio charts

inline std::vector<CheckResult> chart_suite(int max_n, int samples, std::uint64_t seed) {
  struct Job {
    ColoredTree t;
    TreeMorphism f;
    ChartSpec spec;
  };
  std::vector<Job> jobs;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& t : enumerate_colored_trees(n, true)) {
      const auto edges = t.edges();
      const auto spec = chart_spec(t);
      for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<int> collapsed;
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (mask >> k & 1u) collapsed.push_back(edges[k]);
        }
        try {
          jobs.push_back({t, contract(t, collapsed), spec});
        } catch (const IllegalContraction&) {
        }
      }
    }
  }
  struct Out {
    detail::Tally forward, backward, balanced, detect;
  };
  std::vector<Out> out(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto& [t, f, spec] = jobs[k];
    Rng rng(seed + 1000003ULL * k);
    std::set<int> collapsed(f.collapsed.begin(), f.collapsed.end()), present;
    for (int e : t.edges()) {
      if (!collapsed.count(e)) present.insert(e);
    }
    const std::string tag = t.code() + " -> " + f.target.code();
    auto& o = out[k];
    for (int s = 0; s < samples; ++s) {
      // labelling -> point -> labelling
      const auto b = random_balanced_labelling(t, present, rng);
      o.balanced.expect(is_balanced(b), [&] { return tag + ": random labelling is not balanced"; });
      try {
        const auto pt = reconstruct(t, b);
        o.forward.expect(pt.type == f.target && simple_ratio_chart(f, pt) == b,
                         [&] { return tag + ": simple_ratio_chart(reconstruct(b)) != b"; });
      } catch (const std::exception& e) {
        o.forward.expect(false, [&] { return tag + ": " + e.what(); });
      }
      // point -> labelling -> point, with zero-label/edge/coordinate agreement
      const auto pt = random_nodal(f.target, rng);
      try {
        const auto lab = simple_ratio_chart(f, pt);
        o.backward.expect(reconstruct(t, lab) == pt, [&] { return tag + ": reconstruct(simple_ratio_chart(s)) != s"; });
        for (const auto& coord : spec.coordinates) {
          if (!coord.edge) continue;
          const int e = *coord.edge;
          const ExtRat val = coord.evaluate(pt);
          const bool zero_coord = val.is_zero(), zero_label = lab.labels.at(e) == 0, is_present = present.count(e) > 0;
          o.detect.expect(val.is_finite() && zero_coord == zero_label && zero_label == is_present, [&] {
            return tag + ": edge " + std::to_string(e) + " coordinate " + coord.describe() + " = " + val.str() +
                   ", label " + lab.labels.at(e).str();
          });
        }
      } catch (const std::exception& e) {
        o.backward.expect(false, [&] { return tag + ": " + e.what(); });
      }
    }
  });
  detail::Tally forward, backward, balanced, detect;
  for (const auto& o : out) {
    for (auto [dst, src] : {std::pair{&forward, &o.forward}, {&backward, &o.backward}, {&balanced, &o.balanced},
                            {&detect, &o.detect}}) {
      dst->checked += src->checked;
      if (src->failed && !dst->failed) dst->first = src->first;
      dst->failed += src->failed;
    }
  }
  const std::string strata = std::to_string(jobs.size()) + " (chart, stratum) pairs";
  return {balanced.result("sampled labellings are balanced", strata),
          forward.result("simple_ratio_chart(reconstruct(b)) = b"),
          backward.result("reconstruct(simple_ratio_chart(s)) = s"),
          detect.result("coordinate zero <=> label zero <=> edge present")};
}

// ---------------------------------------------------------------------------
// Monomial ratios of basic moves

struct MoveRecord {
  std::string kind;
  int edge = 0;
  Integer exponent;
  int a = 0, b = 0, delta = 0;
};

/// Expected (edge, a, b, delta) of a basic move on a maximal tree.
inline MoveRecord expected_move(const ColoredTree& t, const BasicMove& m) {
  auto size = [&](const Child& c) {
    if (c.is_leaf) return 1;
    const auto [lo, hi] = t.leaf_range(c.index);
    return hi - lo + 1;
  };
  MoveRecord r;
  r.kind = to_string(m.kind);
  const int v = m.locus;
  const auto& ch = t.children(v);
  switch (m.kind) {
    case BasicMove::Kind::Flop: {
      const int p = t.parent(v);
      const auto& pch = t.children(p);
      const bool left = !pch[0].is_leaf && pch[0].index == v;
      r.edge = v;
      r.a = left ? size(ch[0]) : size(pch[0]);
      r.b = left ? size(pch[1]) : size(ch[1]);
      r.delta = t.side(p) == Side::Rootward ? 1 : 0;
      break;
    }
    case BasicMove::Kind::Fusion:
      r.edge = ch[0].index;
      r.a = size(ch[0]);
      r.b = size(ch[1]);
      break;
    case BasicMove::Kind::Splitting:
      r.edge = v;
      r.a = size(ch[0]);
      r.b = size(ch[1]);
      break;
  }
  r.exponent = Integer(r.a) * r.b * (1 + r.delta);
  return r;
}

inline std::vector<CheckResult> monomial_suite(int max_n, int samples, std::uint64_t seed) {
  detail::Tally single, formula, identity;
  int flops_plain = 0, flops_doubled = 0, fusions = 0, splittings = 0, pairs = 0;
  Rng rng(seed);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Configuration> configs;
    for (int s = 0; s < samples; ++s) configs.push_back(random_config(n, rng));
    for (const auto& t : enumerate_colored_trees(n, true)) {
      const auto mu = weight_vector(t).entries;
      const auto f = contract(t, t.edges());
      std::vector<BalancedLabelling> charts;
      for (const auto& c : configs) charts.push_back(simple_ratio_chart(f, to_nodal(c)));
      for (const auto& m : basic_moves(t)) {
        ++pairs;
        const std::string tag = t.code() + " " + to_string(m.kind) + " at " + std::to_string(m.locus);
        const auto r = monomial_ratio(t, m.result);
        const auto want = expected_move(t, m);
        if (m.kind == BasicMove::Kind::Flop) (want.delta ? flops_doubled : flops_plain)++;
        if (m.kind == BasicMove::Kind::Fusion) ++fusions;
        if (m.kind == BasicMove::Kind::Splitting) ++splittings;
        single.expect(r.size() == 1 && r[0].second > 0, [&] { return tag + ": ratio is not a single positive power"; });
        if (r.size() != 1) continue;
        formula.expect(r[0].first == want.edge && r[0].second == want.exponent, [&] {
          return tag + ": got edge " + std::to_string(r[0].first) + "^" + r[0].second.str() + ", expected edge " +
                 std::to_string(want.edge) + "^" + want.exponent.str();
        });
        const auto mup = weight_vector(m.result).entries;
        const long long e = r[0].second.convert_to<long long>();
        for (std::size_t s = 0; s < configs.size(); ++s) {
          Rational lhs = 1;
          for (int k = 0; k < n; ++k) {
            const Rational& base = k + 1 < n ? configs[s].x[k] : configs[s].y;
            lhs *= detail::ipow(base, (mup[k] - mu[k]).convert_to<long long>());
          }
          const Rational rhs = detail::ipow(charts[s].labels.at(r[0].first), e);
          identity.expect(lhs == rhs, [&] { return tag + ": monomial identity fails on sample " + std::to_string(s); });
        }
      }
    }
  }
  return {single.result("each basic move changes a single edge coordinate", std::to_string(pairs) + " adjacent pairs"),
          formula.result("exponent (1+delta) a b for flops, a b for fusion/splitting",
                         std::to_string(flops_plain) + " flops below the seam (exponent a b), " +
                             std::to_string(flops_doubled) + " above (exponent 2 a b), " + std::to_string(fusions) +
                             " fusions, " + std::to_string(splittings) + " splittings"),
          identity.result("x^mu' / x^mu = phi_e^m on seeded configurations")};
}

// ---------------------------------------------------------------------------
// Metric trees

/// The two-level example with six leaves used throughout the tests.
inline ColoredTree bicolor_tree() {
  return ColoredTree::parse(R"([[[{"c":[1]},{"c":[2]},{"c":[3]}],{"c":[4]}],{"c":[[5,6]]}])");
}

inline std::vector<CheckResult> metric_suite(int max_n, std::uint64_t seed, unsigned precision = 15) {
  detail::Tally dims, duality, admissible, theta_ok;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& t : enumerate_colored_trees(n, false)) {
      const auto cone = cone_basis(t);
      const int want = t.edge_count() - static_cast<int>(t.colored_vertices().size()) + 1;
      dims.expect(cone.dimension == want, [&] {
        return t.code() + ": cone dimension " + std::to_string(cone.dimension) + ", expected " + std::to_string(want);
      });
      duality.expect(cone.dimension + stratum_dimension(t) == n - 1, [&] { return t.code() + ": dimensions do not add to n-1"; });
      Rng rng(seed + static_cast<std::uint64_t>(std::hash<std::string>{}(t.code()) % 1000003));
      const auto lambda = random_admissible_lengths(t, rng);
      bool ok = validate_metric(t, lambda).ok;
      for (const auto& [e, expr] : cone.dependent) {
        Rational s = 0;
        for (const auto& [g, coeff] : expr) s += Rational(coeff) * lambda.at(g);
        ok = ok && s == lambda.at(e);
      }
      admissible.expect(ok, [&] { return t.code() + ": sampled lengths violate the cone description"; });
      if (t.edge_count() > 0) {
        const auto th = theta(t, lambda, precision);
        const Real err = theta_balance_error(th);
        theta_ok.expect(err <= Real("1e-12"), [&] { return t.code() + ": balance error " + err.str(6); });
      }
    }
  }
  detail::Tally bicolor;
  {
    const auto cone = cone_basis(bicolor_tree());
    bicolor.expect(cone.dimension == 4 && cone.independent == std::vector<int>{1, 2, 3, 8},
                   [&] { return "got " + cone.to_json().dump(); });
  }
  return {dims.result("cone dimension = |E| - |V_col| + 1"),
          duality.result("cone dimension + stratum dimension = n - 1"),
          admissible.result("sampled lengths satisfy the cone relations"),
          theta_ok.result("exp(-lambda) is balanced to 1e-12 at " + std::to_string(precision) + " digits"),
          bicolor.result("two-level six-leaf tree: dimension 4, free lengths {1,2,3,8}")};
}

// ---------------------------------------------------------------------------
// Enumeration oracles, built without the shape enumerator

namespace oracle {

/// Catalan numbers by the convolution recurrence.
inline std::vector<Integer> catalan(int k) {
  std::vector<Integer> c{1};
  for (int m = 1; m <= k; ++m) {
    Integer s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c;
}

/// Binary trees on leaves lo..hi as JSON.
inline std::vector<nlohmann::json> binary_trees(int lo, int hi) {
  if (lo == hi) return {nlohmann::json(lo)};
  std::vector<nlohmann::json> out;
  for (int mid = lo; mid < hi; ++mid) {
    for (const auto& l : binary_trees(lo, mid))
      for (const auto& r : binary_trees(mid + 1, hi)) out.push_back(nlohmann::json::array({l, r}));
  }
  return out;
}

/// Ways to place one bivalent colored vertex on every root-leaf path of a
/// binary tree, i.e. antichains of edges cutting all leaves.
inline std::vector<nlohmann::json> colored_levels(const nlohmann::json& b) {
  std::vector<nlohmann::json> out{nlohmann::json{{"c", nlohmann::json::array({b})}}};
  if (b.is_number()) return out;
  for (const auto& l : colored_levels(b[0]))
    for (const auto& r : colored_levels(b[1])) out.push_back(nlohmann::json::array({l, r}));
  return out;
}

inline std::set<std::string> maximal_colored_codes(int n) {
  std::set<std::string> out;
  for (const auto& b : binary_trees(1, n))
    for (const auto& c : colored_levels(b)) out.insert(c.dump());
  return out;
}

}  // namespace oracle

inline std::vector<CheckResult> enumeration_suite(int max_n) {
  detail::Tally colored, uncolored;
  std::string counts;
  const auto cat = oracle::catalan(max_n);
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> got;
    for (const auto& t : enumerate_colored_trees(n, true)) got.insert(t.code());
    const auto want = oracle::maximal_colored_codes(n);
    colored.expect(got == want, [&] {
      return "n=" + std::to_string(n) + ": enumerator " + std::to_string(got.size()) + ", oracle " +
             std::to_string(want.size());
    });
    counts += (counts.empty() ? "" : ",") + std::to_string(got.size());
    const auto k = enumerate_ribbon_trees(n, true).size();
    uncolored.expect(Integer(static_cast<long long>(k)) == cat[n - 1], [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(k) + " binary trees, Catalan " + cat[n - 1].str();
    });
  }
  return {colored.result("maximal colored trees agree with the antichain oracle", "counts " + counts),
          uncolored.result("maximal uncolored trees are counted by Catalan numbers")};
}

inline std::vector<CheckResult> weight_sum_suite(int max_n) {
  detail::Tally sums, example;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& t : enumerate_colored_trees(n, true)) {
      Integer s = 0;
      for (const auto& x : weight_vector(t).entries) s += x;
      sums.expect(s == n * (n - 1) / 2, [&] { return t.code() + ": sum " + s.str(); });
    }
  }
  const auto t = ColoredTree::parse(R"([[{"c":[1]},{"c":[2]}],[{"c":[3]},[{"c":[[4,5]]},{"c":[6]}]]])");
  const IntVec want{2, 16, 6, 1, 4, -14};
  example.expect(weight_vector(t).entries == want, [&] { return intvec_to_json(weight_vector(t).entries).dump(); });
  return {sums.result("weight vectors sum to n(n-1)/2"), example.result("six-leaf example has weight (2,16,6,1,4,-14)")};
}

// ---------------------------------------------------------------------------
// Acceptance criteria

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const { return !checks.empty() && all_passed(checks); }

  nlohmann::json to_json() const {
    return {{"criterion", id}, {"title", title}, {"passed", passed()}, {"checks", checks_to_json(checks)}};
  }
};

constexpr int criterion_count = 11;

namespace detail {

inline Polytope multiplihedron(int n) { return hull(weight_vectors(enumerate_colored_trees(n, true))); }

inline std::string counts_to_string(const std::map<int, int>& m) {
  std::string s;
  for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  return "{" + s + "}";
}

}  // namespace detail

inline Criterion run_criterion(int id, std::uint64_t seed = 1) {
  Criterion c;
  c.id = id;
  auto add = [&c](std::vector<CheckResult> cs) { c.checks.insert(c.checks.end(), cs.begin(), cs.end()); };
  switch (id) {
    case 1: {
      c.title = "hexagon J3";
      const auto trees = enumerate_colored_trees(3, true);
      c.checks.push_back({"6 maximal colored trees with 3 leaves", trees.size() == 6, std::to_string(trees.size()) + " trees"});
      const Polytope P = detail::multiplihedron(3);
      const std::vector<IntVec> want{{1, 2, 0}, {1, 4, -2}, {2, 1, 0}, {2, 4, -3}, {4, 1, -2}, {4, 2, -3}};
      c.checks.push_back({"hull vertices are the six weight vectors", P.dim == 2 && P.vertices == want,
                          "dim " + std::to_string(P.dim) + ", " + std::to_string(P.vertices.size()) + " vertices"});
      const auto f = face_lattice(P).f_vector(P.dim);
      c.checks.push_back({"f-vector (6,6)", f == std::vector<int>{6, 6}, nlohmann::json(f).dump()});
      break;
    }
    case 2: {
      c.title = "J4 facets";
      const auto rep = check_cw_iso(4);
      c.checks.push_back({"3-polytope with 13 facets", rep.dim == 3 && rep.facets == 13,
                          "dim " + std::to_string(rep.dim) + ", " + std::to_string(rep.facets) + " facets"});
      int comp = 0, par = 0;
      for (const auto& d : facet_types(4)) (d.family == FacetDescriptor::Family::Composition ? comp : par)++;
      c.checks.push_back({"7 composition and 6 parenthesization facet types", comp == 7 && par == 6,
                          std::to_string(comp) + " + " + std::to_string(par)});
      c.checks.push_back(rep.checks.back());
      break;
    }
    case 3:
      c.title = "weight-sum invariant";
      add(weight_sum_suite(6));
      break;
    case 4: {
      c.title = "CW isomorphism";
      for (int n = 2; n <= 5; ++n) {
        const auto rep = check_cw_iso(n);
        for (auto r : rep.checks) {
          r.name = "n=" + std::to_string(n) + ": " + r.name;
          c.checks.push_back(r);
        }
        c.checks.push_back({"n=" + std::to_string(n) + ": hull vertices = maximal trees", rep.vertices == rep.maximal_trees,
                            std::to_string(rep.vertices) + " vertices, " + std::to_string(rep.maximal_trees) + " trees"});
      }
      break;
    }
    case 5:
      c.title = "monomial ratios of basic moves";
      add(monomial_suite(5, 100, seed));
      break;
    case 6:
      c.title = "cross-ratio identities";
      add(cross_ratio_suite(5, 100, seed));
      break;
    case 7:
      c.title = "chart round trips";
      add(chart_suite(4, 100, seed));
      break;
    case 8:
      c.title = "decode of the canonical embedding";
      add(decode_suite(4, 20, seed));
      break;
    case 9:
      c.title = "metric cones";
      add(metric_suite(5, seed, 15));
      break;
    case 10: {
      c.title = "weighted-disk counts";
      const auto r3 = weighted_report(3, CellRule::EqualitySplit);
      c.checks.push_back({"n=3: an interval", r3.cells == std::map<int, int>{{0, 2}, {1, 1}},
                          detail::counts_to_string(r3.cells)});
      const auto cells4 = enumerate_weighted_strata(4);
      int squares = 0, triangles = 0;
      for (const auto& s : cells4) {
        if (s.dimension != 2) continue;
        (s.tree_dimension == 1 && s.free_classes() == 1 ? squares : triangles) += 1;
      }
      const auto r4 = weighted_report(4, CellRule::EqualitySplit);
      c.checks.push_back({"n=4: square + two triangles glued into a hexagon",
                          squares == 1 && triangles == 2 && r4.boundary_cells == std::map<int, int>{{0, 6}, {1, 6}},
                          std::to_string(squares) + " square, " + std::to_string(triangles) + " triangles, boundary " +
                              detail::counts_to_string(r4.boundary_cells)});
      std::string per_rule;
      bool any = false;
      for (auto rule : {CellRule::EqualitySplit, CellRule::ProductFace}) {
        const auto r = weighted_report(5, rule);
        const int total = r.boundary_cells.count(2) ? r.boundary_cells.at(2) : 0;
        auto at = [&](int k) { return r.boundary_2cells_by_tree_dim.count(k) ? r.boundary_2cells_by_tree_dim.at(k) : 0; };
        const bool match = total == 23 && at(2) == 2 && at(1) == 10 && at(0) == 11;
        any |= match;
        per_rule += std::string(per_rule.empty() ? "" : "; ") + to_string(rule) + ": " + std::to_string(total) + " = (" +
                    std::to_string(at(2)) + "," + std::to_string(at(1)) + "," + std::to_string(at(0)) + ")" +
                    (match ? "" : " [differs from 23 = (2,10,11)]");
        if (rule == CellRule::EqualitySplit) {
          c.checks.push_back({"n=5: 23 boundary 2-cells = (2,10,11) under the default rule", match, per_rule});
        }
      }
      c.checks.push_back({"some implemented rule reproduces 23", any, per_rule});
      break;
    }
    case 11:
      c.title = "enumeration cross-checks";
      add(enumeration_suite(5));
      break;
    default:
      throw DomainError("unknown criterion " + std::to_string(id) + " (expected 1.." + std::to_string(criterion_count) + ")");
  }
  return c;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_VERIFY_HPP
