#ifndef MULTIQUILT_CONFIGURATIONS_HPP
#define MULTIQUILT_CONFIGURATIONS_HPP

// Points of the moduli of quilted disks on the ordered real locus.
//
// Half-plane model: z_0 sits at infinity, the markings z_1 < ... < z_n lie on
// the real line and the seam is the horizontal line at height y.

#include "multiquilt/random.hpp"
#include "multiquilt/rational.hpp"
#include "multiquilt/trees.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiquilt {

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline nlohmann::json rational_to_json(const Rational& q) {
  return {{"n", numerator(q).str()}, {"d", denominator(q).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("n") && j.contains("d")) {
    Rational q = parse_rational(j.at("n").get<std::string>() + "/" + j.at("d").get<std::string>());
    return q;
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected rational {\"n\": ..., \"d\": ...}, got " + j.dump());
}

/// Interior point: gaps x_i = z_{i+1} - z_i and seam height y, up to scale.
struct Configuration {
  std::vector<Rational> x;
  Rational y;

  int n() const { return static_cast<int>(x.size()) + 1; }

  void validate() const {
    if (x.empty()) throw ValidationError("configuration needs at least one gap (n >= 2)");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] <= 0) throw ValidationError("gap x_" + std::to_string(i + 1) + " is not positive");
    }
    if (y <= 0) throw ValidationError("seam height y is not positive");
  }

  /// Marking positions with z_1 = 0.
  std::vector<Rational> positions() const {
    std::vector<Rational> z{Rational(0)};
    for (const auto& g : x) z.push_back(z.back() + g);
    return z;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

  nlohmann::json to_json() const {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& g : x) xs.push_back(rational_to_json(g));
    return {{"x", xs}, {"y", rational_to_json(y)}};
  }

  static Configuration from_json(const nlohmann::json& j) {
    Configuration c;
    for (const auto& g : j.at("x")) c.x.push_back(rational_from_json(g));
    c.y = rational_from_json(j.at("y"));
    c.validate();
    return c;
  }
};

/// Representative of the projective class with y = 1.
inline Configuration normalize(const Configuration& c) {
  c.validate();
  Configuration out = c;
  for (auto& g : out.x) g /= c.y;
  out.y = 1;
  return out;
}

inline Configuration random_config(int n, Rng& rng) {
  if (n < 2) throw DomainError("random_config: need n >= 2");
  Configuration c;
  for (int i = 1; i < n; ++i) c.x.push_back(rng.positive_rational());
  c.y = rng.positive_rational();
  return c;
}

inline Configuration random_config(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_config(n, rng);
}

/// A point of the compactified moduli: its combinatorial type plus, for each
/// internal vertex, the positions of the special points of that component
/// (one per child, in planar order; the root direction is at infinity).
///
/// Gauge: the first position is 0; on an uncolored component the second is
/// 1; on a colored component the seam has height 1.
struct NodalConfiguration {
  ColoredTree type;
  std::map<int, std::vector<Rational>> components;

  const std::vector<Rational>& positions(int v) const {
    auto it = components.find(v);
    if (it == components.end()) throw ValidationError("no positions for component " + std::to_string(v));
    return it->second;
  }

  /// Throws ValidationError naming the offending component.
  void validate() const {
    if (auto why = type.stability_violation()) throw ValidationError("unstable type: " + *why);
    if (static_cast<int>(components.size()) != type.vertex_count()) {
      throw ValidationError("expected " + std::to_string(type.vertex_count()) + " components, got " +
                            std::to_string(components.size()));
    }
    for (int v = 0; v < type.vertex_count(); ++v) {
      const auto& p = positions(v);
      const std::string where = "component " + std::to_string(v);
      if (p.size() != type.children(v).size()) {
        throw ValidationError(where + ": " + std::to_string(p.size()) + " positions for " +
                              std::to_string(type.children(v).size()) + " special points");
      }
      if (p[0] != 0) throw ValidationError(where + ": first special point must be at 0");
      if (!type.is_colored(v) && p[1] != 1) {
        throw ValidationError(where + ": second special point of an uncolored component must be at 1");
      }
      for (std::size_t k = 1; k < p.size(); ++k) {
        if (p[k] <= p[k - 1]) throw ValidationError(where + ": positions not strictly increasing");
      }
    }
  }

  friend bool operator==(const NodalConfiguration& a, const NodalConfiguration& b) {
    return a.type == b.type && a.components == b.components;
  }

  nlohmann::json to_json() const {
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& [v, ps] : components) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& q : ps) arr.push_back(rational_to_json(q));
      comps[std::to_string(v)] = arr;
    }
    return {{"tree", type.to_json()}, {"components", comps}};
  }

  static NodalConfiguration from_json(const nlohmann::json& j) {
    NodalConfiguration s;
    s.type = ColoredTree::from_json(j.at("tree"));
    for (const auto& [key, arr] : j.at("components").items()) {
      std::vector<Rational> ps;
      for (const auto& q : arr) ps.push_back(rational_from_json(q));
      s.components[std::stoi(key)] = std::move(ps);
    }
    s.validate();
    return s;
  }
};

/// Wraps an interior configuration as a one-component nodal object.
inline NodalConfiguration to_nodal(const Configuration& c) {
  const Configuration g = normalize(c);
  NodalConfiguration s;
  s.type = colored_corolla(g.n());
  s.components[0] = g.positions();
  return s;
}

/// Inverse of to_nodal on the open stratum.
inline Configuration to_configuration(const NodalConfiguration& s) {
  s.validate();
  if (s.type.vertex_count() != 1) throw DomainError("to_configuration: configuration is nodal");
  const auto& p = s.positions(0);
  Configuration c;
  for (std::size_t k = 1; k < p.size(); ++k) c.x.push_back(p[k] - p[k - 1]);
  c.y = 1;
  return c;
}

inline ColoredTree combinatorial_type(const NodalConfiguration& s) {
  s.validate();
  return s.type;
}

/// Random point of the stratum of type t, in the canonical gauge.
inline NodalConfiguration random_nodal(const ColoredTree& t, Rng& rng) {
  NodalConfiguration s;
  s.type = t;
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::vector<Rational> p{Rational(0)};
    const int k = static_cast<int>(t.children(v).size());
    if (!t.is_colored(v) && k >= 2) p.emplace_back(1);
    while (static_cast<int>(p.size()) < k) p.push_back(p.back() + rng.positive_rational());
    s.components[v] = std::move(p);
  }
  return s;
}

}  // namespace multiquilt

#endif  // MULTIQUILT_CONFIGURATIONS_HPP
