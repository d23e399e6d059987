#ifndef TDIFF_GENERATORS_HPP
#define TDIFF_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/network.hpp"

namespace tdiff {

/// A generated network plus the ids of its named nodes ("A", "B", "C", ...).
struct Gadget {
  Network network;
  std::vector<std::pair<std::string, NodeId>> roles;

  [[nodiscard]] NodeId role(std::string_view name) const {
    for (const auto& [r, id] : roles) {
      if (r == name) return id;
    }
    throw ArgumentError("gadget has no node named '" + std::string(name) + "'");
  }
};

/// Scales positive rationals so that they sum to `total`.
inline std::vector<Rational> normalize_partition(const std::vector<Rational>& a, Rational total) {
  if (a.empty()) throw ArgumentError("partition instance is empty");
  Rational sum;
  for (const Rational& x : a) {
    if (!x.is_positive()) throw ArgumentError("partition numbers must be positive, got " + x.str());
    sum += x;
  }
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& x : a) out.push_back(x * total / sum);
  return out;
}

namespace detail {
/// Layer nodes 0..n-1 without in-neighbours offering {t1,t2}, feeding A and B
/// with weights a_i each.
inline std::pair<NodeId, NodeId> partition_layer(NetworkBuilder& b, const std::vector<Rational>& a,
                                                 Rational theta_ab, std::vector<std::pair<std::string, NodeId>>& roles) {
  const ProductSet both = b.products({"t1", "t2"});
  for (std::size_t k = 0; k < a.size(); ++k) {
    roles.emplace_back("L" + std::to_string(k), b.add_node(both, Rational(1)));
  }
  const NodeId node_a = b.add_node(both, theta_ab);
  const NodeId node_b = b.add_node(both, theta_ab);
  for (std::size_t k = 0; k < a.size(); ++k) {
    b.add_edge(static_cast<NodeId>(k), node_a, a[k]);
    b.add_edge(static_cast<NodeId>(k), node_b, a[k]);
  }
  roles.emplace_back("A", node_a);
  roles.emplace_back("B", node_b);
  return {node_a, node_b};
}
}  // namespace detail

/// FINAL gadget. Numbers normalized to sum 1/2; θ(A) = θ(B) = 3/4; anchors
/// X = {t1} → A and Y = {t2} → B with weight 1/2. A can only ever adopt t1 and
/// B only t2, so every node adopts in some final network iff the numbers split
/// into two halves of 1/4.
inline Gadget gen_final_gadget(const std::vector<Rational>& numbers) {
  const auto a = normalize_partition(numbers, Rational(1, 2));
  NetworkBuilder b({"t1", "t2"});
  std::vector<std::pair<std::string, NodeId>> roles;
  auto [node_a, node_b] = detail::partition_layer(b, a, Rational(3, 4), roles);
  const NodeId x = b.add_node({"t1"}, Rational(1));
  const NodeId y = b.add_node({"t2"}, Rational(1));
  b.add_edge(x, node_a, Rational(1, 2));
  b.add_edge(y, node_b, Rational(1, 2));
  roles.emplace_back("X", x);
  roles.emplace_back("Y", y);
  return Gadget{b.build(), std::move(roles)};
}

/// ADOPTION 1 gadget. Numbers normalized to sum 1; θ(A) = θ(B) = 1/2;
/// A, B → C with weight 1/2 and θ(C) = 1. C stays unadopted in some final
/// network iff the numbers split evenly.
inline Gadget gen_adoption1_gadget(const std::vector<Rational>& numbers) {
  const auto a = normalize_partition(numbers, Rational(1));
  NetworkBuilder b({"t1", "t2"});
  std::vector<std::pair<std::string, NodeId>> roles;
  auto [node_a, node_b] = detail::partition_layer(b, a, Rational(1, 2), roles);
  const NodeId c = b.add_node({"t1", "t2"}, Rational(1));
  b.add_edge(node_a, c, Rational(1, 2));
  b.add_edge(node_b, c, Rational(1, 2));
  roles.emplace_back("C", c);
  return Gadget{b.build(), std::move(roles)};
}

/// ADOPTION 2 gadget over {t1,t2,t3}. On top of the ADOPTION 1 layer:
///   C = {t1,t3}, θ 1/2, fed by A and the t3-seed SC (1/2 each);
///   D = {t2,t3}, θ 1/2, fed by B and the t3-seed SD (1/2 each);
///   E = {t1,t2,t3}, θ 1/2+eps, fed by C and D (1/2-eps each) and the t3-seed
///   SE (2 eps).
/// E reaches its threshold only in t3, and only once C or D adopted t3. It
/// avoids t3 in some final network iff C adopts t1 and D adopts t2 together,
/// i.e. iff the numbers split evenly. Requires 0 < eps < 1/2.
inline Gadget gen_adoption2_gadget(const std::vector<Rational>& numbers, Rational eps) {
  const Rational half(1, 2);
  if (!eps.is_positive() || eps >= half) throw ArgumentError("eps must lie in (0, 1/2), got " + eps.str());
  const auto a = normalize_partition(numbers, Rational(1));
  NetworkBuilder b({"t1", "t2", "t3"});
  std::vector<std::pair<std::string, NodeId>> roles;
  auto [node_a, node_b] = detail::partition_layer(b, a, half, roles);
  const NodeId c = b.add_node({"t1", "t3"}, half);
  const NodeId d = b.add_node({"t2", "t3"}, half);
  const NodeId e = b.add_node({"t1", "t2", "t3"}, half + eps);
  const NodeId sc = b.add_node({"t3"}, Rational(1));
  const NodeId sd = b.add_node({"t3"}, Rational(1));
  const NodeId se = b.add_node({"t3"}, Rational(1));
  b.add_edge(node_a, c, half);
  b.add_edge(sc, c, half);
  b.add_edge(node_b, d, half);
  b.add_edge(sd, d, half);
  b.add_edge(c, e, half - eps);
  b.add_edge(d, e, half - eps);
  b.add_edge(se, e, eps + eps);
  for (auto [name, id] : {std::pair{"C", c}, {"D", d}, {"E", e}, {"SC", sc}, {"SD", sd}, {"SE", se}}) {
    roles.emplace_back(name, id);
  }
  return Gadget{b.build(), std::move(roles)};
}

/// MIN-ADOPTION gadget: the ADOPTION 2 gadget with a chain K1..KM hanging off
/// E (weight-1 edges, θ = 1, all three products). The fewest t3-adopters is 3
/// (the seeds) when the numbers split evenly and M+5 otherwise.
inline Gadget gen_min_adoption_gadget(const std::vector<Rational>& numbers, Rational eps,
                                      std::size_t chain_length) {
  if (chain_length < 1) throw ArgumentError("chain length must be at least 1");
  const Rational half(1, 2);
  if (!eps.is_positive() || eps >= half) throw ArgumentError("eps must lie in (0, 1/2), got " + eps.str());
  Gadget base = gen_adoption2_gadget(numbers, eps);
  const Network& net = base.network;
  NetworkBuilder b(net.product_names());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    const ProductSet p = net.availability(i);
    const NodeId id = b.add_node(p, Rational(1));
    for (ProductId t : p) b.set_threshold(id, t, net.threshold(i, t));
  }
  for (const Edge& e : net.graph().edges()) b.add_edge(e.source, e.target, e.weight);
  NodeId prev = base.role("E");
  for (std::size_t k = 0; k < chain_length; ++k) {
    const NodeId next = b.add_node({"t1", "t2", "t3"}, Rational(1));
    b.add_edge(prev, next, Rational(1));
    base.roles.emplace_back("K" + std::to_string(k + 1), next);
    prev = next;
  }
  return Gadget{b.build(), std::move(base.roles)};
}

/// Four-node network with two outcomes: S1 = {t1} → M (weight 1, θ 1),
/// M → C and S2 = {t2} → C (1/2 each, θ 1/2). The fast run lets M take t1 and
/// C take t2, after which C could switch to t1.
inline Gadget gen_switch_witness() {
  NetworkBuilder b({"t1", "t2"});
  const NodeId s1 = b.add_node({"t1"}, Rational(1));
  const NodeId s2 = b.add_node({"t2"}, Rational(1));
  const NodeId m = b.add_node({"t1", "t2"}, Rational(1));
  const NodeId c = b.add_node({"t1", "t2"}, Rational(1, 2));
  b.add_edge(s1, m, Rational(1));
  b.add_edge(m, c, Rational(1, 2));
  b.add_edge(s2, c, Rational(1, 2));
  return Gadget{b.build(), {{"S1", s1}, {"S2", s2}, {"M", m}, {"C", c}}};
}

struct RandomSpec {
  std::size_t nodes = 6;
  std::size_t products = 2;
  /// Probability of each ordered pair (j, i), j ≠ i, being an edge.
  double density = 0.3;
  /// Weights 1/|N(i)| instead of random weights.
  bool equitable = false;
  Rational theta_min{1, 12};
  Rational theta_max{1};
  std::uint64_t seed = 1;
  /// Probability of a node starting with a single (already adopted) product.
  double adopted_fraction = 0.3;
  /// Give nodes without in-neighbours a single product.
  bool isolated_adopted = false;
};

namespace detail {
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  /// Uniform in (0, 1].
  double unit() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }
  bool chance(double p) { return unit() <= p; }

 private:
  std::mt19937_64 engine_;
};

/// Thresholds drawn from fractions with small denominators so that sums of
/// weights hit them exactly.
inline std::vector<Rational> threshold_grid(Rational lo, Rational hi) {
  std::vector<Rational> grid;
  for (std::int64_t den : {1, 2, 3, 4, 5, 6, 8, 10, 12}) {
    for (std::int64_t num = 1; num <= den; ++num) {
      Rational r(num, den);
      if (r >= lo && r <= hi) grid.push_back(r);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}
}  // namespace detail

/// Deterministic pseudo-random network: equal specs give identical networks.
inline Network gen_random(const RandomSpec& spec) {
  if (spec.products == 0 || spec.products > kMaxProducts) throw ArgumentError("product count must be in 1..64");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw ArgumentError("density must lie in [0,1]");
  if (!(spec.adopted_fraction >= 0.0 && spec.adopted_fraction <= 1.0)) {
    throw ArgumentError("adopted fraction must lie in [0,1]");
  }
  if (!spec.theta_min.is_positive() || spec.theta_max > Rational(1) || spec.theta_min > spec.theta_max) {
    throw ArgumentError("threshold range must satisfy 0 < min <= max <= 1");
  }
  const auto grid = detail::threshold_grid(spec.theta_min, spec.theta_max);
  if (grid.empty()) throw ArgumentError("threshold range contains no grid value");

  detail::SeededStream rng(spec.seed);
  const std::size_t n = spec.nodes;
  std::vector<std::string> names;
  for (std::size_t t = 0; t < spec.products; ++t) names.push_back("t" + std::to_string(t + 1));

  std::vector<Edge> edges;
  std::vector<std::size_t> indeg(n, 0);
  const double skip_base = spec.density < 1.0 ? std::log1p(-spec.density) : 0.0;
  for (NodeId i = 0; i < n; ++i) {
    if (n < 2 || spec.density <= 0.0) continue;
    const std::size_t first_edge = edges.size();
    // Geometric skipping over the n-1 candidate sources.
    for (std::size_t pos = 0;;) {
      if (spec.density < 1.0) pos += static_cast<std::size_t>(std::floor(std::log(rng.unit()) / skip_base));
      if (pos >= n - 1) break;
      const auto j = static_cast<NodeId>(pos < i ? pos : pos + 1);
      edges.push_back(Edge{j, i, Rational(0)});
      ++pos;
    }
    const std::size_t d = edges.size() - first_edge;
    indeg[i] = d;
    if (d == 0) continue;
    if (spec.equitable) {
      for (std::size_t k = first_edge; k < edges.size(); ++k) {
        edges[k].weight = Rational(1, static_cast<std::int64_t>(d));
      }
    } else {
      std::vector<std::int64_t> raw(d);
      std::int64_t total = static_cast<std::int64_t>(rng.below(d + 1));
      for (auto& r : raw) {
        r = 1 + static_cast<std::int64_t>(rng.below(4));
        total += r;
      }
      for (std::size_t k = 0; k < d; ++k) edges[first_edge + k].weight = Rational(raw[k], total);
    }
  }

  const ProductSet universe = ProductSet::first(spec.products);
  std::vector<ProductSet> avail(n);
  for (NodeId i = 0; i < n; ++i) {
    const bool single = spec.products == 1 || rng.chance(spec.adopted_fraction) ||
                        (spec.isolated_adopted && indeg[i] == 0);
    if (single) {
      avail[i] = ProductSet::single(static_cast<ProductId>(rng.below(spec.products)));
      continue;
    }
    ProductSet p;
    do {
      p = ProductSet(rng.below(universe.bits()) + 1) & universe;
    } while (p.size() < 2);
    avail[i] = p;
  }

  std::vector<Rational> theta(n * spec.products, Rational(1));
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < spec.products; ++t) theta[i * spec.products + t] = grid[rng.below(grid.size())];
  }
  return Network(WeightedDigraph(n, std::move(edges)), std::move(names), std::move(avail), std::move(theta));
}

}  // namespace tdiff

#endif  // TDIFF_GENERATORS_HPP
