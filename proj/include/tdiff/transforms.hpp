#ifndef TDIFF_TRANSFORMS_HPP
#define TDIFF_TRANSFORMS_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/network.hpp"
#include "tdiff/oracle.hpp"

namespace tdiff {

enum class AuxKind {
  /// a_{S,t,i}: fires when every member of S adopted t.
  Subset,
  /// a_{t,i}: fires when i's original neighbourhood would let i adopt t.
  Product,
  /// Wired i → a → i for a node with no qualifying subset; never fires.
  Blocker,
};

struct AuxNode {
  NodeId id = 0;
  AuxKind kind = AuxKind::Product;
  ProductId product = 0;
  NodeId target = 0;
  /// Members of S for Subset nodes, ascending.
  std::vector<NodeId> subset;
};

/// Bookkeeping of an edge-subdivision transform. Original nodes keep their
/// ids 0..original_count-1; auxiliary nodes follow. The neutral product t0 is
/// appended after the original products.
struct TransformMap {
  std::size_t original_count = 0;
  ProductId neutral = 0;
  std::vector<AuxNode> aux;
};

struct Transformed {
  Network network;
  TransformMap map;
};

inline constexpr std::size_t kDefaultAuxCap = 4096;

namespace detail {

inline std::string neutral_name(const std::vector<std::string>& names) {
  std::string name = "t0";
  while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
  return name;
}

/// Assembles the transformed network: nodes listed by `build` are added with
/// product-independent thresholds, and every in-edge is reweighted to
/// 1/|N(i)|.
class TransformBuilder {
 public:
  explicit TransformBuilder(const Network& net) : net_(net) {
    names_ = net.product_names();
    map_.original_count = net.node_count();
    map_.neutral = static_cast<ProductId>(names_.size());
    names_.push_back(neutral_name(names_));
    if (names_.size() > kMaxProducts) throw ArgumentError("no room for the neutral product");
    for (NodeId i = 0; i < net.node_count(); ++i) {
      avail_.push_back(net.availability(i));
      Rational th = 0;
      for (ProductId t : net.availability(i)) th = std::max(th, net.threshold(i, t));
      theta_.push_back(th);
    }
  }

  void set_threshold(NodeId i, Rational th) { theta_[i] = th; }
  void keep_in_edges(NodeId i) {
    for (const Arc& a : net_.graph().in_arcs(i)) sources_.push_back({a.node, i});
  }
  void add_edge(NodeId s, NodeId t) { sources_.push_back({s, t}); }

  NodeId add_aux(AuxKind kind, ProductId t, NodeId target, std::vector<NodeId> subset, Rational th) {
    const auto id = static_cast<NodeId>(avail_.size());
    ProductSet p = ProductSet::single(t);
    p.insert(map_.neutral);
    avail_.push_back(p);
    theta_.push_back(th);
    map_.aux.push_back(AuxNode{id, kind, t, target, std::move(subset)});
    return id;
  }

  Transformed finish() {
    const std::size_t n = avail_.size();
    std::vector<std::size_t> indeg(n, 0);
    for (auto [s, t] : sources_) ++indeg[t];
    std::vector<Edge> edges;
    edges.reserve(sources_.size());
    for (auto [s, t] : sources_) {
      edges.push_back(Edge{s, t, Rational(1, static_cast<std::int64_t>(indeg[t]))});
    }
    const std::size_t pc = names_.size();
    std::vector<Rational> flat(n * pc, Rational(1));
    for (NodeId i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < pc; ++t) flat[i * pc + t] = theta_[i];
    }
    Network out(WeightedDigraph(n, std::move(edges)), names_, avail_, std::move(flat));
    return Transformed{std::move(out), std::move(map_)};
  }

 private:
  const Network& net_;
  std::vector<std::string> names_;
  std::vector<ProductSet> avail_;
  std::vector<Rational> theta_;
  std::vector<std::pair<NodeId, NodeId>> sources_;
  TransformMap map_;
};

inline bool needs_rewiring(const Network& net, NodeId i) {
  return net.graph().has_in_neighbors(i) && net.availability(i).size() >= 2;
}

}  // namespace detail

/// Minimal subsets S of {j ∈ N(i) : t ∈ p(j)} with Σ_{j∈S} w_ji ≥ θ(i,t),
/// each listed in ascending node order; the list is ordered by bitmask over
/// the candidates.
inline std::vector<std::vector<NodeId>> minimal_support_sets(const Network& net, NodeId i, ProductId t) {
  std::vector<Arc> cand;
  for (const Arc& a : net.graph().in_arcs(i)) {
    if (net.availability(a.node).contains(t)) cand.push_back(a);
  }
  if (cand.size() > 24) throw ResourceError("too many candidate neighbours for subset enumeration", cand.size());
  const Rational th = net.threshold(i, t);
  const std::uint32_t full = (std::uint32_t{1} << cand.size());
  auto weight_of = [&](std::uint32_t mask) {
    Rational w;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if ((mask >> k) & 1u) w += cand[k].weight;
    }
    return w;
  };
  std::vector<std::vector<NodeId>> out;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const Rational w = weight_of(mask);
    if (w < th) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < cand.size() && minimal; ++k) {
      if (((mask >> k) & 1u) && w - cand[k].weight >= th) minimal = false;
    }
    if (!minimal) continue;
    std::vector<NodeId> s;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if ((mask >> k) & 1u) s.push_back(cand[k].node);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// First transformation: arbitrary network to an equitable one with
/// product-independent thresholds. Each node i with in-neighbours and at
/// least two products loses its in-edges; for every t ∈ p(i) and every
/// minimal support set S an auxiliary a_{S,t,i} with p = {t, t0} and θ = 1 is
/// wired S → a → i, and θ(i) := 1/(2^{|N(i)|}|p(i)|).
inline Transformed transform_general(const Network& net, std::size_t aux_cap = kDefaultAuxCap) {
  std::size_t bound = 0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (!detail::needs_rewiring(net, i)) continue;
    const std::size_t deg = net.graph().in_degree(i);
    if (deg >= 40) throw ResourceError("in-degree too large for the subset transform", deg);
    bound += (std::size_t{1} << deg) * net.availability(i).size();
    if (bound > aux_cap) {
      throw ResourceError("subset transform may need " + std::to_string(bound) +
                              " auxiliary nodes, cap is " + std::to_string(aux_cap),
                          bound);
    }
  }

  detail::TransformBuilder b(net);
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (!detail::needs_rewiring(net, i)) {
      b.keep_in_edges(i);
      continue;
    }
    const std::size_t deg = net.graph().in_degree(i);
    const ProductSet p = net.availability(i);
    b.set_threshold(i, Rational(1, static_cast<std::int64_t>((std::size_t{1} << deg) * p.size())));
    bool any = false;
    for (ProductId t : p) {
      for (auto& s : minimal_support_sets(net, i, t)) {
        std::vector<NodeId> members = s;
        const NodeId a = b.add_aux(AuxKind::Subset, t, i, std::move(s), Rational(1));
        for (NodeId j : members) b.add_edge(j, a);
        b.add_edge(a, i);
        any = true;
      }
    }
    if (!any) {
      const NodeId a = b.add_aux(AuxKind::Blocker, p.front(), i, {}, Rational(1));
      b.add_edge(i, a);
      b.add_edge(a, i);
    }
  }
  return b.finish();
}

/// Second transformation, for equitable networks: one auxiliary a_{t,i} per
/// product with p = {t, t0}, θ(a) := θ(i,t), wired N(i) → a → i, and
/// θ(i) := 1/|p(i)|. At most n(|P|+1) nodes.
inline Transformed transform_equitable(const Network& net) {
  if (!is_equitable(net)) throw PreconditionError("transform_equitable needs an equitable network");
  detail::TransformBuilder b(net);
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (!detail::needs_rewiring(net, i)) {
      b.keep_in_edges(i);
      continue;
    }
    const ProductSet p = net.availability(i);
    b.set_threshold(i, Rational(1, static_cast<std::int64_t>(p.size())));
    for (ProductId t : p) {
      const NodeId a = b.add_aux(AuxKind::Product, t, i, {}, net.threshold(i, t));
      for (const Arc& arc : net.graph().in_arcs(i)) b.add_edge(arc.node, a);
      b.add_edge(a, i);
    }
  }
  return b.finish();
}

/// Availability of the original nodes only.
inline std::vector<ProductSet> restrict_to_original(std::span<const ProductSet> transformed,
                                                    const TransformMap& map) {
  return {transformed.begin(), transformed.begin() + static_cast<std::ptrdiff_t>(map.original_count)};
}

/// Both directions of the final-network correspondence, by enumeration:
/// every original final is the restriction of some transformed final, and
/// every transformed final restricts to an original final.
inline bool check_correspondence(const Network& original, const Network& transformed,
                                 const TransformMap& map, std::size_t budget = kDefaultStateBudget) {
  if (map.original_count != original.node_count() || transformed.node_count() < map.original_count) {
    throw ArgumentError("transform map does not match the networks");
  }
  const FinalSet lhs = enumerate(original, budget);
  const FinalSet rhs = enumerate(transformed, budget);
  std::set<std::vector<ProductSet>> original_finals;
  for (const Network& f : lhs.finals) original_finals.emplace(f.availability().begin(), f.availability().end());
  std::set<std::vector<ProductSet>> restricted;
  for (const Network& f : rhs.finals) restricted.insert(restrict_to_original(f.availability(), map));
  return original_finals == restricted;
}

}  // namespace tdiff

#endif  // TDIFF_TRANSFORMS_HPP
