#ifndef TDIFF_CONTRACTION_HPP
#define TDIFF_CONTRACTION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tdiff/errors.hpp"
#include "tdiff/network.hpp"
#include "tdiff/trace.hpp"

namespace tdiff {

struct UniqueOutcome {
  friend bool operator==(const UniqueOutcome&, const UniqueOutcome&) = default;
};

/// node can adopt every product in `products` (at least two).
struct AmbivalentMultiAdopt {
  NodeId node = 0;
  ProductSet products;
  friend bool operator==(const AmbivalentMultiAdopt&, const AmbivalentMultiAdopt&) = default;
};

/// node adopted `from` but has enough `to`-adopting neighbours to have taken `to`.
struct AmbivalentSwitch {
  NodeId node = 0;
  ProductId from = 0;
  ProductId to = 0;
  friend bool operator==(const AmbivalentSwitch&, const AmbivalentSwitch&) = default;
};

using ContractionVerdict = std::variant<UniqueOutcome, AmbivalentMultiAdopt, AmbivalentSwitch>;

struct ContractionResult {
  ReductionTrace trace;
  /// Final network, or the first ambivalent network of the sequence.
  Network terminal;
  ContractionVerdict verdict;

  [[nodiscard]] bool unique() const { return std::holds_alternative<UniqueOutcome>(verdict); }
};

/// A product t' ≠ t that i could have adopted instead of the product t it
/// adopted in `current`, counting only t'-adopters of `current` and requiring
/// t' ∈ p(i) in `initial`. Lowest such t', if any.
inline std::optional<std::pair<ProductId, ProductId>> can_switch(const Network& initial,
                                                                 const Network& current, NodeId i) {
  initial.check_node(i);
  current.check_node(i);
  const auto adopted = current.adopted(i);
  if (!adopted) return std::nullopt;
  for (ProductId alt : initial.availability(i)) {
    if (alt == *adopted) continue;
    if (adopter_weight(current, i, alt) >= initial.threshold(i, alt)) {
      return std::make_pair(*adopted, alt);
    }
  }
  return std::nullopt;
}

inline bool is_ambivalent(const Network& initial, const Network& current) {
  for (NodeId i = 0; i < current.node_count(); ++i) {
    if (adoptable_products(current, i).size() >= 2) return true;
    if (can_switch(initial, current, i)) return true;
  }
  return false;
}

/// Runs the contraction sequence: fast reductions until the network is final
/// or ambivalent given the initial one.
///
/// S[j][t] accumulates the weight into j from neighbours that adopted t, for t
/// in the initial p(j). Only nodes adopting in the previous round push weight,
/// so each edge is examined once, right after its source adopts. A round's
/// touched nodes are inspected before anything is adopted: two satisfied
/// products on an unadopted node is a multi-adopt, on an adopted node a switch,
/// and either stops the sequence at the current network.
inline ContractionResult contraction_sequence(const Network& net) {
  const auto& g = net.graph();
  const std::size_t n = net.node_count();
  const std::size_t pc = net.product_count();
  const auto initial = net.availability();

  for (NodeId i = 0; i < n; ++i) {
    if (!g.has_in_neighbors(i) && initial[i].size() >= 2) {
      return ContractionResult{{}, net, AmbivalentMultiAdopt{i, initial[i]}};
    }
  }

  std::vector<ProductSet> cur(initial.begin(), initial.end());
  std::vector<NodeId> last;
  for (NodeId i = 0; i < n; ++i) {
    if (cur[i].is_singleton()) last.push_back(i);
  }

  std::vector<Rational> weight_from(n * pc);
  std::vector<std::size_t> stamp(n, 0);
  std::vector<NodeId> touched;
  std::vector<ProductSet> satisfied_of(n);
  std::vector<AdoptionEvent> step;
  ReductionTrace trace;

  auto current_network = [&] { return net.with_availability(cur); };

  for (std::size_t round = 1; !last.empty(); ++round) {
    touched.clear();
    for (NodeId i : last) {
      const ProductId t = cur[i].front();
      for (const Arc& a : g.out_arcs(i)) {
        const NodeId j = a.node;
        if (initial[j].contains(t)) weight_from[j * pc + t] += a.weight;
        if (stamp[j] != round) {
          stamp[j] = round;
          touched.push_back(j);
        }
      }
    }
    std::sort(touched.begin(), touched.end());

    for (NodeId j : touched) {
      ProductSet sat;
      for (ProductId t : initial[j]) {
        if (weight_from[j * pc + t] >= net.threshold(j, t)) sat.insert(t);
      }
      satisfied_of[j] = sat;
      if (sat.size() < 2) continue;
      if (cur[j].is_singleton()) {
        const ProductId from = cur[j].front();
        ProductSet others = sat;
        others.erase(from);
        return ContractionResult{std::move(trace), current_network(),
                                 AmbivalentSwitch{j, from, others.front()}};
      }
      return ContractionResult{std::move(trace), current_network(), AmbivalentMultiAdopt{j, sat}};
    }

    step.clear();
    last.clear();
    for (NodeId j : touched) {
      const ProductSet sat = satisfied_of[j];
      if (sat.size() == 1 && !cur[j].is_singleton()) {
        cur[j] = sat;
        step.push_back(AdoptionEvent{j, sat.front()});
        last.push_back(j);
      }
    }
    if (!step.empty()) trace.push_step(step);
  }
  return ContractionResult{std::move(trace), current_network(), UniqueOutcome{}};
}

inline bool has_unique_outcome(const Network& net) { return contraction_sequence(net).unique(); }

/// With every θ(i,t) > 1/2 a network has a unique outcome iff every node
/// without in-neighbours already adopted a product.
inline bool unique_outcome_high_threshold(const Network& net) {
  const Rational half(1, 2);
  for (NodeId i = 0; i < net.node_count(); ++i) {
    for (ProductId t : net.availability(i)) {
      if (net.threshold(i, t) <= half) {
        throw PreconditionError("threshold of node " + std::to_string(i) + " for product '" +
                                net.product_name(t) + "' is " + net.threshold(i, t).str() +
                                ", not above 1/2");
      }
    }
  }
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (!net.graph().has_in_neighbors(i) && !net.availability(i).is_singleton()) return false;
  }
  return true;
}

}  // namespace tdiff

#endif  // TDIFF_CONTRACTION_HPP
