#ifndef TDIFF_ADOPTION_HPP
#define TDIFF_ADOPTION_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "tdiff/closure.hpp"
#include "tdiff/errors.hpp"
#include "tdiff/network.hpp"
#include "tdiff/oracle.hpp"
#include "tdiff/trace.hpp"

namespace tdiff {

struct CompletionResult {
  Network network;
  /// One event per step.
  ReductionTrace trace;
};

/// Extends net to a final network with single adoptions: sweep the nodes in
/// ascending id order, let each node that can adopt take its lowest adoptable
/// product, and repeat until a sweep changes nothing.
inline CompletionResult complete_to_final(const Network& net) {
  const auto& g = net.graph();
  std::vector<ProductSet> avail(net.availability().begin(), net.availability().end());
  ReductionTrace trace;

  auto lowest_adoptable = [&](NodeId i) -> std::optional<ProductId> {
    if (avail[i].size() < 2) return std::nullopt;
    if (!g.has_in_neighbors(i)) return avail[i].front();
    for (ProductId t : avail[i]) {
      Rational sum;
      for (const Arc& a : g.in_arcs(i)) {
        if (avail[a.node] == ProductSet::single(t)) sum += a.weight;
      }
      if (sum >= net.threshold(i, t)) return t;
    }
    return std::nullopt;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId i = 0; i < avail.size(); ++i) {
      if (auto t = lowest_adoptable(i)) {
        avail[i] = ProductSet::single(*t);
        trace.events.push_back(TracedEvent{i, *t, trace.events.size()});
        changed = true;
      }
    }
  }
  return CompletionResult{net.with_availability(std::move(avail)), std::move(trace)};
}

/// ADOPTION 4: i adopts t in some final network iff it adopted t in the
/// t-only closure.
inline bool adoption4_possible_given(const Network& net, NodeId i, ProductId t) {
  net.check_node(i);
  net.check_product(t);
  if (!net.availability(i).contains(t)) return false;
  if (net.availability(i).is_singleton()) return true;
  return product_closure(net, t).availability(i) == ProductSet::single(t);
}

/// ADOPTION 3: ADOPTION 4 for some product of p(i).
inline bool adoption3_possible_some(const Network& net, NodeId i) {
  net.check_node(i);
  for (ProductId t : net.availability(i)) {
    if (adoption4_possible_given(net, i, t)) return true;
  }
  return false;
}

namespace detail {
inline ProductId competitor_of(const Network& net, ProductId t, const char* what) {
  net.check_product(t);
  if (net.product_count() != 2) {
    throw PreconditionError(std::string(what) + " needs exactly 2 products, network has " +
                            std::to_string(net.product_count()));
  }
  return t == 0 ? 1 : 0;
}

/// Worst case for t: saturate the competitor first, then let t spread.
/// Returns the network in which every remaining adoption is a t-adoption.
inline Network flood_competitor(const Network& net, ProductId competitor) {
  return product_closure(net, competitor);
}

inline void assert_competitor_saturated(const Network& net, ProductId competitor) {
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (can_adopt(net, i, competitor)) {
      throw std::logic_error("competitor adoption re-enabled at node " + std::to_string(i));
    }
  }
}
}  // namespace detail

/// ADOPTION 2 with two products: i adopts t in every final network iff it does
/// in the final network reached by flooding the competitor first and then t.
inline bool adoption2_two_products(const Network& net, NodeId i, ProductId t) {
  net.check_node(i);
  const ProductId other = detail::competitor_of(net, t, "ADOPTION 2 solver");
  const Network flooded = detail::flood_competitor(net, other);
  const Network worst = product_closure(flooded, t);
  detail::assert_competitor_saturated(worst, other);
  return worst.availability(i) == ProductSet::single(t);
}

struct SpreadResult {
  std::size_t count = 0;
  /// A final network with exactly `count` adopters of the product.
  Network witness;
};

/// MAX-ADOPTION: the t-only closure holds every node that adopts t in any
/// reachable network, and completing it cannot add t-adopters.
inline SpreadResult max_adoption(const Network& net, ProductId t) {
  net.check_product(t);
  const Network closed = product_closure(net, t);
  const std::size_t count = count_adopters(closed, t);
  Network witness = complete_to_final(closed).network;
  return SpreadResult{count, std::move(witness)};
}

/// MIN-ADOPTION with two products: flood the competitor, then perform the
/// t-adoptions needed to reach a final network.
inline SpreadResult min_adoption_two_products(const Network& net, ProductId t) {
  const ProductId other = detail::competitor_of(net, t, "MIN-ADOPTION solver");
  const Network flooded = detail::flood_competitor(net, other);
  CompletionResult done = complete_to_final(flooded);
  for (const TracedEvent& e : done.trace.events) {
    if (e.product != t) {
      throw std::logic_error("competitor adopted at node " + std::to_string(e.node) +
                             " after saturation");
    }
  }
  return SpreadResult{count_adopters(done.network, t), std::move(done.network)};
}

/// Answer of a query that may have fallen back to exhaustive enumeration.
struct Decision {
  bool value = false;
  /// True when the answer came from the exponential oracle.
  bool exhaustive = false;
};

struct SpreadDecision {
  SpreadResult result;
  bool exhaustive = false;
};

/// ADOPTION 1 is co-NP-complete already for two products: always exhaustive.
inline Decision adoption1(const Network& net, NodeId i, std::size_t budget = kDefaultStateBudget) {
  return Decision{adoption1_unavoidable_some(net, i, budget), true};
}

/// ADOPTION 2: polynomial for two products, exhaustive otherwise.
inline Decision adoption2(const Network& net, NodeId i, ProductId t,
                          std::size_t budget = kDefaultStateBudget) {
  if (net.product_count() == 2) return Decision{adoption2_two_products(net, i, t), false};
  return Decision{adoption2_unavoidable_given(net, i, t, budget), true};
}

/// MIN-ADOPTION: polynomial for two products, exhaustive otherwise.
inline SpreadDecision min_adoption(const Network& net, ProductId t,
                                   std::size_t budget = kDefaultStateBudget) {
  if (net.product_count() == 2) return SpreadDecision{min_adoption_two_products(net, t), false};
  net.check_product(t);
  const FinalSet fs = enumerate(net, budget);
  const Network* best = nullptr;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  for (const Network& f : fs.finals) {
    const std::size_t c = count_adopters(f, t);
    if (c < best_count) {
      best_count = c;
      best = &f;
    }
  }
  return SpreadDecision{SpreadResult{best_count, *best}, true};
}

}  // namespace tdiff

#endif  // TDIFF_ADOPTION_HPP
