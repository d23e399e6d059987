#ifndef TDIFF_CLOSURE_HPP
#define TDIFF_CLOSURE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "tdiff/network.hpp"
#include "tdiff/trace.hpp"

namespace tdiff {

struct ClosureResult {
  Network network;
  /// Fast t-only steps, one step per round.
  ReductionTrace trace;
};

/// Repeats fast reductions restricted to product t until no node can adopt t.
/// No other product is adopted. The result does not depend on the order of
/// adoptions within a round, since A(t,i) only ever becomes true.
inline ClosureResult product_closure_traced(const Network& net, ProductId t) {
  net.check_product(t);
  const auto& g = net.graph();
  const std::size_t n = net.node_count();
  const ProductSet only_t = ProductSet::single(t);
  std::vector<ProductSet> avail(net.availability().begin(), net.availability().end());
  std::vector<Rational> counter(n);

  auto candidate = [&](NodeId i) { return avail[i].size() >= 2 && avail[i].contains(t); };

  std::vector<NodeId> frontier;
  std::vector<NodeId> round_adopters;
  for (NodeId i = 0; i < n; ++i) {
    if (avail[i] == only_t) frontier.push_back(i);
    else if (candidate(i) && !g.has_in_neighbors(i)) round_adopters.push_back(i);
  }

  ReductionTrace trace;
  std::vector<AdoptionEvent> step;
  while (true) {
    for (NodeId j : frontier) {
      for (const Arc& a : g.out_arcs(j)) {
        if (!candidate(a.node)) continue;
        const bool was_below = counter[a.node] < net.threshold(a.node, t);
        counter[a.node] += a.weight;
        if (was_below && counter[a.node] >= net.threshold(a.node, t)) round_adopters.push_back(a.node);
      }
    }
    if (round_adopters.empty()) break;
    std::sort(round_adopters.begin(), round_adopters.end());
    step.clear();
    for (NodeId i : round_adopters) {
      avail[i] = only_t;
      step.push_back(AdoptionEvent{i, t});
    }
    trace.push_step(step);
    frontier.swap(round_adopters);
    round_adopters.clear();
  }
  return ClosureResult{net.with_availability(std::move(avail)), std::move(trace)};
}

inline Network product_closure(const Network& net, ProductId t) {
  return product_closure_traced(net, t).network;
}

}  // namespace tdiff

#endif  // TDIFF_CLOSURE_HPP
