#ifndef TDIFF_TRACE_HPP
#define TDIFF_TRACE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tdiff/network.hpp"

namespace tdiff {

struct TracedEvent {
  NodeId node = 0;
  ProductId product = 0;
  std::size_t step = 0;

  friend bool operator==(const TracedEvent&, const TracedEvent&) = default;
};

/// Ordered adoption events from an initial network. Events sharing a step
/// index form one simultaneous reduction step; step indices are consecutive
/// from 0.
struct ReductionTrace {
  std::vector<TracedEvent> events;

  [[nodiscard]] bool empty() const { return events.empty(); }
  [[nodiscard]] std::size_t step_count() const {
    return events.empty() ? 0 : events.back().step + 1;
  }

  [[nodiscard]] std::vector<std::vector<AdoptionEvent>> steps() const {
    std::vector<std::vector<AdoptionEvent>> out(step_count());
    for (const TracedEvent& e : events) out[e.step].push_back(AdoptionEvent{e.node, e.product});
    return out;
  }

  /// Same events, one per step, in the original order.
  [[nodiscard]] ReductionTrace serialized() const {
    ReductionTrace out;
    for (std::size_t k = 0; k < events.size(); ++k) {
      out.events.push_back(TracedEvent{events[k].node, events[k].product, k});
    }
    return out;
  }

  void push_step(std::span<const AdoptionEvent> step) {
    const std::size_t index = step_count();
    for (const AdoptionEvent& e : step) events.push_back(TracedEvent{e.node, e.product, index});
  }

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Applies every step of the trace in order; each must be a valid reduction.
inline Network replay(const Network& net, const ReductionTrace& trace) {
  Network cur = net;
  for (const auto& step : trace.steps()) cur = apply_events(cur, step);
  return cur;
}

}  // namespace tdiff

#endif  // TDIFF_TRACE_HPP
