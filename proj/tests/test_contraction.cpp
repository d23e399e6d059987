#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "tdiff/tdiff.hpp"

using namespace tdiff;

namespace {

Network all_adopted() {
  NetworkBuilder b({"t1", "t2"});
  b.add_node({"t1"}, Rational(1));
  b.add_node({"t2"}, Rational(1));
  b.add_edge(0, 1, Rational(1));
  return b.build();
}

Network isolated_pair() {
  NetworkBuilder b({"t1", "t2"});
  b.add_node({"t1"}, Rational(1));
  b.add_node({"t1", "t2"}, Rational(1));
  return b.build();
}

Network high_threshold(bool isolated_multi) {
  NetworkBuilder b({"t1", "t2"});
  const NodeId s = b.add_node({"t1"}, Rational(3, 4));
  const NodeId x = b.add_node({"t1", "t2"}, Rational(3, 4));
  b.add_edge(s, x, Rational(1));
  if (isolated_multi) b.add_node({"t1", "t2"}, Rational(3, 4));
  return b.build();
}

}  // namespace

TEST(Contraction, AllSingletonIsUnique) {
  const auto r = contraction_sequence(all_adopted());
  EXPECT_TRUE(r.unique());
  EXPECT_TRUE(r.trace.empty());
  EXPECT_TRUE(has_unique_outcome(all_adopted()));
  EXPECT_FALSE(is_ambivalent(all_adopted(), all_adopted()));
}

TEST(Contraction, IsolatedMultiProductNodeStopsImmediately) {
  const auto r = contraction_sequence(isolated_pair());
  ASSERT_TRUE(std::holds_alternative<AmbivalentMultiAdopt>(r.verdict));
  const auto v = std::get<AmbivalentMultiAdopt>(r.verdict);
  EXPECT_EQ(v.node, 1u);
  EXPECT_EQ(v.products.size(), 2u);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_TRUE(is_ambivalent(isolated_pair(), isolated_pair()));
  EXPECT_FALSE(has_unique_outcome(isolated_pair()));
}

TEST(Contraction, SwitchWitness) {
  const Gadget g = gen_switch_witness();
  const Network& net = g.network;
  const auto r = contraction_sequence(net);
  ASSERT_EQ(r.trace.step_count(), 1u);
  const auto step = r.trace.steps()[0];
  ASSERT_EQ(step.size(), 2u);
  EXPECT_EQ(step[0], (AdoptionEvent{g.role("M"), 0}));
  EXPECT_EQ(step[1], (AdoptionEvent{g.role("C"), 1}));
  ASSERT_TRUE(std::holds_alternative<AmbivalentSwitch>(r.verdict));
  EXPECT_EQ(std::get<AmbivalentSwitch>(r.verdict), (AmbivalentSwitch{g.role("C"), 1, 0}));

  EXPECT_EQ(r.terminal, replay(net, r.trace));
  const auto sw = can_switch(net, r.terminal, g.role("C"));
  ASSERT_TRUE(sw);
  EXPECT_EQ(*sw, std::make_pair(ProductId{1}, ProductId{0}));
  EXPECT_TRUE(is_ambivalent(net, r.terminal));
  EXPECT_FALSE(has_unique_outcome(net));

  const FinalSet fs = enumerate(net);
  ASSERT_EQ(fs.size(), 2u);
  const NodeId c = g.role("C");
  EXPECT_NE(fs.finals[0].availability(c), fs.finals[1].availability(c));
}

TEST(Contraction, CanSwitchNeedsAdoptionAndWeight) {
  const Gadget g = gen_switch_witness();
  EXPECT_FALSE(can_switch(g.network, g.network, g.role("C")));
  // C adopted t2 while M has not adopted yet: only 1/2 toward t2, nothing toward t1.
  const Network cur = apply_event(g.network, {g.role("C"), 1});
  EXPECT_FALSE(can_switch(g.network, cur, g.role("C")));
  EXPECT_THROW(can_switch(g.network, cur, 99), ArgumentError);
}

TEST(Contraction, MultiAdoptDetectedBeforeRound) {
  // Two seeds with different products each give x its full threshold.
  NetworkBuilder b({"t1", "t2"});
  const NodeId s1 = b.add_node({"t1"}, Rational(1));
  const NodeId s2 = b.add_node({"t2"}, Rational(1));
  const NodeId y = b.add_node({"t1", "t2"}, Rational(1));
  const NodeId x = b.add_node({"t1", "t2"}, Rational(1, 2));
  b.add_edge(s1, y, Rational(1));
  b.add_edge(s1, x, Rational(1, 2));
  b.add_edge(s2, x, Rational(1, 2));
  const Network net = b.build();
  const auto r = contraction_sequence(net);
  ASSERT_TRUE(std::holds_alternative<AmbivalentMultiAdopt>(r.verdict));
  EXPECT_EQ(std::get<AmbivalentMultiAdopt>(r.verdict).node, x);
  // y's adoption belonged to the aborted round.
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(r.terminal, net);
  EXPECT_EQ(enumerate(net).size(), 2u);
}

TEST(Contraction, FastStepsAreMaximal) {
  const auto nets = ref::corpus(120, 23, 6, 3);
  for (const Network& net : nets) {
    const auto r = contraction_sequence(net);
    Network cur = net;
    for (const auto& step : r.trace.steps()) {
      std::size_t adoptable = 0;
      for (NodeId i = 0; i < cur.node_count(); ++i) adoptable += adoptable_products(cur, i).empty() ? 0 : 1;
      EXPECT_EQ(adoptable, step.size());
      cur = apply_events(cur, step);
    }
    EXPECT_EQ(cur, r.terminal);
    if (r.unique()) {
      EXPECT_TRUE(is_final(r.terminal));
      EXPECT_FALSE(is_ambivalent(net, r.terminal));
    } else {
      EXPECT_TRUE(is_ambivalent(net, r.terminal));
    }
  }
}

TEST(Contraction, HighThresholdCorollary) {
  EXPECT_TRUE(unique_outcome_high_threshold(high_threshold(false)));
  EXPECT_TRUE(has_unique_outcome(high_threshold(false)));
  EXPECT_FALSE(unique_outcome_high_threshold(high_threshold(true)));
  EXPECT_FALSE(has_unique_outcome(high_threshold(true)));
  EXPECT_THROW(unique_outcome_high_threshold(gen_switch_witness().network), PreconditionError);
}
