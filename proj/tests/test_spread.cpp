#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "tdiff/tdiff.hpp"

using namespace tdiff;

namespace {

// seed s = {top} → i = {top, t'} with weight 1 and θ(i, ·) = 1.
Network seed_example(bool with_isolated = false) {
  NetworkBuilder b({"top", "other"});
  const NodeId s = b.add_node({"top"}, Rational(1));
  const NodeId i = b.add_node({"top", "other"}, Rational(1));
  b.add_edge(s, i, Rational(1));
  if (with_isolated) b.add_node({"top", "other"}, Rational(1));
  return b.build();
}

// Levels 0, 1, 2 along s → x → y, with y also fed by s.
Network three_level() {
  NetworkBuilder b({"top", "other"});
  const NodeId s = b.add_node({"top"}, Rational(1));
  const NodeId x = b.add_node({"top", "other"}, Rational(1));
  const NodeId y = b.add_node({"top", "other"}, Rational(7, 10));
  b.add_edge(s, x, Rational(1));
  b.add_edge(s, y, Rational(1, 2));
  b.add_edge(x, y, Rational(1, 2));
  return b.build();
}

}  // namespace

TEST(Spread, ConstantNetworkIsReachableAndUnavoidable) {
  NetworkBuilder b({"top", "other"});
  b.add_node({"top"}, Rational(1));
  b.add_node({"top"}, Rational(1));
  b.add_edge(0, 1, Rational(1, 3));
  const Network net = b.build();
  EXPECT_TRUE(is_reachable_all(net, 0));
  EXPECT_TRUE(is_unavoidable_all(net, 0));
  const auto w = reachability_witness(net, 0);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->empty());
}

TEST(Spread, MissingProductIsNotReachable) {
  const Network net = seed_example();
  EXPECT_FALSE(is_reachable_all(net, 1));
  EXPECT_FALSE(is_reachable_all_by_closure(net, 1));
  EXPECT_FALSE(reachability_witness(net, 1));
}

TEST(Spread, SeedExample) {
  const Network net = seed_example();
  EXPECT_TRUE(is_reachable_all(net, 0));
  EXPECT_TRUE(is_reachable_all_by_closure(net, 0));
  EXPECT_TRUE(is_unavoidable_all(net, 0));
  const auto w = reachability_witness(net, 0);
  ASSERT_TRUE(w);
  ASSERT_EQ(w->events.size(), 1u);
  EXPECT_EQ(w->events[0], (TracedEvent{1, 0, 0}));
  EXPECT_TRUE(is_constant(replay(net, *w), 0));
  EXPECT_TRUE(ref::finals_contain_constant(enumerate(net), 0));
}

TEST(Spread, IsolatedNodeBreaksUnavoidabilityOnly) {
  const Network net = seed_example(true);
  EXPECT_TRUE(is_reachable_all(net, 0));
  EXPECT_FALSE(is_unavoidable_all(net, 0));
  const FinalSet fs = enumerate(net);
  EXPECT_TRUE(ref::finals_contain_constant(fs, 0));
  EXPECT_GT(fs.size(), 1u);
}

TEST(Spread, WitnessOrderedByLevel) {
  const Network net = three_level();
  const auto w = reachability_witness(net, 0);
  ASSERT_TRUE(w);
  ASSERT_EQ(w->step_count(), 2u);
  EXPECT_EQ(w->events[0].node, 1u);
  EXPECT_EQ(w->events[1].node, 2u);
  const Network end = replay(net, *w);
  EXPECT_TRUE(is_constant(end, 0));
  EXPECT_TRUE(is_final(end));

  const auto serial = reachability_witness(net, 0, true);
  ASSERT_TRUE(serial);
  EXPECT_EQ(serial->step_count(), serial->events.size());
  EXPECT_TRUE(is_constant(replay(net, *serial), 0));
}

TEST(Spread, UnknownProductRejected) {
  EXPECT_THROW(is_reachable_all(seed_example(), 5), ArgumentError);
  EXPECT_THROW(is_unavoidable_all(seed_example(), 5), ArgumentError);
}

TEST(Spread, CharacterizationMatchesClosureAndOracle) {
  const auto nets = ref::corpus(200, 11, 5, 3);
  for (std::size_t k = 0; k < nets.size(); ++k) {
    const Network& net = nets[k];
    const FinalSet fs = enumerate(net);
    for (ProductId t = 0; t < net.product_count(); ++t) {
      const bool reach = is_reachable_all(net, t);
      ASSERT_EQ(reach, is_reachable_all_by_closure(net, t)) << k;
      ASSERT_EQ(reach, ref::finals_contain_constant(fs, t)) << k;
      const bool unavoidable = fs.size() == 1 && is_constant(fs.finals[0], t);
      ASSERT_EQ(is_unavoidable_all(net, t), unavoidable) << k;
      if (reach) {
        EXPECT_TRUE(is_constant(replay(net, *reachability_witness(net, t)), t));
      }
    }
  }
}
