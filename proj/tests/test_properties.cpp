// Cross-module properties over seeded corpora, checked against the oracle.
#include <gtest/gtest.h>

#include <algorithm>

#include "support/brute.hpp"
#include "tdiff/tdiff.hpp"

using namespace tdiff;

namespace {

bool all_final(const FinalSet& fs, NodeId i, ProductId t) {
  return std::all_of(fs.finals.begin(), fs.finals.end(),
                     [&](const Network& f) { return f.availability(i) == ProductSet::single(t); });
}

bool some_final(const FinalSet& fs, NodeId i, ProductId t) {
  return std::any_of(fs.finals.begin(), fs.finals.end(),
                     [&](const Network& f) { return f.availability(i) == ProductSet::single(t); });
}

}  // namespace

TEST(Properties, UniqueOutcomeMatchesOracle) {
  for (const Network& net : ref::corpus(250, 101, 6, 3)) {
    const auto r = contraction_sequence(net);
    const FinalSet fs = enumerate(net);
    ASSERT_EQ(r.unique(), fs.size() == 1) << serialize(net);
    if (r.unique()) {
      EXPECT_EQ(r.terminal, fs.finals[0]);
    }
    if (const auto* sw = std::get_if<AmbivalentSwitch>(&r.verdict)) {
      // Two finals differing at the switching node.
      EXPECT_TRUE(some_final(fs, sw->node, sw->from));
      EXPECT_TRUE(some_final(fs, sw->node, sw->to));
    }
  }
}

TEST(Properties, TwoProductSolversMatchOracle) {
  std::size_t checked = 0;
  for (const Network& net : ref::corpus(300, 103, 6, 2)) {
    if (net.product_count() != 2) continue;
    ++checked;
    const FinalSet fs = enumerate(net);
    for (ProductId t = 0; t < 2; ++t) {
      std::size_t lo = net.node_count(), hi = 0;
      for (const Network& f : fs.finals) {
        lo = std::min(lo, count_adopters(f, t));
        hi = std::max(hi, count_adopters(f, t));
      }
      ASSERT_EQ(max_adoption(net, t).count, hi);
      ASSERT_EQ(min_adoption_two_products(net, t).count, lo) << serialize(net);
      for (NodeId i = 0; i < net.node_count(); ++i) {
        ASSERT_EQ(adoption2_two_products(net, i, t), all_final(fs, i, t));
        ASSERT_EQ(adoption4_possible_given(net, i, t), some_final(fs, i, t));
      }
    }
    for (NodeId i = 0; i < net.node_count(); ++i) {
      ASSERT_EQ(adoption3_possible_some(net, i), adoption3_exact(net, i));
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Properties, HighThresholdCorollaryMatches) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.nodes = 1 + seed % 6;
    spec.products = 1 + seed % 3;
    spec.density = 0.5;
    spec.theta_min = Rational(7, 12);
    spec.isolated_adopted = seed % 2 == 0;
    const Network net = gen_random(spec);
    const bool quick = unique_outcome_high_threshold(net);
    ASSERT_EQ(quick, has_unique_outcome(net));
    ASSERT_EQ(quick, enumerate(net).size() == 1);
    ++checked;
  }
  EXPECT_EQ(checked, 150u);
}

TEST(Properties, ClosureContainsEveryReachableAdopter) {
  for (const Network& net : ref::corpus(80, 107, 6, 3)) {
    const FinalSet fs = enumerate(net, EnumerateOptions{kDefaultStateBudget, false, true});
    for (ProductId t = 0; t < net.product_count(); ++t) {
      const Network closed = product_closure(net, t);
      for (const auto& state : fs.reachable) {
        for (NodeId i = 0; i < net.node_count(); ++i) {
          if (state[i] == ProductSet::single(t)) {
            EXPECT_EQ(closed.availability(i), ProductSet::single(t));
          }
        }
      }
    }
  }
}
