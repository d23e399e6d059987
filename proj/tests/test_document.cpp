#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "tdiff/tdiff.hpp"

using namespace tdiff;

namespace {

std::size_t error_line(std::string_view doc) {
  try {
    parse_network(doc);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string error_text(std::string_view doc) {
  try {
    parse_network(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Document, SwitchWitnessRoundTrip) {
  const Network net = gen_switch_witness().network;
  const std::string text = serialize(net);
  EXPECT_EQ(parse_network(text), net);
  EXPECT_EQ(serialize(parse_network(text)), text);
}

TEST(Document, ReducedNetworkKeepsThresholdDomain) {
  const Network net = apply_event(gen_switch_witness().network, {2, 0});
  const std::string text = serialize(net);
  EXPECT_NE(text.find("avail=t1"), std::string::npos);
  const Network back = parse_network(text);
  EXPECT_EQ(back, net);
  EXPECT_EQ(back.threshold(2, 1), Rational(1));
}

TEST(Document, CommentsAndBlankLines) {
  const Network net = parse_network(
      "# header\n\nproducts a b   # trailing\nnode 0 a=1\nnode 1 a=1/2 b=2/4\n\nedge 0 1 1/2\n");
  EXPECT_EQ(net.node_count(), 2u);
  EXPECT_EQ(net.threshold(1, 1), Rational(1, 2));
  EXPECT_EQ(net.graph().weight(0, 1), Rational(1, 2));
}

TEST(Document, RejectsZeroThreshold) {
  const std::string doc = "products t1\nnode 0 t1=0/1\n";
  EXPECT_EQ(error_line(doc), 2u);
  EXPECT_NE(error_text(doc).find("threshold must be positive"), std::string::npos);
}

TEST(Document, RejectsInWeightOverflow) {
  const std::string doc =
      "products t1\nnode 0 t1=1\nnode 1 t1=1\nnode 2 t1=1\nedge 0 2 1/2\nedge 1 2 2/3\n";
  EXPECT_EQ(error_line(doc), 6u);
  EXPECT_NE(error_text(doc).find("node 2"), std::string::npos);
  EXPECT_NE(error_text(doc).find("> 1"), std::string::npos);
}

TEST(Document, RejectsMalformedInput) {
  EXPECT_EQ(error_line("node 0 t1=1\n"), 1u);
  EXPECT_EQ(error_line("products t1\nnode 0 t1=0.5\n"), 2u);
  EXPECT_EQ(error_line("products t1\nnode 0 t2=1\n"), 2u);
  EXPECT_EQ(error_line("products t1\nnode 0 t1=1\nnode 0 t1=1\n"), 3u);
  EXPECT_EQ(error_line("products t1\nnode 1 t1=1\n"), 2u);
  EXPECT_EQ(error_line("products t1\nnode 0 t1=1\nedge 0 0 1\n"), 3u);
  EXPECT_EQ(error_line("products t1\nnode 0 t1=1\nedge 0 5 1\n"), 3u);
  EXPECT_EQ(error_line("products t1\nnode 0 t1=1\nnode 1 t1=1\nedge 0 1 1/2\nedge 0 1 1/4\n"), 5u);
  EXPECT_EQ(error_line("products t1\nnode 0 t1=3/2\n"), 2u);
  EXPECT_EQ(error_line("products t1\nnode 0\n"), 2u);
  EXPECT_EQ(error_line("products t1\nvertex 0\n"), 2u);
  EXPECT_EQ(error_line("products t1 t1\n"), 1u);
  EXPECT_EQ(error_line("products t1 t2\nnode 0 t1=1 avail=t2\n"), 2u);
  EXPECT_EQ(error_line(""), 1u);
}

TEST(Document, ColumnPointsAtField) {
  try {
    parse_network("products t1\nnode 0 t1=1/0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 11u);
  }
}

TEST(Document, ContentHashIsStable) {
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
  EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
  EXPECT_NE(content_hash("ab"), content_hash("ba"));
}

TEST(Document, CorpusRoundTrip) {
  for (const Network& net : ref::corpus(200, 71, 8, 4)) {
    const std::string text = serialize(net);
    ASSERT_EQ(parse_network(text), net);
    ASSERT_EQ(serialize(parse_network(text)), text);
  }
}
