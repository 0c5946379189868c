#include <gtest/gtest.h>

#include <sstream>

#include <tgd/temporal_graph.hpp>

#include "support.hpp"

using namespace tgd;

TEST(TemporalGraph, CanonicalizesEndpointsAndLabels) {
  TemporalGraph g(3, 5, Variant::Multilabel, {{2, 0, {4, 1}}});
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.record(0).u, 0u);
  EXPECT_EQ(g.record(0).v, 2u);
  EXPECT_EQ(g.record(0).labels, (std::vector<Time>{1, 4}));
}

TEST(TemporalGraph, RejectsInvalidRecords) {
  EXPECT_THROW(TemporalGraph(3, 0, Variant::Simple, {}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Simple, {{0, 0, {1}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Simple, {{0, 3, {1}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Simple, {{0, 1, {5}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Simple, {{0, 1, {0}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Simple, {{0, 1, {1, 2}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Simple, {{0, 1, {1}}, {1, 0, {2}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Multiedge, {{0, 1, {2}}, {0, 1, {2}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Multilabel, {{0, 1, {2, 2}}}), TgdError);
  EXPECT_THROW(TemporalGraph(3, 4, Variant::Multilabel, {{0, 1, {}}}), TgdError);
}

TEST(TemporalGraph, MultiedgeKeepsParallelRecords) {
  TemporalGraph g(2, 4, Variant::Multiedge, {{0, 1, {3}}, {1, 0, {1}}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.records_between(1, 0).size(), 2u);
  auto pairs = g.static_pairs();
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].multiplicity, 2u);
  ASSERT_TRUE(g.record_with_label(0, 1, 3).has_value());
  EXPECT_FALSE(g.record_with_label(0, 1, 2).has_value());
}

TEST(TemporalGraph, EqualityIgnoresRecordOrder) {
  TemporalGraph a(4, 3, Variant::Simple, {{0, 1, {1}}, {2, 3, {2}}});
  TemporalGraph b(4, 3, Variant::Simple, {{3, 2, {2}}, {1, 0, {1}}});
  TemporalGraph c(4, 3, Variant::Simple, {{0, 1, {1}}, {2, 3, {3}}});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_NE(a, TemporalGraph(4, 4, Variant::Simple, {{0, 1, {1}}, {2, 3, {2}}}));
}

TEST(TemporalGraph, IncidenceListsBothEndpoints) {
  TemporalGraph g(3, 2, Variant::Simple, {{0, 1, {1}}, {1, 2, {2}}});
  EXPECT_EQ(g.incident(1).size(), 2u);
  EXPECT_EQ(g.incident(0).size(), 1u);
  EXPECT_EQ(g.incident(0)[0].neighbor, 1u);
}

TEST(TemporalGraph, WithLabelsValidates) {
  TemporalGraph g(3, 4, Variant::Simple, {{0, 1, {1}}, {1, 2, {2}}});
  TemporalGraph h = g.with_labels(0, {4});
  EXPECT_EQ(h.record(0).labels, (std::vector<Time>{4}));
  EXPECT_EQ(g.record(0).labels, (std::vector<Time>{1}));
  EXPECT_THROW(g.with_labels(0, {9}), TgdError);
}

TEST(TemporalGraph, TemporalPaths) {
  TemporalGraph g(4, 5, Variant::Simple, {{0, 1, {1}}, {1, 2, {3}}, {2, 3, {2}}});
  std::vector<LabelledEdge> up{{0, 1, 1}, {1, 2, 3}};
  std::vector<LabelledEdge> down{{1, 2, 3}, {2, 3, 2}};
  std::vector<LabelledEdge> bogus{{0, 2, 1}};
  EXPECT_TRUE(is_temporal_path(g, up));
  EXPECT_FALSE(is_temporal_path(g, down));
  EXPECT_THROW(is_temporal_path(g, bogus), TgdError);
}

TEST(TemporalGraph, TextRoundTripOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (Variant variant : {Variant::Simple, Variant::Multilabel, Variant::Multiedge}) {
    for (int i = 0; i < 30; ++i) {
      TemporalGraph g = fixtures::random_graph(rng, 2 + i % 7, 1 + i % 6, 0.5, variant);
      std::stringstream buf;
      write_graph(buf, g);
      EXPECT_EQ(read_graph(buf), g);
    }
  }
}

TEST(TemporalGraph, ReaderRejectsMalformedText) {
  std::istringstream missing("3 2 4 simple\n0 1 1\n");
  EXPECT_THROW(read_graph(missing), TgdError);
  std::istringstream variant("3 1 4 weird\n0 1 1\n");
  EXPECT_THROW(read_graph(variant), TgdError);
  std::istringstream comments("# hidden graph\n3 1 4 simple\n\n0 2 3\n");
  EXPECT_EQ(read_graph(comments).edge_count(), 1u);
}
