#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "tgd/temporal_graph.hpp"

namespace tgd {

// A union-find element: one edge record at one of its labels. Simple and
// Multiedge records contribute one item each; a Multilabel record contributes
// one item per label.
struct EdgeItem {
  RecordId record;
  Time label;

  auto operator<=>(const EdgeItem&) const = default;
};

// Partition of edge items into δ-edge connected components. Component ids are
// dense and numbered in order of first appearance along `items`.
struct DeltaEccPartition {
  std::vector<EdgeItem> items;
  std::vector<std::size_t> component_id;  // parallel to items
  std::size_t component_count = 0;
  std::vector<std::size_t> sizes;  // items per component

  double mean_size() const;

  // Components as sorted groups of (u, v, label) triples; independent of
  // record order, used to compare partitions of isomorphic inputs.
  std::vector<std::vector<std::tuple<NodeId, NodeId, Time>>> groups(
      const TemporalGraph& graph) const;
};

// Two items are linked when their edges share an endpoint and their labels
// differ by at most delta (two labels of one Multilabel record always share
// both endpoints). Returns the transitive closure of that relation.
DeltaEccPartition delta_ecc(const TemporalGraph& graph, Time delta);

}  // namespace tgd
