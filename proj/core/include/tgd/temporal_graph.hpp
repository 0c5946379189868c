#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tgd/types.hpp"

namespace tgd {

// One edge record. Endpoints are stored canonically (u < v) and labels are
// sorted and unique. Simple and Multiedge records carry exactly one label;
// Multiedge graphs may hold several records for the same pair.
struct EdgeRecord {
  NodeId u = 0;
  NodeId v = 0;
  std::vector<Time> labels;

  bool has_label(Time t) const;
  NodeId other(NodeId x) const { return x == u ? v : u; }
};

struct Incidence {
  NodeId neighbor;
  RecordId record;
};

// A labelled edge as it appears in a temporal path or an infection event.
struct LabelledEdge {
  NodeId u;
  NodeId v;
  Time label;
};

// Static pair with its record multiplicity; what the Discoverer learns about
// the underlying graph when the static graph is disclosed.
struct StaticPair {
  NodeId u;
  NodeId v;
  std::size_t multiplicity = 1;

  auto operator<=>(const StaticPair&) const = default;
};

class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Validates and canonicalizes. Throws TgdError on any invariant violation:
  // labels outside [1, lifetime], self-loops, node ids out of range, a Simple
  // or Multiedge record without exactly one label, duplicate pairs in Simple
  // or Multilabel graphs, or parallel Multiedge records sharing a label.
  TemporalGraph(std::size_t node_count, Time lifetime, Variant variant,
                std::vector<EdgeRecord> records);

  std::size_t node_count() const { return node_count_; }
  Time lifetime() const { return lifetime_; }
  Variant variant() const { return variant_; }

  // Number of edge records (parallel Multiedge records counted individually).
  std::size_t edge_count() const { return records_.size(); }
  const std::vector<EdgeRecord>& records() const { return records_; }
  const EdgeRecord& record(RecordId id) const { return records_.at(id); }

  std::span<const Incidence> incident(NodeId v) const { return adjacency_.at(v); }

  // All records joining u and v (any order of arguments).
  std::vector<RecordId> records_between(NodeId u, NodeId v) const;

  // The record joining u and v that carries label t, if any.
  std::optional<RecordId> record_with_label(NodeId u, NodeId v, Time t) const;

  // Sorted static pairs with multiplicities.
  std::vector<StaticPair> static_pairs() const;

  // Copy with the labels of one record replaced. Validates the result.
  TemporalGraph with_labels(RecordId id, std::vector<Time> labels) const;

  // Sorted (u, v, labels) tuples; two graphs are equal iff node count,
  // lifetime, variant and canonical forms agree.
  using CanonicalRecord = std::tuple<NodeId, NodeId, std::vector<Time>>;
  std::vector<CanonicalRecord> canonical_form() const;

  bool operator==(const TemporalGraph& other) const;

 private:
  std::size_t node_count_ = 0;
  Time lifetime_ = 1;
  Variant variant_ = Variant::Simple;
  std::vector<EdgeRecord> records_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// True iff the sequence forms a path in the static graph (no repeated node)
// with strictly increasing labels. Throws TgdError if some (u, v, label) is
// not an edge of the graph carrying that label.
bool is_temporal_path(const TemporalGraph& graph,
                      std::span<const LabelledEdge> edges);

// Line format: header `n m Tmax variant`, then one `u v label[,label...]`
// line per record. Blank lines and lines starting with '#' are ignored.
void write_graph(std::ostream& out, const TemporalGraph& graph);
TemporalGraph read_graph(std::istream& in);
TemporalGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const TemporalGraph& graph);

}  // namespace tgd
