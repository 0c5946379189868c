#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "tgd/game.hpp"

namespace tgd {

// What the Discoverer knows about one static pair. The pair carries
// `multiplicity` records with distinct labels (1 outside Multiedge).
struct PairKnowledge {
  NodeId u = 0;
  NodeId v = 0;
  std::size_t multiplicity = 1;
  std::set<Time> candidates;  // labels not yet ruled out
  std::set<Time> confirmed;   // labels seen transmitting

  bool known() const { return candidates.size() == multiplicity; }
  bool fired() const { return !confirmed.empty(); }
  NodeId other(NodeId x) const { return x == u ? v : u; }
};

struct PhaseCounters {
  std::size_t discovery = 0;    // sweep rounds
  std::size_t exploration = 0;  // explore rounds, fallback probes included
  std::size_t probes = 0;       // fallback probes (subset of exploration)
  std::size_t skipped = 0;      // planned seeds dropped as redundant
  std::size_t sweeps = 0;       // iterations of the outer loop

  std::size_t total() const { return discovery + exploration; }
};

// Per-pair consistent-label sets plus the bookkeeping of performed seeds.
// Candidate sets only shrink; a contradiction with earlier feedback throws
// TgdError (the adversary cheated).
class KnowledgeState {
 public:
  KnowledgeState(std::size_t node_count, Time lifetime, Time delta,
                 const std::vector<StaticPair>& pairs);

  // Updates candidate sets from one round. Negative information: a node
  // infectious at t next to a node still susceptible after t rules out t on
  // that pair. Positive information: a log entry, or (both modes) a
  // transmitted infection of v at t with exactly one infectious neighbour
  // whose pair still admits t.
  void absorb(const SeedSet& seeds, const RoundFeedback& feedback);

  std::size_t pair_count() const { return pairs_.size(); }
  const PairKnowledge& pair(std::size_t index) const { return pairs_[index]; }
  std::optional<std::size_t> pair_index(NodeId a, NodeId b) const;
  std::span<const std::size_t> pairs_at(NodeId v) const { return incident_[v]; }

  bool node_resolved(NodeId v) const;
  bool all_known() const { return unknown_pairs_ == 0; }
  std::optional<NodeId> lowest_unresolved_node() const;

  // Sum of candidate-set sizes.
  std::size_t potential() const;

  bool performed(Seed s) const { return performed_.contains(s); }
  void mark_performed(Seed s) { performed_.insert(s); }

  // Requires all_known(). Multiedge pairs become one record per label.
  TemporalGraph to_graph(Variant variant) const;
  // Only confirmed labels; the subgraph of edges seen transmitting.
  TemporalGraph fired_graph(Variant variant) const;

 private:
  void confirm(std::size_t index, Time t);
  void eliminate(std::size_t index, Time from, Time to);
  void refresh(std::size_t index, bool was_known);

  std::size_t node_count_;
  Time lifetime_;
  Time delta_;
  std::vector<PairKnowledge> pairs_;
  std::vector<std::vector<std::size_t>> incident_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> index_;
  std::size_t unknown_pairs_ = 0;
  std::set<Seed> performed_;
};

}  // namespace tgd
