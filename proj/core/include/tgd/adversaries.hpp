#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgd/game.hpp"
#include "tgd/infection.hpp"
#include "tgd/temporal_graph.hpp"

namespace tgd {

// Answers every round by simulating a fixed hidden graph.
class HonestAdversary : public Adversary {
 public:
  explicit HonestAdversary(TemporalGraph hidden, TiePolicy policy = TiePolicy::lowest_id());

  Disclosure disclose(const GameConfig& config) override;
  InfectionLog respond(const SeedSet& seeds) override;
  TemporalGraph final_graph(const Answer&) override { return hidden_; }

  const TemporalGraph& hidden() const { return hidden_; }

 private:
  TemporalGraph hidden_;
  TiePolicy policy_;
  Time delta_ = 1;
};

// One labelled edge the adversary may still add to its graph.
struct LazyOption {
  NodeId u;
  NodeId v;
  Time label;
};

// Exactly one option of every slot ends up in the final graph. An option
// is tested when, at its label, one endpoint is infectious and the other
// would otherwise stay susceptible. A tested option is dropped ("infection
// failed") while the slot keeps another live option, and committed
// ("infection successful") when it is the last one.
struct LazySlot {
  std::vector<LazyOption> options;
  std::vector<bool> alive;
  std::size_t alive_count = 0;
  std::optional<std::size_t> committed;
};

class LazyAdversary : public Adversary {
 public:
  LazyAdversary(std::string name, std::size_t node_count, Time lifetime, Variant variant,
                std::vector<EdgeRecord> fixed, std::vector<std::vector<LazyOption>> slots,
                std::size_t round_bound);

  Disclosure disclose(const GameConfig& config) override;
  InfectionLog respond(const SeedSet& seeds) override;
  // Smallest live option per slot, except that when this graph would equal
  // the answer the first slot with a second live option switches to it.
  TemporalGraph final_graph(const Answer& answer) override;

  const std::string& name() const { return name_; }
  // The lower bound on rounds the construction is meant to force.
  std::size_t round_bound() const { return round_bound_; }
  const std::vector<LazySlot>& slots() const { return slots_; }
  // Live options summed over slots, before round 1 and after every round.
  const std::vector<std::size_t>& option_trace() const { return option_trace_; }

 private:
  TemporalGraph assemble(const std::vector<std::size_t>& choice) const;
  bool static_graph_fixed() const;

  std::string name_;
  std::size_t node_count_;
  Time lifetime_;
  Variant variant_;
  std::vector<EdgeRecord> fixed_;
  std::vector<LazySlot> slots_;
  std::size_t round_bound_;
  Time delta_ = 1;
  std::vector<std::size_t> option_trace_;
};

// Path v1..v_{n-2} with its odd-numbered edges free over [1, Tmax]; the rest
// of the family is fixed. Needs StaticKnown; bound floor(n (Tmax-3) / (2 delta k)).
std::unique_ptr<LazyAdversary> make_thm52_adversary(std::size_t n, Time lifetime, Time delta,
                                                    std::size_t k);

// m - 1 fixed edges at label 1 forming a connected graph of maximum degree
// n - 2; one free edge among every other pair and label. Needs NodesOnly;
// bound floor(n Tmax / (2 delta k)). Requires 1 <= m <= C(n,2) - n, k <= n.
std::unique_ptr<LazyAdversary> make_unknown_static_adversary(std::size_t n, std::size_t m,
                                                             Time lifetime, Time delta,
                                                             std::size_t k);

// m edges at label 1 with degrees kept balanced; one extra label in [2, Tmax]
// on one of them. Multilabel variant; bound floor(min(n/2, m) Tmax / (delta k)).
// Requires 1 <= m <= C(n,2) - n, k <= n and Tmax >= 2 (at Tmax = 1 the
// graph is determined by its static edges).
std::unique_ptr<LazyAdversary> make_multilabel_adversary(std::size_t n, std::size_t m,
                                                         Time lifetime, Time delta,
                                                         std::size_t k);

// Edge sets of the greedy constructions, exposed for tests.
std::vector<std::pair<NodeId, NodeId>> greedy_connected_edges(std::size_t n, std::size_t count,
                                                              std::size_t max_degree);
std::vector<std::pair<NodeId, NodeId>> greedy_balanced_edges(std::size_t n, std::size_t count);

// Phi(0..a): Phi(i) sums, over records, the labels that keep rounds 1..i
// consistent when that record alone is relabelled (other records keep their
// true labels). Multiedge records never take a parallel record's label.
// Throws TgdError for multilabel graphs or a transcript inconsistent with
// the graph.
struct PotentialTrace {
  std::vector<std::size_t> values;
};

PotentialTrace potential(const TemporalGraph& graph, const Transcript& transcript, Time delta);

// Plays `schedule` honestly on `graph` and checks that Phi ends at m.
bool witness_verify(const TemporalGraph& graph, const std::vector<SeedSet>& schedule,
                    Time delta, Feedback feedback = Feedback::FullLog);

// One round per record: its lower endpoint seeded one step before its label.
std::vector<SeedSet> per_edge_schedule(const TemporalGraph& graph);

// Transcript of honest play of `schedule` on `graph`.
Transcript honest_transcript(const TemporalGraph& graph, const std::vector<SeedSet>& schedule,
                             Time delta, Feedback feedback = Feedback::FullLog);

}  // namespace tgd
