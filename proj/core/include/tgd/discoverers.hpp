#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tgd/game.hpp"
#include "tgd/knowledge.hpp"

namespace tgd {

// The n * Tmax singleton rounds {(v, t)} for v in V, t in [0, Tmax-1], in
// node-major order.
std::vector<SeedSet> brute_force_rounds(std::size_t node_count, Time lifetime);

// Seeds every node one step before every possible label. Works in every
// variant, feedback and knowledge mode.
class BruteForce : public Discoverer {
 public:
  std::string name() const override { return "brute-force"; }
  Answer run(GameHandle& game) override;
};

// Submits a graph without playing: all disclosed pairs at the smallest
// labels, or the empty graph when nothing is disclosed.
class Guess : public Discoverer {
 public:
  std::string name() const override { return "guess"; }
  Answer run(GameHandle& game) override;
};

// How explore treats t - delta - 1 < 0. Clamp seeds at 0 instead, which still
// covers every label in [1, t - 1]; Skip drops the seed.
enum class EarlySeeds { Clamp, Skip };

// Shared machinery of Follow and DiscoveryFollow: seed dedup, the
// redundant-seed filter, sweeps, and breadth-first exploration of every
// observed infection.
class DiscoveryEngine {
 public:
  enum class Phase { Discovery, Exploration, Probe };

  DiscoveryEngine(GameHandle& game, bool skip_redundant,
                  EarlySeeds early = EarlySeeds::Clamp);

  KnowledgeState& knowledge() { return knowledge_; }
  const PhaseCounters& counters() const { return counters_; }

  // Plays {seed} unless it was performed before or is redundant. Observed
  // transmitted infections are queued for exploration. Returns whether a
  // round was played.
  bool issue(Seed seed, Phase phase);

  // Seeds (v0, i * delta) for i = 0..ceil(Tmax / delta), clamped to Tmax.
  void sweep(NodeId v0);

  // Explore: seeds (u, t - delta - 1), (u, t - 1), (u, t); negative times
  // follow EarlySeeds.
  void explore(NodeId u, Time t);

  // Explores queued infections until the queue is empty.
  void drain();

  // One-step probes (v0, c - 1) for every remaining candidate c of the
  // pairs at v0. Each probe decides one candidate outright.
  void resolve_by_probes(NodeId v0);

 private:
  GameHandle& game_;
  bool skip_redundant_;
  EarlySeeds early_;
  KnowledgeState knowledge_;
  PhaseCounters counters_;
  std::deque<Seed> queue_;
  std::set<Seed> explored_;
};

// Full discovery for Simple and Multiedge graphs with a disclosed static
// graph, under FullLog or TimesOnly feedback.
class DiscoveryFollow : public Discoverer {
 public:
  explicit DiscoveryFollow(bool skip_redundant = false, EarlySeeds early = EarlySeeds::Clamp)
      : skip_redundant_(skip_redundant), early_(early) {}

  std::string name() const override {
    return skip_redundant_ ? "discovery-follow-skip" : "discovery-follow";
  }
  Answer run(GameHandle& game) override;

  const PhaseCounters& counters() const { return counters_; }

 private:
  bool skip_redundant_;
  EarlySeeds early_;
  PhaseCounters counters_;
};

// Decides the IPZ problem: sweeps and explores from node 0, then searches
// V x [0, Tmax] exhaustively on the edges seen transmitting.
class Follow : public Discoverer {
 public:
  explicit Follow(EarlySeeds early = EarlySeeds::Clamp) : early_(early) {}

  std::string name() const override { return "follow"; }
  Answer run(GameHandle& game) override;

  const PhaseCounters& counters() const { return counters_; }

 private:
  EarlySeeds early_;
  PhaseCounters counters_;
};

// Names accepted by make_discoverer: brute-force, guess, follow,
// discovery-follow, discovery-follow-skip.
std::unique_ptr<Discoverer> make_discoverer(const std::string& name);

}  // namespace tgd
