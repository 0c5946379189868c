#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tgd/infection.hpp"
#include "tgd/temporal_graph.hpp"

namespace tgd {

enum class Feedback { FullLog, TimesOnly };
enum class Knowledge { StaticKnown, NodesOnly };
enum class Goal { FullDiscovery, Ipz };

std::string_view to_string(Feedback feedback);
std::string_view to_string(Knowledge knowledge);
std::string_view to_string(Goal goal);

struct GameConfig {
  std::size_t node_count = 0;
  Time lifetime = 1;
  Time delta = 1;
  std::size_t k = 1;
  Feedback feedback = Feedback::FullLog;
  Knowledge knowledge = Knowledge::StaticKnown;
  Variant variant = Variant::Simple;
  Goal goal = Goal::FullDiscovery;
  // Rounds allowed before the Discoverer forfeits; defaults to 10 * n * Tmax.
  std::optional<std::size_t> round_budget;

  std::size_t budget() const;
  // Throws TgdError unless n >= 1, Tmax >= 1, 1 <= delta <= Tmax and k >= 1.
  void validate() const;
};

// What the Discoverer learns before the first round. `pairs` is present iff
// the static graph is disclosed; Multiedge multiplicities ride along.
struct Disclosure {
  std::size_t node_count = 0;
  std::optional<std::vector<StaticPair>> pairs;
};

// FullLog rounds carry the log; both modes carry the timetable.
struct RoundFeedback {
  std::optional<InfectionLog> log;
  InfectionTimetable timetable;
};

struct Round {
  SeedSet seeds;
  RoundFeedback feedback;
};

struct Transcript {
  Disclosure disclosure;
  std::vector<Round> rounds;
};

// An IPZ answer: a seed whose chain infects every node, or nullopt for "none".
using IpzAnswer = std::optional<Seed>;

// monostate stands for a Discoverer that produced no answer.
using Answer = std::variant<std::monostate, TemporalGraph, IpzAnswer>;

enum class Winner { Discoverer, Adversary };

struct GameOutcome {
  Winner winner = Winner::Adversary;
  std::size_t rounds_used = 0;
  Answer answer;
  std::optional<TemporalGraph> adversary_graph;
  // The adversary contradicted itself; it forfeits but this is not a regular
  // game loss.
  bool harness_error = false;
  bool budget_exceeded = false;
  std::string detail;
};

class RoundBudgetExceeded : public TgdError {
 public:
  using TgdError::TgdError;
};

class AdversaryFault : public TgdError {
 public:
  using TgdError::TgdError;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  // Step 1. Called once; may reject configs the strategy does not support.
  virtual Disclosure disclose(const GameConfig& config) = 0;
  // Step 2. Must be consistent with every earlier reply.
  virtual InfectionLog respond(const SeedSet& seeds) = 0;
  // Step 3. A graph consistent with the whole transcript.
  virtual TemporalGraph final_graph(const Answer& answer) = 0;
};

class GameHandle {
 public:
  GameHandle(const GameConfig& config, Transcript& transcript, Adversary& adversary)
      : config_(config), transcript_(transcript), adversary_(adversary) {}

  const GameConfig& config() const { return config_; }
  const Disclosure& disclosure() const { return transcript_.disclosure; }
  const Transcript& transcript() const { return transcript_; }
  std::size_t rounds_used() const { return transcript_.rounds.size(); }

  // Plays one round. Throws TgdError on malformed seed sets (more than k
  // seeds, unknown nodes, times outside [0, Tmax]), RoundBudgetExceeded when
  // the budget is spent and AdversaryFault on a malformed reply.
  const RoundFeedback& play_round(const SeedSet& seeds);

 private:
  const GameConfig& config_;
  Transcript& transcript_;
  Adversary& adversary_;
};

class Discoverer {
 public:
  virtual ~Discoverer() = default;
  virtual std::string name() const = 0;
  virtual Answer run(GameHandle& game) = 0;
};

struct PlayResult {
  GameOutcome outcome;
  Transcript transcript;
};

PlayResult play(const GameConfig& config, Discoverer& discoverer, Adversary& adversary);

// Step 3. Checks the adversary graph against every round (log consistency
// for FullLog, timetable equality for TimesOnly, and the disclosed static
// graph) and decides the winner.
GameOutcome adjudicate(const GameConfig& config, const Transcript& transcript,
                       const Answer& answer, const TemporalGraph& adversary_graph);

// True iff the chain seeded by `seed` alone infects every node.
bool is_ipz(const TemporalGraph& graph, Seed seed, Time delta);

// Lexicographically first IPZ over V x [0, Tmax], by exhaustive simulation.
IpzAnswer find_ipz(const TemporalGraph& graph, Time delta);

std::string transcript_to_json(const GameConfig& config, const Transcript& transcript,
                               const GameOutcome* outcome = nullptr);
Transcript transcript_from_json(const std::string& text);

}  // namespace tgd
