#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tgd/temporal_graph.hpp"

namespace tgd {

struct Seed {
  NodeId node;
  Time time;

  auto operator<=>(const Seed&) const = default;
};

// Seed infections of one round. The set type rules out duplicate pairs; the
// per-round cap k is enforced by the game harness.
using SeedSet = std::set<Seed>;

// (infector, infected, time). Seeds are recorded with infector == infected.
// `record` names the edge record that transmitted, when the producer knows it.
struct InfectionEvent {
  NodeId infector;
  NodeId infected;
  Time time;
  std::optional<RecordId> record;

  bool is_seed() const { return infector == infected; }
  bool operator==(const InfectionEvent&) const = default;
};

// Sorted by (time, infected).
using InfectionLog = std::vector<InfectionEvent>;

// node -> infection time; absent nodes were never infected.
using InfectionTimetable = std::map<NodeId, Time>;

// Chooses the infector when a susceptible node has several infectious
// neighbours across edges labelled with the current step.
class TiePolicy {
 public:
  enum class Kind { LowestId, HighestId, SeededRandom };

  static TiePolicy lowest_id() { return TiePolicy(Kind::LowestId, 0); }
  static TiePolicy highest_id() { return TiePolicy(Kind::HighestId, 0); }
  static TiePolicy seeded_random(std::uint64_t seed) {
    return TiePolicy(Kind::SeededRandom, seed);
  }

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  // Index into `candidates` (sorted ascending by infector id) for the node
  // infected at `time`. Deterministic in its arguments.
  std::size_t pick(NodeId infected, Time time, std::size_t candidates) const;

 private:
  TiePolicy(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

struct Infection {
  InfectionLog log;
  InfectionTimetable timetable;
};

// Replaces the labels of one record for the duration of a simulation, so that
// label hypotheses can be tested without copying the graph.
struct LabelOverride {
  RecordId record;
  Time label;
};

// Deterministic SIR chain. Steps t = 0..Tmax in order; at each step seeds on
// susceptible nodes apply first, then every susceptible node with an
// infectious neighbour (infected at t0, t in [t0+1, t0+delta]) across an edge
// labelled t is infected, the infector chosen by `policy`. Seeds on
// non-susceptible nodes are no-ops. Throws TgdError on seeds outside
// [0, Tmax] or unknown nodes, or delta < 1.
Infection simulate(const TemporalGraph& graph, const SeedSet& seeds, Time delta,
                   const TiePolicy& policy = TiePolicy::lowest_id(),
                   std::optional<LabelOverride> override_label = std::nullopt);

// True iff `log` is producible by some infection chain on `graph` seeded
// with `seeds`: every entry is legal and the induced timetable equals the
// (unique) timetable of the chain.
bool verify_log_consistency(const TemporalGraph& graph, const SeedSet& seeds,
                            const InfectionLog& log, Time delta,
                            std::optional<LabelOverride> override_label = std::nullopt);

// Drops the infector column. Throws TgdError if a node is infected twice.
InfectionTimetable timetable_of(const InfectionLog& log);

// True iff `time` lies in the infectious window of a node infected at
// `infected_at`.
inline bool infectious_at(Time infected_at, Time time, Time delta) {
  return time > infected_at && time <= infected_at + delta;
}

// Replay format: one `u v t` line per entry.
void write_log(std::ostream& out, const InfectionLog& log);
InfectionLog read_log(std::istream& in);

}  // namespace tgd
