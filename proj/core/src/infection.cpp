#include "tgd/infection.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <tuple>

namespace tgd {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::span<const Time> labels_of(const TemporalGraph& graph, RecordId id,
                                const std::optional<LabelOverride>& override_label) {
  if (override_label && override_label->record == id) {
    return {&override_label->label, 1};
  }
  return graph.record(id).labels;
}

struct Candidate {
  Time time;
  NodeId target;
  NodeId infector;
  RecordId record;

  auto operator<=>(const Candidate&) const = default;
};

void check_seeds(const TemporalGraph& graph, const SeedSet& seeds) {
  for (const Seed& s : seeds) {
    if (s.node >= graph.node_count()) {
      throw TgdError("seed node " + std::to_string(s.node) + " does not exist");
    }
    if (s.time < 0 || s.time > graph.lifetime()) {
      throw TgdError("seed time " + std::to_string(s.time) + " outside [0, " +
                     std::to_string(graph.lifetime()) + "]");
    }
  }
}

}  // namespace

std::size_t TiePolicy::pick(NodeId infected, Time time, std::size_t candidates) const {
  switch (kind_) {
    case Kind::LowestId:
      return 0;
    case Kind::HighestId:
      return candidates - 1;
    case Kind::SeededRandom: {
      std::uint64_t h = mix(seed_ ^ mix(infected) ^ mix(mix(static_cast<std::uint64_t>(time))));
      return static_cast<std::size_t>(h % candidates);
    }
  }
  return 0;
}

Infection simulate(const TemporalGraph& graph, const SeedSet& seeds, Time delta,
                   const TiePolicy& policy, std::optional<LabelOverride> override_label) {
  if (delta < 1) throw TgdError("delta must be at least 1");
  check_seeds(graph, seeds);

  const std::size_t n = graph.node_count();
  const Time tmax = graph.lifetime();
  std::vector<Time> infected_at(n, -1);

  std::vector<Seed> by_time(seeds.begin(), seeds.end());
  std::sort(by_time.begin(), by_time.end(),
            [](const Seed& a, const Seed& b) { return std::tie(a.time, a.node) < std::tie(b.time, b.node); });

  // Pending transmissions ordered by (time, target, infector) so that all
  // candidates for one target at one step come out together.
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> pending;
  Infection result;

  auto infect = [&](NodeId v, Time t) {
    infected_at[v] = t;
    for (const Incidence& inc : graph.incident(v)) {
      for (Time label : labels_of(graph, inc.record, override_label)) {
        if (infectious_at(t, label, delta)) {
          pending.push({label, inc.neighbor, v, inc.record});
        }
      }
    }
  };

  std::size_t next_seed = 0;
  std::vector<Candidate> step;
  for (Time t = 0; t <= tmax; ++t) {
    for (; next_seed < by_time.size() && by_time[next_seed].time == t; ++next_seed) {
      NodeId v = by_time[next_seed].node;
      if (infected_at[v] >= 0) continue;
      result.log.push_back({v, v, t, std::nullopt});
      infect(v, t);
    }

    step.clear();
    while (!pending.empty() && pending.top().time == t) {
      step.push_back(pending.top());
      pending.pop();
    }
    for (std::size_t i = 0; i < step.size();) {
      std::size_t j = i;
      while (j < step.size() && step[j].target == step[i].target) ++j;
      NodeId target = step[i].target;
      if (infected_at[target] < 0) {
        const Candidate& chosen = step[i + policy.pick(target, t, j - i)];
        result.log.push_back({chosen.infector, target, t, chosen.record});
      }
      i = j;
    }
    // Apply after the scan so that nodes infected at t cannot influence step t.
    for (auto it = result.log.rbegin(); it != result.log.rend() && it->time == t; ++it) {
      if (!it->is_seed() && infected_at[it->infected] < 0) infect(it->infected, t);
    }
  }

  std::sort(result.log.begin(), result.log.end(),
            [](const InfectionEvent& a, const InfectionEvent& b) {
              return std::tie(a.time, a.infected) < std::tie(b.time, b.infected);
            });
  for (const InfectionEvent& e : result.log) result.timetable[e.infected] = e.time;
  return result;
}

bool verify_log_consistency(const TemporalGraph& graph, const SeedSet& seeds,
                            const InfectionLog& log, Time delta,
                            std::optional<LabelOverride> override_label) {
  if (delta < 1) return false;
  try {
    check_seeds(graph, seeds);
  } catch (const TgdError&) {
    return false;
  }

  InfectionTimetable claimed;
  for (const InfectionEvent& e : log) {
    if (e.infected >= graph.node_count() || e.infector >= graph.node_count()) return false;
    if (e.time < 0 || e.time > graph.lifetime()) return false;
    if (!claimed.emplace(e.infected, e.time).second) return false;
  }

  for (const InfectionEvent& e : log) {
    if (e.is_seed()) {
      if (!seeds.contains({e.infected, e.time})) return false;
      continue;
    }
    if (seeds.contains({e.infected, e.time})) return false;
    auto src = claimed.find(e.infector);
    if (src == claimed.end() || !infectious_at(src->second, e.time, delta)) return false;

    bool carried = false;
    for (RecordId id : graph.records_between(e.infector, e.infected)) {
      if (e.record && *e.record != id) continue;
      auto labels = labels_of(graph, id, override_label);
      if (std::find(labels.begin(), labels.end(), e.time) != labels.end()) {
        carried = true;
        break;
      }
    }
    if (!carried) return false;
  }

  return claimed == simulate(graph, seeds, delta, TiePolicy::lowest_id(), override_label).timetable;
}

InfectionTimetable timetable_of(const InfectionLog& log) {
  InfectionTimetable table;
  for (const InfectionEvent& e : log) {
    if (!table.emplace(e.infected, e.time).second) {
      throw TgdError("node " + std::to_string(e.infected) + " infected twice");
    }
  }
  return table;
}

void write_log(std::ostream& out, const InfectionLog& log) {
  for (const InfectionEvent& e : log) {
    out << e.infector << ' ' << e.infected << ' ' << e.time << '\n';
  }
}

InfectionLog read_log(std::istream& in) {
  InfectionLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream row(line);
    long long u = 0, v = 0, t = 0;
    std::string extra;
    if (!(row >> u >> v >> t) || (row >> extra) || u < 0 || v < 0) {
      throw TgdError("line " + std::to_string(line_no) + ": expected `u v t`");
    }
    log.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<Time>(t),
                   std::nullopt});
  }
  return log;
}

}  // namespace tgd
