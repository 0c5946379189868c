#include "tgd/discoverers.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tgd {

std::vector<SeedSet> brute_force_rounds(std::size_t node_count, Time lifetime) {
  std::vector<SeedSet> rounds;
  rounds.reserve(node_count * static_cast<std::size_t>(lifetime));
  for (NodeId v = 0; v < node_count; ++v) {
    for (Time t = 0; t < lifetime; ++t) rounds.push_back({Seed{v, t}});
  }
  return rounds;
}

Answer BruteForce::run(GameHandle& game) {
  const GameConfig& config = game.config();
  std::map<std::pair<NodeId, NodeId>, std::set<Time>> labels;
  for (const SeedSet& seeds : brute_force_rounds(config.node_count, config.lifetime)) {
    const Seed seed = *seeds.begin();
    const RoundFeedback& feedback = game.play_round(seeds);
    for (const auto& [y, t] : feedback.timetable) {
      if (y == seed.node || t != seed.time + 1) continue;
      labels[{std::min(y, seed.node), std::max(y, seed.node)}].insert(t);
    }
  }

  std::vector<EdgeRecord> records;
  for (const auto& [pair, set] : labels) {
    if (config.variant == Variant::Multilabel) {
      records.push_back({pair.first, pair.second, {set.begin(), set.end()}});
    } else if (config.variant == Variant::Multiedge) {
      for (Time t : set) records.push_back({pair.first, pair.second, {t}});
    } else {
      if (set.size() != 1) throw TgdError("feedback shows several labels on a simple edge");
      records.push_back({pair.first, pair.second, {*set.begin()}});
    }
  }
  TemporalGraph graph(config.node_count, config.lifetime, config.variant, std::move(records));
  if (config.goal == Goal::Ipz) return find_ipz(graph, config.delta);
  return graph;
}

Answer Guess::run(GameHandle& game) {
  const GameConfig& config = game.config();
  if (config.goal == Goal::Ipz) return IpzAnswer{};
  std::vector<EdgeRecord> records;
  if (const auto& pairs = game.disclosure().pairs) {
    for (const StaticPair& p : *pairs) {
      if (config.variant == Variant::Multiedge) {
        for (std::size_t i = 1; i <= p.multiplicity; ++i) {
          records.push_back({p.u, p.v, {static_cast<Time>(i)}});
        }
      } else {
        records.push_back({p.u, p.v, {1}});
      }
    }
  }
  return TemporalGraph(config.node_count, config.lifetime, config.variant, std::move(records));
}

namespace {

const std::vector<StaticPair>& disclosed_pairs(const GameHandle& game) {
  if (!game.disclosure().pairs) {
    throw TgdError("this strategy needs the static graph to be disclosed");
  }
  return *game.disclosure().pairs;
}

}  // namespace

DiscoveryEngine::DiscoveryEngine(GameHandle& game, bool skip_redundant, EarlySeeds early)
    : game_(game),
      skip_redundant_(skip_redundant),
      early_(early),
      knowledge_(game.config().node_count, game.config().lifetime, game.config().delta,
                 disclosed_pairs(game)) {}

bool DiscoveryEngine::issue(Seed seed, Phase phase) {
  if (knowledge_.performed(seed)) return false;
  knowledge_.mark_performed(seed);
  if (skip_redundant_ && knowledge_.node_resolved(seed.node)) {
    ++counters_.skipped;
    return false;
  }

  const SeedSet seeds{seed};
  const RoundFeedback& feedback = game_.play_round(seeds);
  knowledge_.absorb(seeds, feedback);
  switch (phase) {
    case Phase::Discovery:
      ++counters_.discovery;
      break;
    case Phase::Probe:
      ++counters_.probes;
      [[fallthrough]];
    case Phase::Exploration:
      ++counters_.exploration;
      break;
  }

  std::vector<Seed> fresh;
  for (const auto& [v, t] : feedback.timetable) {
    if (v == seed.node) continue;
    if (explored_.insert({v, t}).second) fresh.push_back({v, t});
  }
  std::sort(fresh.begin(), fresh.end(), [](const Seed& a, const Seed& b) {
    return std::pair(a.time, a.node) < std::pair(b.time, b.node);
  });
  queue_.insert(queue_.end(), fresh.begin(), fresh.end());
  return true;
}

void DiscoveryEngine::sweep(NodeId v0) {
  const Time tmax = game_.config().lifetime;
  const Time delta = game_.config().delta;
  ++counters_.sweeps;
  const Time steps = (tmax + delta - 1) / delta;
  for (Time i = 0; i <= steps; ++i) issue({v0, std::min(i * delta, tmax)}, Phase::Discovery);
}

void DiscoveryEngine::explore(NodeId u, Time t) {
  const Time delta = game_.config().delta;
  Time early = t - delta - 1;
  if (early < 0 && early_ == EarlySeeds::Clamp) early = 0;
  for (Time s : {early, t - 1, t}) {
    if (s >= 0) issue({u, s}, Phase::Exploration);
  }
}

void DiscoveryEngine::drain() {
  while (!queue_.empty()) {
    Seed next = queue_.front();
    queue_.pop_front();
    explore(next.node, next.time);
  }
}

void DiscoveryEngine::resolve_by_probes(NodeId v0) {
  for (std::size_t i : knowledge_.pairs_at(v0)) {
    const std::set<Time> candidates = knowledge_.pair(i).candidates;
    for (Time c : candidates) {
      const PairKnowledge& p = knowledge_.pair(i);
      if (p.known()) break;
      if (!p.candidates.contains(c) || p.confirmed.contains(c)) continue;
      issue({v0, c - 1}, Phase::Probe);
    }
  }
}

Answer DiscoveryFollow::run(GameHandle& game) {
  const GameConfig& config = game.config();
  if (config.variant == Variant::Multilabel) {
    throw TgdError("discovery-follow does not support multilabel graphs");
  }
  DiscoveryEngine engine(game, skip_redundant_, early_);
  KnowledgeState& knowledge = engine.knowledge();
  while (auto v0 = knowledge.lowest_unresolved_node()) {
    engine.sweep(*v0);
    engine.drain();
    if (!knowledge.node_resolved(*v0)) {
      engine.resolve_by_probes(*v0);
      engine.drain();
    }
    if (!knowledge.node_resolved(*v0)) {
      throw TgdError("labels at node " + std::to_string(*v0) + " remain undetermined");
    }
  }
  counters_ = engine.counters();
  Answer answer = knowledge.to_graph(config.variant);
  if (config.goal == Goal::Ipz) return find_ipz(std::get<TemporalGraph>(answer), config.delta);
  return answer;
}

Answer Follow::run(GameHandle& game) {
  const GameConfig& config = game.config();
  if (config.variant == Variant::Multilabel) {
    throw TgdError("follow does not support multilabel graphs");
  }
  if (config.node_count == 1) return IpzAnswer{Seed{0, 0}};

  DiscoveryEngine engine(game, false, early_);
  engine.sweep(0);
  engine.drain();
  if (!engine.knowledge().node_resolved(0)) {
    engine.resolve_by_probes(0);
    engine.drain();
  }
  counters_ = engine.counters();
  return find_ipz(engine.knowledge().fired_graph(config.variant), config.delta);
}

std::unique_ptr<Discoverer> make_discoverer(const std::string& name) {
  if (name == "brute-force") return std::make_unique<BruteForce>();
  if (name == "guess") return std::make_unique<Guess>();
  if (name == "follow") return std::make_unique<Follow>();
  if (name == "discovery-follow") return std::make_unique<DiscoveryFollow>(false);
  if (name == "discovery-follow-skip") return std::make_unique<DiscoveryFollow>(true);
  throw TgdError("unknown discoverer '" + name + "'");
}

}  // namespace tgd
