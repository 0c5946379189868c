#include "tgd/adversaries.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tgd/generators.hpp"

namespace tgd {

namespace {

void check_shape(const GameConfig& config, std::size_t n, Time lifetime, Variant variant) {
  if (config.node_count != n || config.lifetime != lifetime || config.variant != variant) {
    throw TgdError("game config does not match the adversary's graph (n, Tmax or variant)");
  }
}

}  // namespace

HonestAdversary::HonestAdversary(TemporalGraph hidden, TiePolicy policy)
    : hidden_(std::move(hidden)), policy_(policy) {}

Disclosure HonestAdversary::disclose(const GameConfig& config) {
  check_shape(config, hidden_.node_count(), hidden_.lifetime(), hidden_.variant());
  delta_ = config.delta;
  Disclosure d{hidden_.node_count(), std::nullopt};
  if (config.knowledge == Knowledge::StaticKnown) d.pairs = hidden_.static_pairs();
  return d;
}

InfectionLog HonestAdversary::respond(const SeedSet& seeds) {
  return simulate(hidden_, seeds, delta_, policy_).log;
}

LazyAdversary::LazyAdversary(std::string name, std::size_t node_count, Time lifetime,
                             Variant variant, std::vector<EdgeRecord> fixed,
                             std::vector<std::vector<LazyOption>> slots, std::size_t round_bound)
    : name_(std::move(name)),
      node_count_(node_count),
      lifetime_(lifetime),
      variant_(variant),
      fixed_(std::move(fixed)),
      round_bound_(round_bound) {
  std::size_t total = 0;
  for (auto& options : slots) {
    if (options.empty()) continue;
    for (const LazyOption& o : options) {
      if (o.label < 1 || o.label > lifetime) throw TgdError("lazy option label out of range");
    }
    LazySlot slot;
    slot.alive.assign(options.size(), true);
    slot.alive_count = options.size();
    slot.options = std::move(options);
    total += slot.alive_count;
    slots_.push_back(std::move(slot));
  }
  option_trace_.push_back(total);
  assemble(std::vector<std::size_t>(slots_.size(), 0));
}

bool LazyAdversary::static_graph_fixed() const {
  auto key = [](NodeId a, NodeId b) { return std::pair(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<NodeId, NodeId>> fixed_pairs;
  for (const EdgeRecord& r : fixed_) fixed_pairs.insert(key(r.u, r.v));
  for (const LazySlot& slot : slots_) {
    const auto first = key(slot.options.front().u, slot.options.front().v);
    for (const LazyOption& o : slot.options) {
      const auto pair = key(o.u, o.v);
      bool merges = variant_ == Variant::Multilabel && fixed_pairs.contains(pair);
      if (pair != first && !merges) return false;
    }
  }
  return true;
}

Disclosure LazyAdversary::disclose(const GameConfig& config) {
  check_shape(config, node_count_, lifetime_, variant_);
  delta_ = config.delta;
  Disclosure d{node_count_, std::nullopt};
  if (config.knowledge == Knowledge::StaticKnown) {
    if (!static_graph_fixed()) {
      throw TgdError(name_ + " adversary hides the static graph; use the nodes-only knowledge mode");
    }
    d.pairs = assemble(std::vector<std::size_t>(slots_.size(), 0)).static_pairs();
  }
  return d;
}

InfectionLog LazyAdversary::respond(const SeedSet& seeds) {
  for (const Seed& s : seeds) {
    if (s.node >= node_count_ || s.time < 0 || s.time > lifetime_) {
      throw TgdError("seed out of range");
    }
  }

  std::vector<std::vector<std::pair<NodeId, NodeId>>> edges_at(lifetime_ + 1);
  for (const EdgeRecord& r : fixed_) {
    for (Time t : r.labels) edges_at[t].emplace_back(r.u, r.v);
  }
  for (const LazySlot& slot : slots_) {
    if (!slot.committed) continue;
    const LazyOption& o = slot.options[*slot.committed];
    edges_at[o.label].emplace_back(o.u, o.v);
  }

  std::vector<Time> infected_at(node_count_, -1);
  auto infectious = [&](NodeId v, Time t) {
    return infected_at[v] >= 0 && infectious_at(infected_at[v], t, delta_);
  };

  InfectionLog log;
  std::map<NodeId, NodeId> fresh;
  for (Time t = 0; t <= lifetime_; ++t) {
    for (const Seed& s : seeds) {
      if (s.time == t && infected_at[s.node] < 0) {
        infected_at[s.node] = t;
        log.push_back({s.node, s.node, t, std::nullopt});
      }
    }

    fresh.clear();
    auto offer = [&](NodeId from, NodeId to) {
      if (!infectious(from, t) || infected_at[to] >= 0) return;
      auto [it, inserted] = fresh.emplace(to, from);
      if (!inserted) it->second = std::min(it->second, from);
    };
    for (auto [a, b] : edges_at[t]) {
      offer(a, b);
      offer(b, a);
    }

    auto susceptible = [&](NodeId v) { return infected_at[v] < 0 && !fresh.contains(v); };
    for (LazySlot& slot : slots_) {
      if (slot.committed) continue;
      for (std::size_t i = 0; i < slot.options.size() && !slot.committed; ++i) {
        const LazyOption& o = slot.options[i];
        if (!slot.alive[i] || o.label != t) continue;
        std::optional<std::pair<NodeId, NodeId>> attempt;
        if (infectious(o.u, t) && susceptible(o.v)) attempt = std::pair(o.u, o.v);
        if (infectious(o.v, t) && susceptible(o.u)) attempt = std::pair(o.v, o.u);
        if (!attempt) continue;
        if (slot.alive_count > 1) {
          slot.alive[i] = false;
          --slot.alive_count;
        } else {
          slot.committed = i;
          fresh.emplace(attempt->second, attempt->first);
        }
      }
    }

    for (auto [to, from] : fresh) {
      infected_at[to] = t;
      log.push_back({from, to, t, std::nullopt});
    }
  }

  std::sort(log.begin(), log.end(), [](const InfectionEvent& a, const InfectionEvent& b) {
    return std::pair(a.time, a.infected) < std::pair(b.time, b.infected);
  });
  std::size_t total = 0;
  for (const LazySlot& slot : slots_) total += slot.committed ? 1 : slot.alive_count;
  option_trace_.push_back(total);
  return log;
}

TemporalGraph LazyAdversary::assemble(const std::vector<std::size_t>& choice) const {
  std::vector<EdgeRecord> records = fixed_;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    const LazyOption& o = slots_[s].options[choice[s]];
    NodeId a = std::min(o.u, o.v), b = std::max(o.u, o.v);
    auto existing = std::find_if(records.begin(), records.end(), [&](const EdgeRecord& r) {
      return std::min(r.u, r.v) == a && std::max(r.u, r.v) == b;
    });
    if (variant_ == Variant::Multilabel && existing != records.end()) {
      existing->labels.push_back(o.label);
    } else {
      records.push_back({a, b, {o.label}});
    }
  }
  return TemporalGraph(node_count_, lifetime_, variant_, std::move(records));
}

TemporalGraph LazyAdversary::final_graph(const Answer& answer) {
  std::vector<std::size_t> choice;
  std::vector<std::size_t> second;
  for (const LazySlot& slot : slots_) {
    std::vector<std::size_t> live;
    if (slot.committed) {
      live.push_back(*slot.committed);
    } else {
      for (std::size_t i = 0; i < slot.options.size() && live.size() < 2; ++i) {
        if (slot.alive[i]) live.push_back(i);
      }
    }
    choice.push_back(live.front());
    second.push_back(live.size() > 1 ? live[1] : live.front());
  }
  TemporalGraph graph = assemble(choice);
  const auto* claimed = std::get_if<TemporalGraph>(&answer);
  if (!claimed || !(*claimed == graph)) return graph;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (second[s] != choice[s]) {
      choice[s] = second[s];
      return assemble(choice);
    }
  }
  return graph;
}

std::vector<std::pair<NodeId, NodeId>> greedy_connected_edges(std::size_t n, std::size_t count,
                                                              std::size_t max_degree) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::size_t> degree(n, 0);
  std::set<std::pair<NodeId, NodeId>> present;
  std::vector<bool> queued(n, false);
  std::deque<NodeId> order;
  if (n > 0) {
    order.push_back(0);
    queued[0] = true;
  }
  while (edges.size() < count && !order.empty()) {
    NodeId v = order.front();
    order.pop_front();
    for (NodeId w = 0; w < n && edges.size() < count && degree[v] < max_degree; ++w) {
      if (w == v || degree[w] >= max_degree || present.contains({std::min(v, w), std::max(v, w)})) {
        continue;
      }
      present.insert({std::min(v, w), std::max(v, w)});
      edges.emplace_back(std::min(v, w), std::max(v, w));
      ++degree[v];
      ++degree[w];
      if (!queued[w]) {
        queued[w] = true;
        order.push_back(w);
      }
    }
  }
  if (edges.size() < count) throw TgdError("greedy construction ran out of admissible edges");
  return edges;
}

std::vector<std::pair<NodeId, NodeId>> greedy_balanced_edges(std::size_t n, std::size_t count) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (count == 0) return edges;
  if (n < 2) throw TgdError("need at least two nodes");
  std::vector<std::size_t> degree(n, 0);
  std::set<std::pair<NodeId, NodeId>> present;
  auto add = [&](NodeId a, NodeId b) {
    present.insert({std::min(a, b), std::max(a, b)});
    edges.emplace_back(std::min(a, b), std::max(a, b));
    ++degree[a];
    ++degree[b];
  };
  add(0, 1);
  while (edges.size() < count) {
    std::vector<NodeId> sources;
    for (NodeId v = 0; v < n; ++v) {
      if (degree[v] > 0) sources.push_back(v);
    }
    std::stable_sort(sources.begin(), sources.end(),
                     [&](NodeId a, NodeId b) { return degree[a] < degree[b]; });
    bool added = false;
    for (NodeId v : sources) {
      std::optional<NodeId> best;
      for (NodeId w = 0; w < n; ++w) {
        if (w == v || present.contains({std::min(v, w), std::max(v, w)})) continue;
        if (!best || degree[w] < degree[*best]) best = w;
      }
      if (best) {
        add(v, *best);
        added = true;
        break;
      }
    }
    if (!added) throw TgdError("greedy construction ran out of admissible edges");
  }
  return edges;
}

namespace {

void check_counts(std::size_t n, std::size_t m, Time lifetime, Time delta, std::size_t k) {
  if (n < 4) throw TgdError("the construction needs n >= 4");
  if (m < 1 || m > n * (n - 1) / 2 - n) throw TgdError("m must lie in [1, C(n,2) - n]");
  if (k < 1 || k > n) throw TgdError("k must lie in [1, n]");
  if (delta < 1 || delta > lifetime) throw TgdError("delta must lie in [1, Tmax]");
}

}  // namespace

std::unique_ptr<LazyAdversary> make_thm52_adversary(std::size_t n, Time lifetime, Time delta,
                                                    std::size_t k) {
  if (delta < 1 || k < 1) throw TgdError("delta and k must be positive");
  Thm52Family family = build_thm52_family(n, lifetime);
  std::vector<std::vector<LazyOption>> slots;
  for (auto [u, v] : family.free_edges) {
    std::vector<LazyOption> options;
    for (Time t = 1; t <= lifetime; ++t) options.push_back({u, v, t});
    slots.push_back(std::move(options));
  }
  return std::make_unique<LazyAdversary>("thm52", n, lifetime, Variant::Simple, family.fixed,
                                         std::move(slots),
                                         thm52_round_bound(n, lifetime, delta, k));
}

std::unique_ptr<LazyAdversary> make_unknown_static_adversary(std::size_t n, std::size_t m,
                                                             Time lifetime, Time delta,
                                                             std::size_t k) {
  check_counts(n, m, lifetime, delta, k);
  std::vector<EdgeRecord> fixed;
  std::set<std::pair<NodeId, NodeId>> taken;
  for (auto [u, v] : greedy_connected_edges(n, m - 1, n - 2)) {
    fixed.push_back({u, v, {1}});
    taken.insert({u, v});
  }
  std::vector<LazyOption> options;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (taken.contains({u, v})) continue;
      for (Time t = 1; t <= lifetime; ++t) options.push_back({u, v, t});
    }
  }
  const std::size_t bound =
      n * static_cast<std::size_t>(lifetime) / (2 * static_cast<std::size_t>(delta) * k);
  return std::make_unique<LazyAdversary>("unknown-static", n, lifetime, Variant::Simple,
                                         std::move(fixed),
                                         std::vector<std::vector<LazyOption>>{std::move(options)},
                                         bound);
}

std::unique_ptr<LazyAdversary> make_multilabel_adversary(std::size_t n, std::size_t m,
                                                         Time lifetime, Time delta,
                                                         std::size_t k) {
  check_counts(n, m, lifetime, delta, k);
  if (lifetime < 2) throw TgdError("the multilabel adversary needs Tmax >= 2");
  std::vector<EdgeRecord> fixed;
  std::vector<LazyOption> options;
  for (auto [u, v] : greedy_balanced_edges(n, m)) {
    fixed.push_back({u, v, {1}});
    for (Time t = 2; t <= lifetime; ++t) options.push_back({u, v, t});
  }
  const std::size_t bound = std::min(n, 2 * m) * static_cast<std::size_t>(lifetime) /
                            (2 * static_cast<std::size_t>(delta) * k);
  return std::make_unique<LazyAdversary>("multilabel", n, lifetime, Variant::Multilabel,
                                         std::move(fixed),
                                         std::vector<std::vector<LazyOption>>{std::move(options)},
                                         bound);
}

namespace {

bool round_consistent(const TemporalGraph& graph, const Round& round, Time delta,
                      std::optional<LabelOverride> override_label) {
  if (round.feedback.log) {
    return verify_log_consistency(graph, round.seeds, *round.feedback.log, delta, override_label);
  }
  return simulate(graph, round.seeds, delta, TiePolicy::lowest_id(), override_label).timetable ==
         round.feedback.timetable;
}

}  // namespace

PotentialTrace potential(const TemporalGraph& graph, const Transcript& transcript, Time delta) {
  if (graph.variant() == Variant::Multilabel) {
    throw TgdError("the potential is defined for single-label records only");
  }
  const Time tmax = graph.lifetime();
  const std::size_t m = graph.edge_count();
  std::vector<std::vector<bool>> consistent(m, std::vector<bool>(tmax + 1, true));
  for (RecordId r = 0; r < m; ++r) {
    const EdgeRecord& rec = graph.record(r);
    consistent[r][0] = false;
    for (RecordId other : graph.records_between(rec.u, rec.v)) {
      if (other != r) consistent[r][graph.record(other).labels.front()] = false;
    }
  }
  auto total = [&] {
    std::size_t sum = 0;
    for (const auto& row : consistent) sum += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
    return sum;
  };

  PotentialTrace trace;
  trace.values.push_back(total());
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    const Round& round = transcript.rounds[i];
    if (!round_consistent(graph, round, delta, std::nullopt)) {
      throw TgdError("round " + std::to_string(i + 1) + " is inconsistent with the graph");
    }
    const InfectionTimetable& touched = round.feedback.timetable;
    auto infected_at = [&](NodeId v) -> std::optional<Time> {
      auto it = touched.find(v);
      if (it == touched.end()) return std::nullopt;
      return it->second;
    };
    auto infectious = [&](std::optional<Time> at, Time s) { return at && *at < s && s <= *at + delta; };
    // The record can transmit at s: one end infectious, the other not yet
    // infected before s.
    auto can_transmit = [&](std::optional<Time> a, std::optional<Time> b, Time s) {
      return (infectious(a, s) && (!b || *b >= s)) || (infectious(b, s) && (!a || *a >= s));
    };
    for (RecordId r = 0; r < m; ++r) {
      const EdgeRecord& rec = graph.record(r);
      const auto a = infected_at(rec.u), b = infected_at(rec.v);
      if (!a && !b) continue;
      const Time label = rec.labels.front();
      // Unless the record could fire at its own label, moving it only matters
      // where it could fire at the new one; elsewhere the run is unchanged.
      const bool fired = can_transmit(a, b, label);
      for (Time l = 1; l <= tmax; ++l) {
        if (!consistent[r][l] || l == label) continue;
        if (!fired && !can_transmit(a, b, l)) continue;
        if (!round_consistent(graph, round, delta, LabelOverride{r, l})) consistent[r][l] = false;
      }
    }
    trace.values.push_back(total());
  }
  return trace;
}

Transcript honest_transcript(const TemporalGraph& graph, const std::vector<SeedSet>& schedule,
                             Time delta, Feedback feedback) {
  Transcript transcript;
  transcript.disclosure = {graph.node_count(), graph.static_pairs()};
  for (const SeedSet& seeds : schedule) {
    Infection inf = simulate(graph, seeds, delta);
    Round round{seeds, {}};
    round.feedback.timetable = std::move(inf.timetable);
    if (feedback == Feedback::FullLog) round.feedback.log = std::move(inf.log);
    transcript.rounds.push_back(std::move(round));
  }
  return transcript;
}

bool witness_verify(const TemporalGraph& graph, const std::vector<SeedSet>& schedule,
                    Time delta, Feedback feedback) {
  PotentialTrace trace = potential(graph, honest_transcript(graph, schedule, delta, feedback), delta);
  return trace.values.back() == graph.edge_count();
}

std::vector<SeedSet> per_edge_schedule(const TemporalGraph& graph) {
  std::vector<SeedSet> schedule;
  for (const EdgeRecord& r : graph.records()) {
    for (Time t : r.labels) schedule.push_back({Seed{r.u, t - 1}});
  }
  return schedule;
}

}  // namespace tgd
