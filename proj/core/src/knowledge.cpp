#include "tgd/knowledge.hpp"

#include <algorithm>
#include <string>

namespace tgd {

KnowledgeState::KnowledgeState(std::size_t node_count, Time lifetime, Time delta,
                               const std::vector<StaticPair>& pairs)
    : node_count_(node_count), lifetime_(lifetime), delta_(delta), incident_(node_count) {
  for (const StaticPair& p : pairs) {
    if (p.u >= node_count || p.v >= node_count || p.u == p.v) {
      throw TgdError("disclosed pair references an invalid node");
    }
    if (p.multiplicity < 1 || p.multiplicity > static_cast<std::size_t>(lifetime)) {
      throw TgdError("disclosed multiplicity outside [1, Tmax]");
    }
    PairKnowledge k;
    k.u = std::min(p.u, p.v);
    k.v = std::max(p.u, p.v);
    k.multiplicity = p.multiplicity;
    for (Time t = 1; t <= lifetime; ++t) k.candidates.insert(k.candidates.end(), t);
    if (!index_.emplace(std::pair{k.u, k.v}, pairs_.size()).second) {
      throw TgdError("disclosed pair listed twice");
    }
    incident_[k.u].push_back(pairs_.size());
    incident_[k.v].push_back(pairs_.size());
    if (!k.known()) ++unknown_pairs_;
    pairs_.push_back(std::move(k));
  }
}

std::optional<std::size_t> KnowledgeState::pair_index(NodeId a, NodeId b) const {
  auto it = index_.find({std::min(a, b), std::max(a, b)});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeState::node_resolved(NodeId v) const {
  return std::all_of(incident_[v].begin(), incident_[v].end(),
                     [&](std::size_t i) { return pairs_[i].known(); });
}

std::optional<NodeId> KnowledgeState::lowest_unresolved_node() const {
  if (all_known()) return std::nullopt;
  for (NodeId v = 0; v < node_count_; ++v) {
    if (!node_resolved(v)) return v;
  }
  return std::nullopt;
}

std::size_t KnowledgeState::potential() const {
  std::size_t sum = 0;
  for (const PairKnowledge& p : pairs_) sum += p.candidates.size();
  return sum;
}

void KnowledgeState::refresh(std::size_t index, bool was_known) {
  PairKnowledge& p = pairs_[index];
  if (p.candidates.size() < p.multiplicity || p.confirmed.size() > p.multiplicity) {
    throw TgdError("feedback contradicts earlier rounds on pair (" + std::to_string(p.u) +
                   "," + std::to_string(p.v) + ")");
  }
  if (p.confirmed.size() == p.multiplicity) p.candidates = p.confirmed;
  if (!was_known && p.known()) --unknown_pairs_;
}

void KnowledgeState::confirm(std::size_t index, Time t) {
  PairKnowledge& p = pairs_[index];
  if (p.confirmed.contains(t)) return;
  if (!p.candidates.contains(t)) {
    throw TgdError("feedback shows label " + std::to_string(t) + " on pair (" +
                   std::to_string(p.u) + "," + std::to_string(p.v) +
                   "), which earlier rounds ruled out");
  }
  bool was_known = p.known();
  p.confirmed.insert(t);
  refresh(index, was_known);
}

void KnowledgeState::eliminate(std::size_t index, Time from, Time to) {
  PairKnowledge& p = pairs_[index];
  auto first = p.candidates.lower_bound(from);
  auto last = p.candidates.upper_bound(to);
  if (first == last) return;
  for (auto it = first; it != last; ++it) {
    if (p.confirmed.contains(*it)) {
      throw TgdError("feedback rules out label " + std::to_string(*it) + " on pair (" +
                     std::to_string(p.u) + "," + std::to_string(p.v) +
                     "), which an earlier round confirmed");
    }
  }
  bool was_known = p.known();
  p.candidates.erase(first, last);
  refresh(index, was_known);
}

void KnowledgeState::absorb(const SeedSet& seeds, const RoundFeedback& feedback) {
  const InfectionTimetable& table = feedback.timetable;
  auto time_of = [&](NodeId v) -> std::optional<Time> {
    auto it = table.find(v);
    if (it == table.end()) return std::nullopt;
    return it->second;
  };

  for (const auto& [x, t0] : table) {
    if (x >= node_count_) throw TgdError("feedback names an unknown node");
    for (std::size_t i : incident_[x]) {
      std::optional<Time> ty = time_of(pairs_[i].other(x));
      Time last = std::min(t0 + delta_, lifetime_);
      if (ty) last = std::min(last, *ty - 1);
      if (last >= t0 + 1) eliminate(i, t0 + 1, last);
    }
  }

  if (feedback.log) {
    for (const InfectionEvent& e : *feedback.log) {
      if (e.is_seed()) continue;
      auto i = pair_index(e.infector, e.infected);
      if (!i) throw TgdError("feedback uses an edge outside the disclosed static graph");
      confirm(*i, e.time);
    }
  }

  for (const auto& [v, t] : table) {
    if (seeds.contains({v, t})) continue;
    std::optional<std::size_t> only;
    std::size_t count = 0;
    for (std::size_t i : incident_[v]) {
      std::optional<Time> tx = time_of(pairs_[i].other(v));
      if (!tx || !infectious_at(*tx, t, delta_) || !pairs_[i].candidates.contains(t)) continue;
      only = i;
      ++count;
    }
    if (count == 0) {
      throw TgdError("node " + std::to_string(v) + " reported infected at " +
                     std::to_string(t) + " without a possible infector");
    }
    if (count == 1) confirm(*only, t);
  }
}

namespace {

TemporalGraph build(std::size_t n, Time lifetime, Variant variant,
                    const std::vector<PairKnowledge>& pairs, bool confirmed_only) {
  std::vector<EdgeRecord> records;
  for (const PairKnowledge& p : pairs) {
    const std::set<Time>& labels = confirmed_only ? p.confirmed : p.candidates;
    if (labels.empty()) continue;
    if (variant == Variant::Multilabel) {
      records.push_back({p.u, p.v, {labels.begin(), labels.end()}});
    } else {
      for (Time t : labels) records.push_back({p.u, p.v, {t}});
    }
  }
  return TemporalGraph(n, lifetime, variant, std::move(records));
}

}  // namespace

TemporalGraph KnowledgeState::to_graph(Variant variant) const {
  if (!all_known()) throw TgdError("labels are not fully determined yet");
  return build(node_count_, lifetime_, variant, pairs_, false);
}

TemporalGraph KnowledgeState::fired_graph(Variant variant) const {
  return build(node_count_, lifetime_, variant, pairs_, true);
}

}  // namespace tgd
