#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <tgd/delta_ecc.hpp>
#include <tgd/infection.hpp>
#include <tgd/temporal_graph.hpp>

namespace tgd::fixtures {

// Hand-rolled instance generator for property tests; deliberately not
// generate_ert so the generator under test is not its own input source.
inline TemporalGraph random_graph(std::mt19937_64& rng, std::size_t n, Time tmax, double p,
                                  Variant variant = Variant::Simple, std::size_t max_mult = 3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Time> label(1, tmax);
  std::vector<EdgeRecord> records;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng) >= p) continue;
      if (variant == Variant::Simple) {
        records.push_back({u, v, {label(rng)}});
        continue;
      }
      std::size_t count = 1 + rng() % std::min<std::size_t>(max_mult, tmax);
      std::set<Time> labels;
      while (labels.size() < count) labels.insert(label(rng));
      if (variant == Variant::Multilabel) {
        records.push_back({u, v, {labels.begin(), labels.end()}});
      } else {
        for (Time t : labels) records.push_back({u, v, {t}});
      }
    }
  }
  return TemporalGraph(n, tmax, variant, std::move(records));
}

// Step-by-step state enumeration: scans every record at every step.
inline std::map<NodeId, Time> naive_timetable(const TemporalGraph& g, const SeedSet& seeds,
                                              Time delta) {
  const Time none = -1;
  std::vector<Time> at(g.node_count(), none);
  for (Time t = 0; t <= g.lifetime(); ++t) {
    for (const Seed& s : seeds) {
      if (s.time == t && at[s.node] == none) at[s.node] = t;
    }
    std::vector<NodeId> fresh;
    for (NodeId w = 0; w < g.node_count(); ++w) {
      if (at[w] != none) continue;
      bool hit = false;
      for (const EdgeRecord& r : g.records()) {
        if (r.u != w && r.v != w) continue;
        if (!r.has_label(t)) continue;
        Time o = at[r.other(w)];
        if (o != none && o < t && t <= o + delta) hit = true;
      }
      if (hit) fresh.push_back(w);
    }
    for (NodeId w : fresh) at[w] = t;
  }
  std::map<NodeId, Time> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (at[v] != none) out[v] = at[v];
  }
  return out;
}

// All (record, label) items, partitioned by transitive closure of the
// adjacency relation computed with Floyd-Warshall.
inline std::vector<std::vector<bool>> closure_oracle(const TemporalGraph& g, Time delta,
                                                     std::vector<std::pair<RecordId, Time>>& items) {
  items.clear();
  for (RecordId i = 0; i < g.edge_count(); ++i) {
    for (Time t : g.record(i).labels) items.push_back({i, t});
  }
  const std::size_t k = items.size();
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const EdgeRecord& x = g.record(items[a].first);
      const EdgeRecord& y = g.record(items[b].first);
      bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      Time diff = items[a].second > items[b].second ? items[a].second - items[b].second
                                                    : items[b].second - items[a].second;
      reach[a][b] = a == b || (share && diff <= delta);
    }
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!reach[a][m]) continue;
      for (std::size_t b = 0; b < k; ++b) {
        if (reach[m][b]) reach[a][b] = true;
      }
    }
  }
  return reach;
}

// True iff the union-find partition groups items exactly as the closure.
inline bool ecc_agrees_with_closure(const TemporalGraph& g, Time delta) {
  DeltaEccPartition part = delta_ecc(g, delta);
  std::vector<std::pair<RecordId, Time>> items;
  auto reach = closure_oracle(g, delta, items);
  if (part.items.size() != items.size()) return false;
  std::map<std::pair<RecordId, Time>, std::size_t> comp;
  for (std::size_t i = 0; i < part.items.size(); ++i) {
    comp[{part.items[i].record, part.items[i].label}] = part.component_id[i];
  }
  for (std::size_t a = 0; a < items.size(); ++a) {
    for (std::size_t b = 0; b < items.size(); ++b) {
      if ((comp.at(items[a]) == comp.at(items[b])) != reach[a][b]) return false;
    }
  }
  std::size_t total = 0;
  for (std::size_t s : part.sizes) total += s;
  return total == items.size() && part.sizes.size() == part.component_count;
}

// Static simple graphs without isolated nodes and with exactly `edges`
// edges, one per isomorphism class. Canonical form: over every ordering of
// the edge list, number nodes by first appearance and keep the smallest
// resulting list.
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline EdgeList canonical_edges(const EdgeList& edges) {
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  EdgeList best;
  do {
    // Orientation only matters for edges whose endpoints are both unseen.
    int free_mask = 0;
    std::set<NodeId> seen;
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto [a, b] = edges[order[k]];
      if (!seen.count(a) && !seen.count(b)) free_mask |= 1 << k;
      seen.insert(a);
      seen.insert(b);
    }
    for (int flip = free_mask;; flip = (flip - 1) & free_mask) {
      std::map<NodeId, NodeId> rename;
      EdgeList cur;
      for (std::size_t k = 0; k < order.size(); ++k) {
        auto [a, b] = edges[order[k]];
        if (flip >> k & 1) std::swap(a, b);
        for (NodeId v : {a, b}) rename.try_emplace(v, static_cast<NodeId>(rename.size()));
        cur.push_back(std::minmax(rename[a], rename[b]));
      }
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
      if (flip == 0) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline std::vector<std::vector<EdgeList>> graphs_up_to_iso(std::size_t max_edges) {
  std::vector<std::vector<EdgeList>> levels{{EdgeList{}}};
  for (std::size_t m = 1; m <= max_edges; ++m) {
    std::set<EdgeList> next;
    for (const EdgeList& g : levels.back()) {
      NodeId nodes = 0;
      for (auto [a, b] : g) nodes = std::max<NodeId>(nodes, std::max(a, b) + 1);
      for (NodeId a = 0; a < nodes + 2; ++a) {
        for (NodeId b = a + 1; b < nodes + 2; ++b) {
          if (b > nodes + 1 || (a >= nodes && b != a + 1)) continue;
          EdgeList h = g;
          if (std::find(h.begin(), h.end(), std::make_pair(a, b)) != h.end()) continue;
          h.emplace_back(a, b);
          next.insert(canonical_edges(h));
        }
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

inline std::optional<Seed> naive_ipz(const TemporalGraph& g, Time delta) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (Time t = 0; t <= g.lifetime(); ++t) {
      if (naive_timetable(g, {{v, t}}, delta).size() == g.node_count()) return Seed{v, t};
    }
  }
  return std::nullopt;
}

}  // namespace tgd::fixtures
