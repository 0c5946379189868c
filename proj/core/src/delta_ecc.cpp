#include "tgd/delta_ecc.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "tgd/union_find.hpp"

namespace tgd {

double DeltaEccPartition::mean_size() const {
  if (component_count == 0) return 0.0;
  return static_cast<double>(items.size()) / static_cast<double>(component_count);
}

std::vector<std::vector<std::tuple<NodeId, NodeId, Time>>> DeltaEccPartition::groups(
    const TemporalGraph& graph) const {
  std::vector<std::vector<std::tuple<NodeId, NodeId, Time>>> out(component_count);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const EdgeRecord& r = graph.record(items[i].record);
    out[component_id[i]].emplace_back(r.u, r.v, items[i].label);
  }
  for (auto& g : out) std::sort(g.begin(), g.end());
  std::sort(out.begin(), out.end());
  return out;
}

DeltaEccPartition delta_ecc(const TemporalGraph& graph, Time delta) {
  if (delta < 1) throw TgdError("delta must be positive");

  DeltaEccPartition part;
  std::vector<std::size_t> first_item(graph.edge_count());
  for (RecordId id = 0; id < graph.edge_count(); ++id) {
    first_item[id] = part.items.size();
    for (Time t : graph.record(id).labels) part.items.push_back({id, t});
  }

  // At each node, sort incident items by label; linking neighbours in that
  // order yields the same closure as linking every pair within delta.
  UnionFind sets(part.items.size());
  std::vector<std::pair<Time, std::size_t>> around;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    around.clear();
    for (const Incidence& inc : graph.incident(v)) {
      const EdgeRecord& r = graph.record(inc.record);
      for (std::size_t j = 0; j < r.labels.size(); ++j) {
        around.emplace_back(r.labels[j], first_item[inc.record] + j);
      }
    }
    std::sort(around.begin(), around.end());
    for (std::size_t i = 1; i < around.size(); ++i) {
      if (around[i].first - around[i - 1].first <= delta) {
        sets.unite(around[i].second, around[i - 1].second);
      }
    }
  }

  std::vector<std::size_t> dense(part.items.size(), SIZE_MAX);
  part.component_id.resize(part.items.size());
  for (std::size_t i = 0; i < part.items.size(); ++i) {
    std::size_t root = sets.find(i);
    if (dense[root] == SIZE_MAX) {
      dense[root] = part.component_count++;
      part.sizes.push_back(0);
    }
    part.component_id[i] = dense[root];
    ++part.sizes[dense[root]];
  }
  return part;
}

}  // namespace tgd
