#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <tgd/generators.hpp>

namespace tgd::fixtures {

// Recomputes every label of the family from its node roles and paths and
// returns the first discrepancy, or an empty string.
inline std::string omega_problems(const OmegaFamily& f) {
  const std::size_t x = f.x;
  const Time d = f.delta;
  if (d != static_cast<Time>(4 * x + 1)) return "delta";
  if (f.lifetime != static_cast<Time>(x) * d) return "lifetime";
  if (f.graph.node_count() != 5 * x) return "node count";

  // Paths: Hamiltonian on R, edge-disjoint, covering R^2, p_q starting at r_{2q}.
  std::set<std::pair<std::size_t, std::size_t>> path_pairs;
  for (std::size_t q = 0; q < x; ++q) {
    const auto& p = f.paths[q];
    std::vector<std::size_t> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t z = 0; z < 2 * x; ++z) {
      if (sorted.size() != 2 * x || sorted[z] != z) return "path " + std::to_string(q) + " not Hamiltonian";
    }
    if (p.front() != 2 * q + 1) return "path " + std::to_string(q) + " start";
    for (std::size_t j = 1; j < p.size(); ++j) {
      auto key = std::minmax(p[j - 1], p[j]);
      if (!path_pairs.insert(key).second) return "paths share an edge";
    }
  }
  if (path_pairs.size() != x * (2 * x - 1)) return "paths do not cover R^2";

  auto index_in = [](const std::vector<NodeId>& set, NodeId v) -> std::ptrdiff_t {
    auto it = std::find(set.begin(), set.end(), v);
    return it == set.end() ? -1 : it - set.begin();
  };

  std::size_t counts[8] = {};
  const auto& records = f.graph.records();
  if (f.kind.size() != records.size() || f.designated_phase.size() != records.size()) {
    return "per-record metadata size";
  }
  for (std::size_t id = 0; id < records.size(); ++id) {
    const EdgeRecord& r = records[id];
    const Time label = r.labels[0];
    Time expected = -1;
    auto role = [&](NodeId v) {
      if (index_in(f.left, v) >= 0) return 'L';
      if (index_in(f.right, v) >= 0) return 'R';
      if (index_in(f.bottom, v) >= 0) return 'B';
      return 'C';
    };
    const std::string order = "LBRC";
    NodeId a = r.u, b = r.v;
    char ra = role(a), rb = role(b);
    if (order.find(ra) > order.find(rb) || (ra == rb && a > b)) {
      std::swap(a, b);
      std::swap(ra, rb);
    }
    std::string roles{ra, rb};
    auto kind = f.kind[id];
    ++counts[static_cast<int>(kind)];
    if (roles == "LR" && kind == OmegaEdgeKind::LeftEven) {
      std::size_t i = index_in(f.left, a);
      std::size_t z = index_in(f.right, b);
      if (z % 2 == 0) return "L edge to odd r";
      const auto& p = f.paths[i];
      std::size_t rank = 0;
      for (std::size_t k = 0; p[k] != z; ++k) rank += p[k] % 2;
      expected = static_cast<Time>(i) * d + 4 * static_cast<Time>(rank) + 1;
    } else if (roles == "RR" && kind == OmegaEdgeKind::PathEdge) {
      std::size_t za = index_in(f.right, a), zb = index_in(f.right, b);
      for (std::size_t q = 0; q < x; ++q) {
        const auto& p = f.paths[q];
        for (std::size_t j = 1; j < p.size(); ++j) {
          if (std::minmax(p[j - 1], p[j]) == std::minmax(za, zb)) {
            expected = static_cast<Time>(q) * d + 2 * static_cast<Time>(j) + 1;
          }
        }
      }
    } else if (roles == "BR" && kind == OmegaEdgeKind::BRight) {
      std::size_t i = index_in(f.bottom, a);
      std::size_t z = index_in(f.right, b);
      const auto& p = f.paths[i];
      std::size_t j = std::find(p.begin(), p.end(), z) - p.begin() + 1;
      if (j > x) return "B edge beyond the first x path nodes";
      expected = static_cast<Time>(i) * d + 2 * static_cast<Time>(j) + 2;
    } else if (roles == "BB" && kind == OmegaEdgeKind::BB) {
      std::size_t i = std::min(index_in(f.bottom, a), index_in(f.bottom, b));
      expected = static_cast<Time>(i + 1) * d - 2;
    } else if (roles == "BC" && kind == OmegaEdgeKind::BCSame) {
      std::size_t i = index_in(f.bottom, a);
      if (index_in(f.connector, b) != static_cast<std::ptrdiff_t>(i)) return "b_i c_j with i != j";
      expected = static_cast<Time>(i + 1) * d - 1;
    } else if (roles == "BC" && kind == OmegaEdgeKind::BCLower) {
      std::size_t i = index_in(f.bottom, a), j = index_in(f.connector, b);
      if (!(i > j)) return "b_i c_j lower with i <= j";
      expected = static_cast<Time>(i + 1) * d - 2;
    } else if (roles == "RC" && kind == OmegaEdgeKind::CRight) {
      std::size_t i = index_in(f.connector, b);
      expected = static_cast<Time>(i + 1) * d;
    } else if (roles == "LB" && kind == OmegaEdgeKind::LeftB) {
      std::size_t j = index_in(f.bottom, b);
      expected = static_cast<Time>(j + 1) * d;
    } else {
      return "record " + std::to_string(id) + " has roles " + roles + " that do not fit its kind";
    }
    if (label != expected) {
      return "record " + std::to_string(id) + " label " + std::to_string(label) + " expected " +
             std::to_string(expected);
    }
    if (static_cast<std::size_t>(label / d) != f.designated_phase[id]) {
      return "record " + std::to_string(id) + " outside its phase";
    }
  }
  const std::size_t expect[8] = {x * x,     x * (2 * x - 1), x * x,     x * (x - 1) / 2,
                                 x,         x * (x - 1) / 2, 2 * x * x, x * x};
  for (int k = 0; k < 8; ++k) {
    if (counts[k] != expect[k]) return "edge count of kind " + std::to_string(k);
  }
  return {};
}

// Longest run of consecutive odd-indexed r's (even positions) on any path.
inline std::size_t longest_odd_run(const OmegaFamily& f) {
  std::size_t best = 0;
  for (const auto& p : f.paths) {
    std::size_t run = 0;
    for (std::size_t z : p) {
      run = z % 2 == 0 ? run + 1 : 0;
      best = std::max(best, run);
    }
  }
  return best;
}

}  // namespace tgd::fixtures
