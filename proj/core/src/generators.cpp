#include "tgd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tgd {

TemporalGraph generate_ert(const ErtParams& params) {
  if (params.p < 0.0 || params.p > 1.0) throw TgdError("edge probability must lie in [0, 1]");
  if (params.lifetime < 1) throw TgdError("lifetime must be at least 1");
  if (params.max_multiplicity < 1) throw TgdError("max_multiplicity must be at least 1");

  std::mt19937_64 rng(params.rng_seed);
  std::bernoulli_distribution present(params.p);
  std::uniform_int_distribution<Time> label(1, params.lifetime);
  const std::size_t cap =
      std::min(params.max_multiplicity, static_cast<std::size_t>(params.lifetime));
  std::uniform_int_distribution<std::size_t> multiplicity(1, cap);
  std::vector<Time> all(static_cast<std::size_t>(params.lifetime));
  std::iota(all.begin(), all.end(), 1);

  std::vector<EdgeRecord> records;
  for (NodeId u = 0; u < params.n; ++u) {
    for (NodeId v = u + 1; v < params.n; ++v) {
      if (!present(rng)) continue;
      if (params.variant == Variant::Simple || cap == 1) {
        records.push_back({u, v, {label(rng)}});
        continue;
      }
      std::vector<Time> labels;
      std::sample(all.begin(), all.end(), std::back_inserter(labels), multiplicity(rng), rng);
      if (params.variant == Variant::Multilabel) {
        records.push_back({u, v, std::move(labels)});
      } else {
        for (Time t : labels) records.push_back({u, v, {t}});
      }
    }
  }
  return TemporalGraph(params.n, params.lifetime, params.variant, std::move(records));
}

TemporalGraph Thm52Family::complete(const std::vector<Time>& free_labels) const {
  if (free_labels.size() != free_edges.size()) {
    throw TgdError("expected " + std::to_string(free_edges.size()) + " free labels");
  }
  std::vector<EdgeRecord> records = fixed;
  for (std::size_t i = 0; i < free_edges.size(); ++i) {
    records.push_back({free_edges[i].first, free_edges[i].second, {free_labels[i]}});
  }
  return TemporalGraph(node_count, lifetime, Variant::Simple, std::move(records));
}

Thm52Family build_thm52_family(std::size_t n, Time lifetime) {
  if (n < 6 || n % 2 != 0) throw TgdError("the family needs an even n >= 6");
  if (lifetime < 4) throw TgdError("the family needs Tmax >= 4");

  Thm52Family family;
  family.node_count = n;
  family.lifetime = lifetime;
  const auto path_nodes = static_cast<NodeId>(n - 2);
  for (NodeId j = 1; j + 1 <= path_nodes; ++j) {
    if (j % 2 == 0) {
      family.fixed.push_back({j - 1, j, {lifetime}});
    } else {
      family.free_edges.emplace_back(j - 1, j);
    }
  }
  const NodeId second_last = path_nodes;
  const NodeId last = path_nodes + 1;
  for (NodeId v = 0; v < path_nodes; ++v) family.fixed.push_back({v, second_last, {lifetime - 2}});
  family.fixed.push_back({second_last, last, {lifetime - 1}});
  for (NodeId v = 0; v < path_nodes; ++v) family.fixed.push_back({v, last, {lifetime}});
  return family;
}

std::size_t thm52_round_bound(std::size_t n, Time lifetime, Time delta, std::size_t k) {
  if (lifetime < 3) return 0;
  return n * static_cast<std::size_t>(lifetime - 3) / (2 * static_cast<std::size_t>(delta) * k);
}

std::vector<std::vector<std::size_t>> zigzag_path_decomposition(std::size_t x) {
  const std::size_t size = 2 * x;
  std::vector<std::vector<std::size_t>> paths;
  for (std::size_t k = 0; k < x; ++k) {
    std::vector<std::size_t> path{k};
    for (std::size_t s = 1; s <= x; ++s) {
      path.push_back((k + s) % size);
      if (s < x) path.push_back((k + size - s) % size);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

OmegaFamily build_omega_m_family(std::size_t x) {
  if (x < 1) throw TgdError("the family needs x >= 1");
  OmegaFamily f;
  f.x = x;
  f.delta = static_cast<Time>(4 * x + 1);
  f.lifetime = static_cast<Time>(x) * f.delta;
  const auto X = static_cast<NodeId>(x);
  for (NodeId i = 0; i < X; ++i) {
    f.left.push_back(i);
    f.bottom.push_back(3 * X + i);
    f.connector.push_back(4 * X + i);
  }
  for (NodeId z = 0; z < 2 * X; ++z) f.right.push_back(X + z);

  // Zigzag path k runs from vertex k to k+x. Odd-numbered paths are reversed,
  // which keeps odd-indexed r's in runs of at most two when x is odd. The
  // start of path k goes to position 2k+1 (r_{2(k+1)}), its other end to 2k.
  auto zigzag = zigzag_path_decomposition(x);
  for (std::size_t k = 1; k < x; k += 2) std::reverse(zigzag[k].begin(), zigzag[k].end());
  std::vector<std::size_t> relabel(2 * x);
  for (std::size_t k = 0; k < x; ++k) {
    relabel[zigzag[k].front()] = 2 * k + 1;
    relabel[zigzag[k].back()] = 2 * k;
  }
  for (auto path : zigzag) {
    for (std::size_t& z : path) z = relabel[z];
    f.paths.push_back(std::move(path));
  }

  std::vector<EdgeRecord> records;
  auto add = [&](NodeId a, NodeId b, Time label, OmegaEdgeKind kind, std::size_t phase) {
    records.push_back({a, b, {label}});
    f.kind.push_back(kind);
    f.designated_phase.push_back(phase);
  };
  const Time d = f.delta;

  for (std::size_t i = 0; i < x; ++i) {
    const Time base = static_cast<Time>(i) * d;
    const std::vector<std::size_t>& path = f.paths[i];

    std::size_t rank = 0;
    for (std::size_t z : path) {
      if (z % 2 == 1) {
        add(f.left[i], f.right[z], base + 4 * static_cast<Time>(rank) + 1,
            OmegaEdgeKind::LeftEven, i);
        ++rank;
      }
    }
    for (std::size_t j = 1; j < path.size(); ++j) {
      add(f.right[path[j - 1]], f.right[path[j]], base + 2 * static_cast<Time>(j) + 1,
          OmegaEdgeKind::PathEdge, i);
    }
    for (std::size_t j = 1; j <= x; ++j) {
      add(f.bottom[i], f.right[path[j - 1]], base + 2 * static_cast<Time>(j) + 2,
          OmegaEdgeKind::BRight, i);
    }
    for (std::size_t j = i + 1; j < x; ++j) {
      add(f.bottom[i], f.bottom[j], base + d - 2, OmegaEdgeKind::BB, i);
    }
    add(f.bottom[i], f.connector[i], base + d - 1, OmegaEdgeKind::BCSame, i);
    for (std::size_t j = 0; j < i; ++j) {
      add(f.bottom[i], f.connector[j], base + d - 2, OmegaEdgeKind::BCLower, i);
    }
    for (NodeId r : f.right) add(f.connector[i], r, base + d, OmegaEdgeKind::CRight, i + 1);
  }
  for (std::size_t i = 0; i < x; ++i) {
    for (std::size_t j = 0; j < x; ++j) {
      add(f.left[i], f.bottom[j], static_cast<Time>(j + 1) * d, OmegaEdgeKind::LeftB, j + 1);
    }
  }

  f.graph = TemporalGraph(5 * x, f.lifetime, Variant::Simple, std::move(records));
  return f;
}

std::vector<std::size_t> phases(const TemporalGraph& graph, Time delta) {
  if (delta < 1) throw TgdError("delta must be at least 1");
  std::vector<std::size_t> out;
  out.reserve(graph.edge_count());
  for (const EdgeRecord& r : graph.records()) {
    out.push_back(static_cast<std::size_t>(r.labels.front() / delta));
  }
  return out;
}

}  // namespace tgd
