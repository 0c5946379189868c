#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tgd/temporal_graph.hpp"

namespace tgd {

struct ErtParams {
  std::size_t n = 0;
  double p = 0.0;
  Time lifetime = 1;
  std::uint64_t rng_seed = 0;
  Variant variant = Variant::Simple;
  // Multiedge: records per present pair, uniform in [1, max_multiplicity]
  // (capped at Tmax), with distinct uniform labels. Multilabel: the same
  // draw gives the label-set size of the single record.
  std::size_t max_multiplicity = 1;
};

// Temporal Erdos-Renyi graph: every unordered pair present independently
// with probability p, labels uniform on [1, Tmax]. Deterministic in the seed.
TemporalGraph generate_ert(const ErtParams& params);

// Nodes v1..vn map to ids 0..n-1. Path edges are numbered 1..n-3 along
// v1..v_{n-2}; even-numbered ones are fixed to Tmax, odd-numbered ones free.
struct Thm52Family {
  std::size_t node_count = 0;
  Time lifetime = 0;
  std::vector<EdgeRecord> fixed;
  std::vector<std::pair<NodeId, NodeId>> free_edges;

  std::size_t static_edge_count() const { return fixed.size() + free_edges.size(); }
  // Labels the free edges in order. Throws on a size mismatch.
  TemporalGraph complete(const std::vector<Time>& free_labels) const;
};

// Requires n even, n >= 6 and Tmax >= 4.
Thm52Family build_thm52_family(std::size_t n, Time lifetime);

// floor(n (Tmax - 3) / (2 delta k)).
std::size_t thm52_round_bound(std::size_t n, Time lifetime, Time delta, std::size_t k);

enum class OmegaEdgeKind {
  LeftEven,   // l_i r_{p(i,j)}
  PathEdge,   // consecutive nodes of p_q
  BRight,     // b_i r_{(p_i)_j}
  BB,         // b_i b_j, i < j
  BCSame,     // b_i c_i
  BCLower,    // b_i c_j, i > j
  CRight,     // c_i r_j
  LeftB,      // l_i b_j
};

// Family with x >= 1: n = 5x, delta = 4x + 1, Tmax = x * delta. All indices
// below are 0-based; the phase of l_i, b_i, c_i and p_i is i. Node ids: L at
// [0, x), R at [x, 3x) with r_1..r_{2x} in order, B at [3x, 4x), C at [4x, 5x).
struct OmegaFamily {
  std::size_t x = 0;
  Time delta = 0;
  Time lifetime = 0;
  std::vector<NodeId> left, right, bottom, connector;
  // paths[q] lists R positions (0-based, r_{z+1} at position z) along p_q.
  std::vector<std::vector<std::size_t>> paths;
  TemporalGraph graph;
  std::vector<OmegaEdgeKind> kind;           // per record
  std::vector<std::size_t> designated_phase;  // per record
};

// Edge-disjoint Hamiltonian paths of the complete graph on 2x vertices, by
// the rotating zigzag k, k+1, k-1, k+2, ... (mod 2x).
std::vector<std::vector<std::size_t>> zigzag_path_decomposition(std::size_t x);

OmegaFamily build_omega_m_family(std::size_t x);

// Per record, floor(label / delta); the phase E_i covers [i delta, (i+1) delta - 1].
// Uses the smallest label of multilabel records.
std::vector<std::size_t> phases(const TemporalGraph& graph, Time delta);

}  // namespace tgd
