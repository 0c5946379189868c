#include "tgd/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace tgd {

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::Simple:
      return "simple";
    case Variant::Multilabel:
      return "multilabel";
    case Variant::Multiedge:
      return "multiedge";
  }
  return "simple";
}

Variant parse_variant(std::string_view text) {
  if (text == "simple") return Variant::Simple;
  if (text == "multilabel") return Variant::Multilabel;
  if (text == "multiedge") return Variant::Multiedge;
  throw TgdError("unknown graph variant '" + std::string(text) + "'");
}

bool EdgeRecord::has_label(Time t) const {
  return std::binary_search(labels.begin(), labels.end(), t);
}

TemporalGraph::TemporalGraph(std::size_t node_count, Time lifetime,
                             Variant variant, std::vector<EdgeRecord> records)
    : node_count_(node_count),
      lifetime_(lifetime),
      variant_(variant),
      records_(std::move(records)),
      adjacency_(node_count) {
  if (lifetime_ < 1) throw TgdError("lifetime must be at least 1");

  std::map<std::pair<NodeId, NodeId>, std::set<Time>> labels_per_pair;
  for (RecordId id = 0; id < records_.size(); ++id) {
    EdgeRecord& r = records_[id];
    if (r.u == r.v) throw TgdError("self-loop at node " + std::to_string(r.u));
    if (r.u >= node_count_ || r.v >= node_count_) {
      throw TgdError("edge (" + std::to_string(r.u) + "," + std::to_string(r.v) +
                     ") references a node outside [0, n-1]");
    }
    if (r.u > r.v) std::swap(r.u, r.v);
    std::sort(r.labels.begin(), r.labels.end());
    if (std::adjacent_find(r.labels.begin(), r.labels.end()) != r.labels.end()) {
      throw TgdError("duplicate label on a single edge record");
    }
    if (r.labels.empty()) throw TgdError("edge record without a label");
    if (variant_ != Variant::Multilabel && r.labels.size() != 1) {
      throw TgdError("simple and multiedge records carry exactly one label");
    }
    for (Time t : r.labels) {
      if (t < 1 || t > lifetime_) {
        throw TgdError("label " + std::to_string(t) + " outside [1, " +
                       std::to_string(lifetime_) + "]");
      }
    }

    auto [it, inserted] = labels_per_pair.try_emplace({r.u, r.v});
    if (!inserted && variant_ != Variant::Multiedge) {
      throw TgdError("duplicate edge (" + std::to_string(r.u) + "," +
                     std::to_string(r.v) + ") in a non-multiedge graph");
    }
    for (Time t : r.labels) {
      if (!it->second.insert(t).second) {
        throw TgdError("parallel edges between " + std::to_string(r.u) + " and " +
                       std::to_string(r.v) + " share label " + std::to_string(t));
      }
    }

    adjacency_[r.u].push_back({r.v, id});
    adjacency_[r.v].push_back({r.u, id});
  }
}

std::vector<RecordId> TemporalGraph::records_between(NodeId u, NodeId v) const {
  std::vector<RecordId> out;
  if (u >= node_count_ || v >= node_count_) return out;
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.neighbor == v) out.push_back(inc.record);
  }
  return out;
}

std::optional<RecordId> TemporalGraph::record_with_label(NodeId u, NodeId v,
                                                         Time t) const {
  if (u >= node_count_ || v >= node_count_) return std::nullopt;
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.neighbor == v && records_[inc.record].has_label(t)) return inc.record;
  }
  return std::nullopt;
}

std::vector<StaticPair> TemporalGraph::static_pairs() const {
  std::map<std::pair<NodeId, NodeId>, std::size_t> count;
  for (const EdgeRecord& r : records_) ++count[{r.u, r.v}];
  std::vector<StaticPair> out;
  out.reserve(count.size());
  for (const auto& [pair, mult] : count) out.push_back({pair.first, pair.second, mult});
  return out;
}

TemporalGraph TemporalGraph::with_labels(RecordId id, std::vector<Time> labels) const {
  std::vector<EdgeRecord> copy = records_;
  copy.at(id).labels = std::move(labels);
  return TemporalGraph(node_count_, lifetime_, variant_, std::move(copy));
}

std::vector<TemporalGraph::CanonicalRecord> TemporalGraph::canonical_form() const {
  std::vector<CanonicalRecord> out;
  out.reserve(records_.size());
  for (const EdgeRecord& r : records_) out.emplace_back(r.u, r.v, r.labels);
  std::sort(out.begin(), out.end());
  return out;
}

bool TemporalGraph::operator==(const TemporalGraph& other) const {
  return node_count_ == other.node_count_ && lifetime_ == other.lifetime_ &&
         variant_ == other.variant_ && canonical_form() == other.canonical_form();
}

bool is_temporal_path(const TemporalGraph& graph,
                      std::span<const LabelledEdge> edges) {
  for (const LabelledEdge& e : edges) {
    if (!graph.record_with_label(e.u, e.v, e.label)) {
      throw TgdError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
                     std::to_string(e.label) + ") is not an edge of the graph");
    }
  }
  if (edges.size() <= 1) return true;

  // Orient the first edge so that its head is shared with the second edge.
  NodeId head;
  std::vector<NodeId> visited;
  const LabelledEdge& first = edges[0];
  const LabelledEdge& second = edges[1];
  if (first.v == second.u || first.v == second.v) {
    visited = {first.u, first.v};
    head = first.v;
  } else if (first.u == second.u || first.u == second.v) {
    visited = {first.v, first.u};
    head = first.u;
  } else {
    return false;
  }

  for (std::size_t i = 1; i < edges.size(); ++i) {
    const LabelledEdge& e = edges[i];
    if (e.label <= edges[i - 1].label) return false;
    NodeId next;
    if (e.u == head) {
      next = e.v;
    } else if (e.v == head) {
      next = e.u;
    } else {
      return false;
    }
    if (std::find(visited.begin(), visited.end(), next) != visited.end()) return false;
    visited.push_back(next);
    head = next;
  }
  return true;
}

void write_graph(std::ostream& out, const TemporalGraph& graph) {
  out << graph.node_count() << ' ' << graph.edge_count() << ' ' << graph.lifetime()
      << ' ' << to_string(graph.variant()) << '\n';
  for (const EdgeRecord& r : graph.records()) {
    out << r.u << ' ' << r.v << ' ';
    for (std::size_t i = 0; i < r.labels.size(); ++i) {
      if (i) out << ',';
      out << r.labels[i];
    }
    out << '\n';
  }
}

namespace {

template <typename Int>
Int parse_int(std::string_view token, std::size_t line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw TgdError("line " + std::to_string(line) + ": expected an integer, got '" +
                   std::string(token) + "'");
  }
  return value;
}

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

TemporalGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line)) break;
  }
  std::istringstream header(line);
  std::string n_tok, m_tok, t_tok, variant_tok;
  if (!(header >> n_tok >> m_tok >> t_tok >> variant_tok)) {
    throw TgdError("line " + std::to_string(line_no) +
                   ": expected header `n m Tmax variant`");
  }
  const auto n = parse_int<std::size_t>(n_tok, line_no);
  const auto m = parse_int<std::size_t>(m_tok, line_no);
  const auto tmax = parse_int<Time>(t_tok, line_no);
  const Variant variant = parse_variant(variant_tok);

  std::vector<EdgeRecord> records;
  records.reserve(m);
  while (records.size() < m && std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream row(line);
    std::string u_tok, v_tok, labels_tok;
    if (!(row >> u_tok >> v_tok >> labels_tok)) {
      throw TgdError("line " + std::to_string(line_no) + ": expected `u v label[,label...]`");
    }
    EdgeRecord r;
    r.u = parse_int<NodeId>(u_tok, line_no);
    r.v = parse_int<NodeId>(v_tok, line_no);
    std::string_view rest = labels_tok;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      r.labels.push_back(parse_int<Time>(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    records.push_back(std::move(r));
  }
  if (records.size() != m) {
    throw TgdError("expected " + std::to_string(m) + " edge records, found " +
                   std::to_string(records.size()));
  }
  return TemporalGraph(n, tmax, variant, std::move(records));
}

TemporalGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TgdError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void save_graph(const std::string& path, const TemporalGraph& graph) {
  std::ofstream out(path);
  if (!out) throw TgdError("cannot write graph file '" + path + "'");
  write_graph(out, graph);
}

}  // namespace tgd
