#include "tgd/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace tgd {

Bucketing parse_bucketing(const std::string& text) {
  if (text == "raw") return Bucketing::raw();
  const std::string prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string rest = text.substr(prefix.size());
    double width = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), width);
    if (ec == std::errc{} && ptr == rest.data() + rest.size() && width > 0.0) {
      return Bucketing::fixed(width);
    }
  }
  throw TgdError("bucketing must be 'raw' or 'fixed:<width>' with width > 0, got '" + text + "'");
}

Reduction parse_reduction(const std::string& text) {
  if (text == "first") return Reduction::FirstLabel;
  if (text == "multi") return Reduction::Multiedge;
  throw TgdError("reduction must be 'first' or 'multi', got '" + text + "'");
}

namespace {

template <typename T>
bool parse_number(const std::string& token, T& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string> split(std::string line) {
  std::replace(line.begin(), line.end(), ',', ' ');
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

IngestedNetwork build_network(const std::string& id, const std::vector<InteractionRecord>& rows,
                              Bucketing bucketing, Reduction reduction) {
  IngestedNetwork net;
  net.network_id = id;

  std::set<std::int64_t> nodes;
  std::set<double> stamps;
  for (const InteractionRecord& r : rows) {
    nodes.insert(r.u);
    nodes.insert(r.v);
    stamps.insert(r.timestamp);
  }
  net.original_ids.assign(nodes.begin(), nodes.end());
  std::map<std::int64_t, NodeId> dense;
  for (NodeId i = 0; i < net.original_ids.size(); ++i) dense[net.original_ids[i]] = i;

  const double earliest = *stamps.begin();
  std::map<double, Time> rank;
  for (double s : stamps) rank.emplace(s, static_cast<Time>(rank.size() + 1));
  auto step = [&](double ts) -> Time {
    if (bucketing.kind == Bucketing::Kind::Raw) return rank.at(ts);
    return static_cast<Time>(std::floor((ts - earliest) / bucketing.width)) + 1;
  };

  std::map<std::pair<NodeId, NodeId>, std::set<Time>> labels;
  Time tmax = 1;
  for (const InteractionRecord& r : rows) {
    NodeId a = dense.at(r.u), b = dense.at(r.v);
    Time t = step(r.timestamp);
    tmax = std::max(tmax, t);
    labels[{std::min(a, b), std::max(a, b)}].insert(t);
  }

  std::vector<EdgeRecord> records;
  for (const auto& [pair, set] : labels) {
    if (reduction == Reduction::FirstLabel) {
      records.push_back({pair.first, pair.second, {*set.begin()}});
    } else {
      for (Time t : set) records.push_back({pair.first, pair.second, {t}});
    }
  }
  Variant variant = reduction == Reduction::FirstLabel ? Variant::Simple : Variant::Multiedge;
  net.graph = TemporalGraph(nodes.size(), tmax, variant, std::move(records));
  return net;
}

}  // namespace

IngestResult ingest(std::istream& in, Bucketing bucketing, Reduction reduction) {
  if (bucketing.kind == Bucketing::Kind::FixedWidth && !(bucketing.width > 0.0)) {
    throw TgdError("bucket width must be positive");
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<InteractionRecord>> rows;
  auto declare = [&](const std::string& id) {
    if (rows.try_emplace(id).second) order.push_back(id);
  };

  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r,");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::vector<std::string> tokens = split(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (tokens.size() == 1) {
      declare(tokens[0]);
      seen_data = true;
      continue;
    }
    if (tokens.size() != 4) {
      throw TgdError(where + "expected `network_id u v timestamp`");
    }
    InteractionRecord r;
    r.network = tokens[0];
    bool ok = parse_number(tokens[1], r.u) && parse_number(tokens[2], r.v) &&
              parse_number(tokens[3], r.timestamp);
    if (!ok) {
      if (!seen_data) {
        seen_data = true;
        continue;
      }
      throw TgdError(where + "node ids must be integers and the timestamp a number");
    }
    seen_data = true;
    if (r.u == r.v) throw TgdError(where + "self-interaction of node " + std::to_string(r.u));
    if (!std::isfinite(r.timestamp) || r.timestamp < 0) {
      throw TgdError(where + "timestamp must be a non-negative number");
    }
    declare(r.network);
    rows[r.network].push_back(r);
  }

  IngestResult result;
  for (const std::string& id : order) {
    if (rows[id].empty()) {
      result.warnings.push_back("network '" + id + "' has no interactions; skipped");
      continue;
    }
    result.networks.push_back(build_network(id, rows[id], bucketing, reduction));
  }
  return result;
}

IngestResult ingest_file(const std::string& path, Bucketing bucketing, Reduction reduction) {
  std::ifstream in(path);
  if (!in) throw TgdError("cannot open '" + path + "'");
  return ingest(in, bucketing, reduction);
}

void write_ingested(const IngestResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const IngestedNetwork& net : result.networks) {
    std::string stem = net.network_id;
    for (char& c : stem) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
    }
    const std::filesystem::path base = std::filesystem::path(dir) / stem;
    save_graph(base.string() + ".tg", net.graph);
    std::ofstream ids(base.string() + ".ids");
    if (!ids) throw TgdError("cannot write id map for network '" + net.network_id + "'");
    for (std::size_t i = 0; i < net.original_ids.size(); ++i) {
      ids << i << ' ' << net.original_ids[i] << '\n';
    }
  }
}

}  // namespace tgd
