#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgd/temporal_graph.hpp"

namespace tgd {

struct InteractionRecord {
  std::string network;
  std::int64_t u = 0;
  std::int64_t v = 0;
  double timestamp = 0.0;
};

// Raw: rank of the distinct timestamp within its network, starting at 1.
// FixedWidth: floor((timestamp - earliest) / width) + 1.
struct Bucketing {
  enum class Kind { Raw, FixedWidth };
  Kind kind = Kind::Raw;
  double width = 1.0;

  static Bucketing raw() { return {}; }
  static Bucketing fixed(double width) { return {Kind::FixedWidth, width}; }
};

// FirstLabel keeps the earliest step per pair (Simple graph); Multiedge keeps
// every distinct step as a parallel record.
enum class Reduction { FirstLabel, Multiedge };

// "raw" or "fixed:<w>" with w > 0.
Bucketing parse_bucketing(const std::string& text);
// "first" or "multi".
Reduction parse_reduction(const std::string& text);

struct IngestedNetwork {
  std::string network_id;
  TemporalGraph graph;
  // Dense id -> original id; dense ids follow ascending original ids.
  std::vector<std::int64_t> original_ids;
};

struct IngestResult {
  std::vector<IngestedNetwork> networks;  // in order of first appearance
  std::vector<std::string> warnings;
};

// Lines `network_id u v timestamp`, separated by commas and/or whitespace.
// A non-numeric first data line is taken as a header; blank lines and '#'
// comments are skipped. A line holding only a network id declares a network
// that may end up empty; empty networks are dropped with a warning. Throws
// TgdError naming the line on malformed input or u == v.
IngestResult ingest(std::istream& in, Bucketing bucketing, Reduction reduction);
IngestResult ingest_file(const std::string& path, Bucketing bucketing, Reduction reduction);

// Writes <dir>/<network>.tg (graph text format) and <dir>/<network>.ids (one
// `dense original` pair per line). Creates dir if needed.
void write_ingested(const IngestResult& result, const std::string& dir);

}  // namespace tgd
