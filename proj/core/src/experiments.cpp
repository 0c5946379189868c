#include "tgd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "tgd/adversaries.hpp"
#include "tgd/delta_ecc.hpp"
#include "tgd/discoverers.hpp"
#include "tgd/game.hpp"
#include "tgd/generators.hpp"

namespace tgd {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw TgdError(what + ": '" + s + "' is not a number");
}

std::uint64_t to_uint(const std::string& s, const std::string& what) {
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  throw TgdError(what + ": '" + s + "' is not a non-negative integer");
}

bool to_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw TgdError(what + ": '" + s + "' is not a boolean");
}

std::string fmt(double v, const char* spec = "%.12g") {
  if (std::isnan(v)) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::vector<std::size_t> parse_nodes(const std::string& value) {
  std::vector<std::size_t> out;
  for (const std::string& item : split_list(value, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_uint(item, "nodes"));
      continue;
    }
    std::size_t step = 1;
    std::string hi = item.substr(dots + 2);
    if (auto colon = hi.find(':'); colon != std::string::npos) {
      step = to_uint(hi.substr(colon + 1), "nodes step");
      hi = hi.substr(0, colon);
    }
    std::size_t a = to_uint(item.substr(0, dots), "nodes");
    std::size_t b = to_uint(hi, "nodes");
    if (step == 0 || a > b) throw TgdError("nodes: bad range '" + item + "'");
    for (std::size_t v = a; v <= b; v += step) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& value, const std::string& key) {
  std::vector<double> out;
  for (const std::string& item : split_list(value, ',')) out.push_back(to_double(item, key));
  return out;
}

struct GridPoint {
  std::size_t n;
  double p;
  double ratio;
  DeltaRule rule;
};

}  // namespace

DeltaRule DeltaRule::parse(const std::string& text) {
  if (text == "one") return one();
  double f = to_double(text, "delta rule");
  if (!(f > 0.0 && f <= 1.0)) throw TgdError("delta rule fraction must lie in (0, 1]");
  return of_lifetime(f);
}

std::string DeltaRule::label() const { return fraction ? fmt(*fraction) : "one"; }

std::optional<Time> DeltaRule::resolve(Time lifetime) const {
  if (!fraction) return 1;
  long d = std::lround(*fraction * static_cast<double>(lifetime));
  if (d < 1) return std::nullopt;
  return static_cast<Time>(d);
}

SweepConfig SweepConfig::defaults() {
  SweepConfig c;
  for (std::size_t n = 5; n <= 100; n += 5) c.nodes.push_back(n);
  c.p = {0.01, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.5, 0.7, 0.9};
  c.tmax_ratio = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.9, 1, 2, 3, 5, 7, 10};
  c.delta_rules = {DeltaRule::one(), DeltaRule::of_lifetime(0.01), DeltaRule::of_lifetime(0.05),
                   DeltaRule::of_lifetime(0.1), DeltaRule::of_lifetime(0.3),
                   DeltaRule::of_lifetime(0.5)};
  return c;
}

void SweepConfig::validate() const {
  if (nodes.empty() || p.empty() || tmax_ratio.empty() || delta_rules.empty()) {
    throw TgdError("sweep grids must be non-empty");
  }
  if (repetitions == 0) throw TgdError("repetitions must be at least 1");
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) throw TgdError("p values must lie in [0, 1]");
  }
  for (double r : tmax_ratio) {
    if (!(r > 0.0)) throw TgdError("Tmax/n ratios must be positive");
  }
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig c = SweepConfig::defaults();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string::npos) throw TgdError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "nodes") {
        c.nodes = parse_nodes(value);
      } else if (key == "p") {
        c.p = parse_doubles(value, key);
      } else if (key == "tmax_ratio") {
        c.tmax_ratio = parse_doubles(value, key);
      } else if (key == "delta_rules") {
        c.delta_rules.clear();
        for (const std::string& item : split_list(value, ',')) {
          c.delta_rules.push_back(DeltaRule::parse(item));
        }
      } else if (key == "repetitions") {
        c.repetitions = to_uint(value, key);
      } else if (key == "seed") {
        c.seed = to_uint(value, key);
      } else if (key == "skip_redundant") {
        c.skip_redundant = to_bool(value, key);
      } else if (key == "record_wall_time") {
        c.record_wall_time = to_bool(value, key);
      } else if (key == "threads") {
        c.threads = to_uint(value, key);
      } else {
        throw TgdError("unknown key '" + key + "'");
      }
    } catch (const TgdError& e) {
      throw TgdError(where + ": " + e.what());
    }
  }
  c.validate();
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TgdError("cannot open '" + path + "'");
  return parse_sweep_config(in);
}

double RunRecord::discovery_fraction() const {
  if (rounds_total == 0) return 0.0;
  return static_cast<double>(rounds_discovery) / static_cast<double>(rounds_total);
}

RunRecord run_instance(const TemporalGraph& graph, Time delta, bool skip_redundant,
                       bool record_wall_time) {
  RunRecord r;
  r.n = graph.node_count();
  r.tmax = graph.lifetime();
  r.delta = delta;
  r.m = graph.edge_count();
  r.p = std::numeric_limits<double>::quiet_NaN();
  r.tmax_ratio = std::numeric_limits<double>::quiet_NaN();

  const DeltaEccPartition decc = delta_ecc(graph, delta);
  r.decc_count = decc.component_count;
  r.decc_mean_size = decc.component_count ? decc.mean_size() : 0.0;

  GameConfig config;
  config.node_count = graph.node_count();
  config.lifetime = graph.lifetime();
  config.delta = delta;
  config.variant = graph.variant();
  const std::size_t sweep_len = static_cast<std::size_t>((graph.lifetime() + delta - 1) / delta) + 2;
  config.round_budget = std::max(config.budget(), 6 * r.m + (r.decc_count + 1) * sweep_len +
                                                      graph.node_count() * (graph.lifetime() + 1));

  HonestAdversary adversary(graph);
  DiscoveryFollow discoverer(skip_redundant);
  auto start = std::chrono::steady_clock::now();
  PlayResult result = play(config, discoverer, adversary);
  auto stop = std::chrono::steady_clock::now();

  const PhaseCounters& c = discoverer.counters();
  r.rounds_total = c.total();
  r.rounds_discovery = c.discovery;
  r.rounds_exploration = c.exploration;
  r.rounds_skipped = c.skipped;
  r.won = result.outcome.winner == Winner::Discoverer && !result.outcome.harness_error;
  if (record_wall_time) r.wall_time = std::chrono::duration<double>(stop - start).count();
  return r;
}

std::uint64_t derive_seed(std::uint64_t base, std::size_t grid_index, std::size_t rep) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(grid_index),
                    static_cast<std::uint32_t>(std::uint64_t(grid_index) >> 32),
                    static_cast<std::uint32_t>(rep)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t(out[0]) << 32) | out[1];
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<GridPoint> grid;
  for (std::size_t n : config.nodes) {
    for (double p : config.p) {
      for (double ratio : config.tmax_ratio) {
        for (const DeltaRule& rule : config.delta_rules) grid.push_back({n, p, ratio, rule});
      }
    }
  }

  struct Job {
    std::size_t grid_index;
    std::size_t rep;
    Time tmax;
    Time delta;
  };
  SweepResult result;
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const GridPoint& pt = grid[g];
    const std::string where = "n=" + std::to_string(pt.n) + " p=" + fmt(pt.p) +
                              " ratio=" + fmt(pt.ratio) + " delta=" + pt.rule.label();
    if (pt.n < 2) {
      result.warnings.push_back(where + ": fewer than 2 nodes; skipped");
      continue;
    }
    long tmax = std::lround(pt.ratio * static_cast<double>(pt.n));
    if (tmax < 1) {
      result.warnings.push_back(where + ": Tmax rounds below 1; skipped");
      continue;
    }
    auto delta = pt.rule.resolve(static_cast<Time>(tmax));
    if (!delta) {
      result.warnings.push_back(where + ": delta rounds below 1; skipped");
      continue;
    }
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      jobs.push_back({g, rep, static_cast<Time>(tmax), *delta});
    }
  }

  result.records.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        const Job& job = jobs[i];
        const GridPoint& pt = grid[job.grid_index];
        ErtParams params;
        params.n = pt.n;
        params.p = pt.p;
        params.lifetime = job.tmax;
        params.rng_seed = derive_seed(config.seed, job.grid_index, job.rep);
        RunRecord r = run_instance(generate_ert(params), job.delta, config.skip_redundant,
                                   config.record_wall_time);
        r.p = pt.p;
        r.tmax_ratio = pt.ratio;
        r.delta_rule = pt.rule.label();
        r.rep = job.rep;
        r.seed = params.rng_seed;
        result.records[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
        return;
      }
    }
  };

  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "source", "n", "p", "tmax_ratio", "delta_rule", "rep",
      "seed", "tmax", "delta", "m", "rounds_total", "rounds_discovery",
      "rounds_exploration", "rounds_skipped", "decc_count", "decc_mean_size", "won", "wall_time"};
  return columns;
}

void write_csv(std::ostream& out, std::span<const RunRecord> records) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const RunRecord& r : records) {
    out << r.source << ',' << r.n << ',' << fmt(r.p) << ',' << fmt(r.tmax_ratio) << ','
        << r.delta_rule << ',' << r.rep << ',' << r.seed << ',' << r.tmax << ',' << r.delta << ','
        << r.m << ',' << r.rounds_total << ',' << r.rounds_discovery << ','
        << r.rounds_exploration << ',' << r.rounds_skipped << ',' << r.decc_count << ','
        << fmt(r.decc_mean_size) << ',' << (r.won ? "true" : "false") << ','
        << fmt(r.wall_time, "%.6f") << '\n';
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw TgdError("empty CSV");
  std::vector<std::string> header = split_list(trim(line), ',');
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < header.size(); ++i) at[header[i]] = i;
  std::string missing;
  for (const std::string& c : csv_columns()) {
    if (!at.count(c)) missing += (missing.empty() ? "" : ", ") + c;
  }
  if (!missing.empty()) throw TgdError("CSV is missing columns: " + missing);

  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> f = split_list(line, ',');
    if (f.size() != header.size()) {
      throw TgdError("CSV line " + std::to_string(line_no) + ": expected " +
                     std::to_string(header.size()) + " fields");
    }
    auto get = [&](const char* name) -> const std::string& { return f[at.at(name)]; };
    auto num = [&](const char* name) {
      const std::string& s = get(name);
      return s.empty() ? std::numeric_limits<double>::quiet_NaN() : to_double(s, name);
    };
    RunRecord r;
    r.source = get("source");
    r.n = to_uint(get("n"), "n");
    r.p = num("p");
    r.tmax_ratio = num("tmax_ratio");
    r.delta_rule = get("delta_rule");
    r.rep = to_uint(get("rep"), "rep");
    r.seed = to_uint(get("seed"), "seed");
    r.tmax = static_cast<Time>(to_uint(get("tmax"), "tmax"));
    r.delta = static_cast<Time>(to_uint(get("delta"), "delta"));
    r.m = to_uint(get("m"), "m");
    r.rounds_total = to_uint(get("rounds_total"), "rounds_total");
    r.rounds_discovery = to_uint(get("rounds_discovery"), "rounds_discovery");
    r.rounds_exploration = to_uint(get("rounds_exploration"), "rounds_exploration");
    r.rounds_skipped = to_uint(get("rounds_skipped"), "rounds_skipped");
    r.decc_count = to_uint(get("decc_count"), "decc_count");
    r.decc_mean_size = num("decc_mean_size");
    r.won = to_bool(get("won"), "won");
    r.wall_time = num("wall_time");
    records.push_back(std::move(r));
  }
  return records;
}

LinearFit fit_rounds_vs_edges(std::span<const RunRecord> records) {
  if (records.size() < 3) throw TgdError("a fit needs at least 3 records");
  const double count = static_cast<double>(records.size());
  double mx = 0, my = 0;
  for (const RunRecord& r : records) {
    mx += static_cast<double>(r.m);
    my += static_cast<double>(r.rounds_total);
  }
  mx /= count;
  my /= count;
  double sxx = 0, sxy = 0, syy = 0;
  for (const RunRecord& r : records) {
    double dx = static_cast<double>(r.m) - mx, dy = static_cast<double>(r.rounds_total) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw TgdError("a fit needs at least two distinct edge counts");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.count = records.size();
  return fit;
}

std::vector<StratumFit> fit_by_stratum(std::span<const RunRecord> records) {
  std::map<std::pair<double, double>, std::vector<RunRecord>> strata;
  for (const RunRecord& r : records) {
    if (std::isnan(r.p) || std::isnan(r.tmax_ratio)) continue;
    strata[{r.p, r.tmax_ratio}].push_back(r);
  }
  std::vector<StratumFit> out;
  for (const auto& [key, rs] : strata) {
    try {
      out.push_back({key.first, key.second, fit_rounds_vs_edges(rs)});
    } catch (const TgdError&) {
    }
  }
  return out;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> rank(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    double avg = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
    i = j + 1;
  }
  return rank;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw TgdError("spearman needs equally long samples");
  if (x.size() < 2) throw TgdError("spearman needs at least 2 points");
  std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw TgdError("spearman is undefined for a constant sample");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::pair<double, double>> discovery_fraction_by_p(std::span<const RunRecord> records) {
  std::map<double, std::pair<double, std::size_t>> acc;
  for (const RunRecord& r : records) {
    if (std::isnan(r.p) || r.rounds_total == 0) continue;
    auto& [sum, count] = acc[r.p];
    sum += r.discovery_fraction();
    ++count;
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& [p, sc] : acc) out.emplace_back(p, sc.first / static_cast<double>(sc.second));
  return out;
}

namespace {

bool threshold_eligible(const RunRecord& r) {
  return r.p > 0.0 && r.rounds_total > 0 && r.tmax > 0;
}

double threshold_x(const RunRecord& r) {
  return static_cast<double>(r.n) * r.p / static_cast<double>(r.tmax);
}

void add_to(ThresholdBucket& b, const RunRecord& r) {
  b.mean_discovery_fraction += r.discovery_fraction();
  b.mean_decc_size += r.decc_mean_size;
  b.mean_decc_per_edge +=
      r.m ? static_cast<double>(r.decc_count) / static_cast<double>(r.m) : 0.0;
  ++b.count;
}

void finish(ThresholdBucket& b) {
  if (b.count == 0) return;
  const double c = static_cast<double>(b.count);
  b.mean_discovery_fraction /= c;
  b.mean_decc_size /= c;
  b.mean_decc_per_edge /= c;
}

}  // namespace

std::vector<ThresholdBucket> threshold_report(std::span<const RunRecord> records) {
  std::map<long, ThresholdBucket> buckets;
  for (const RunRecord& r : records) {
    if (!threshold_eligible(r)) continue;
    long idx = static_cast<long>(std::floor(2.0 * std::log10(threshold_x(r))));
    ThresholdBucket& b = buckets[idx];
    b.lower = std::pow(10.0, static_cast<double>(idx) / 2.0);
    b.upper = std::pow(10.0, static_cast<double>(idx + 1) / 2.0);
    add_to(b, r);
  }
  std::vector<ThresholdBucket> out;
  for (auto& [idx, b] : buckets) {
    finish(b);
    out.push_back(b);
  }
  return out;
}

ThresholdBucket threshold_range(std::span<const RunRecord> records, double lower, double upper) {
  ThresholdBucket b;
  b.lower = lower;
  b.upper = upper;
  for (const RunRecord& r : records) {
    if (!threshold_eligible(r)) continue;
    double x = threshold_x(r);
    if (x >= lower && x <= upper) add_to(b, r);
  }
  finish(b);
  return b;
}

std::string analysis_report(std::span<const RunRecord> records) {
  std::ostringstream out;
  std::size_t won = 0, explore_ok = 0, discovery_ok = 0;
  for (const RunRecord& r : records) {
    won += r.won;
    explore_ok += r.rounds_exploration <= 6 * r.m;
    std::size_t sweep = static_cast<std::size_t>((r.tmax + r.delta - 1) / std::max<Time>(r.delta, 1)) + 1;
    discovery_ok += r.rounds_discovery <= r.decc_count * sweep;
  }
  out << "records: " << records.size() << "\n";
  out << "won: " << won << "\n";
  out << "rounds_exploration <= 6m: " << explore_ok << "/" << records.size() << "\n";
  out << "rounds_discovery <= decc_count*(ceil(Tmax/delta)+1): " << discovery_ok << "/"
      << records.size() << "\n\n";

  std::vector<RunRecord> dense;
  for (const RunRecord& r : records) {
    if (r.p >= 0.3) dense.push_back(r);
  }
  out << "rounds vs m, pooled over p >= 0.3: ";
  try {
    LinearFit f = fit_rounds_vs_edges(dense);
    out << "slope " << fmt(f.slope, "%.4f") << " intercept " << fmt(f.intercept, "%.2f")
        << " r2 " << fmt(f.r2, "%.4f") << " (" << f.count << " records)\n";
  } catch (const TgdError& e) {
    out << "n/a (" << e.what() << ")\n";
  }
  try {
    LinearFit f = fit_rounds_vs_edges(records);
    out << "rounds vs m, all records: slope " << fmt(f.slope, "%.4f") << " intercept "
        << fmt(f.intercept, "%.2f") << " r2 " << fmt(f.r2, "%.4f") << "\n";
  } catch (const TgdError& e) {
    out << "rounds vs m, all records: n/a (" << e.what() << ")\n";
  }
  out << "\nper stratum (p, Tmax/n): slope r2 count\n";
  for (const StratumFit& s : fit_by_stratum(records)) {
    out << "  " << fmt(s.p) << ", " << fmt(s.tmax_ratio) << ": " << fmt(s.fit.slope, "%.4f")
        << " " << fmt(s.fit.r2, "%.4f") << " " << s.fit.count << "\n";
  }

  auto by_p = discovery_fraction_by_p(records);
  out << "\nmean discovery fraction by p\n";
  std::vector<double> ps, fs;
  for (const auto& [p, f] : by_p) {
    out << "  " << fmt(p) << ": " << fmt(f, "%.4f") << "\n";
    ps.push_back(p);
    fs.push_back(f);
  }
  try {
    out << "spearman(p, discovery fraction): " << fmt(spearman(ps, fs), "%.4f") << "\n";
  } catch (const TgdError& e) {
    out << "spearman(p, discovery fraction): n/a (" << e.what() << ")\n";
  }

  out << "\nnp/Tmax bucket: count, discovery fraction, mean decc size, decc/m\n";
  auto row = [&](const std::string& label, const ThresholdBucket& b) {
    out << "  " << label << ": " << b.count << ", " << fmt(b.mean_discovery_fraction, "%.4f")
        << ", " << fmt(b.mean_decc_size, "%.4f") << ", " << fmt(b.mean_decc_per_edge, "%.4f")
        << "\n";
  };
  for (const ThresholdBucket& b : threshold_report(records)) {
    row("[" + fmt(b.lower, "%.4g") + ", " + fmt(b.upper, "%.4g") + ")", b);
  }
  row("<= 0.01", threshold_range(records, 0.0, 0.01));
  row(">= 1", threshold_range(records, 1.0, std::numeric_limits<double>::infinity()));
  return out.str();
}

}  // namespace tgd
