#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <tgd/adversaries.hpp>
#include <tgd/datasets.hpp>
#include <tgd/delta_ecc.hpp>
#include <tgd/discoverers.hpp>
#include <tgd/experiments.hpp>
#include <tgd/game.hpp>
#include <tgd/generators.hpp>
#include <tgd/temporal_graph.hpp>

namespace {

using namespace tgd;

struct PlayOptions {
  std::string graph;
  std::string discoverer = "discovery-follow-skip";
  std::string adversary = "honest";
  std::string feedback = "full";
  std::string knowledge;
  std::string variant;
  std::string goal = "discovery";
  std::size_t k = 1;
  Time delta = 1;
  std::size_t n = 0;
  Time tmax = 0;
  std::size_t m = 0;
  std::size_t budget = 0;
  std::string transcript;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw TgdError("cannot write '" + path + "'");
  return out;
}

int run_play(const PlayOptions& o) {
  GameConfig config;
  config.k = o.k;
  config.delta = o.delta;
  config.feedback = o.feedback == "times" ? Feedback::TimesOnly : Feedback::FullLog;
  config.goal = o.goal == "ipz" ? Goal::Ipz : Goal::FullDiscovery;
  if (o.budget) config.round_budget = o.budget;

  std::unique_ptr<Adversary> adversary;
  Knowledge default_knowledge = Knowledge::StaticKnown;
  if (o.adversary == "honest") {
    if (o.graph.empty()) throw TgdError("--graph is required for the honest adversary");
    TemporalGraph g = load_graph(o.graph);
    config.node_count = g.node_count();
    config.lifetime = g.lifetime();
    config.variant = g.variant();
    if (!o.variant.empty() && parse_variant(o.variant) != g.variant()) {
      throw TgdError("--variant does not match the graph file");
    }
    adversary = std::make_unique<HonestAdversary>(std::move(g));
  } else {
    if (o.n == 0 || o.tmax == 0) throw TgdError("--n and --tmax are required for lazy adversaries");
    config.node_count = o.n;
    config.lifetime = o.tmax;
    if (o.adversary == "thm52") {
      adversary = make_thm52_adversary(o.n, o.tmax, o.delta, o.k);
    } else if (o.adversary == "unknown-static") {
      adversary = make_unknown_static_adversary(o.n, o.m, o.tmax, o.delta, o.k);
      default_knowledge = Knowledge::NodesOnly;
    } else if (o.adversary == "multilabel") {
      adversary = make_multilabel_adversary(o.n, o.m, o.tmax, o.delta, o.k);
      config.variant = Variant::Multilabel;
    } else {
      throw TgdError("unknown adversary '" + o.adversary + "'");
    }
  }
  config.knowledge = o.knowledge.empty() ? default_knowledge
                     : o.knowledge == "nodes" ? Knowledge::NodesOnly
                                              : Knowledge::StaticKnown;

  auto discoverer = make_discoverer(o.discoverer);
  PlayResult result = play(config, *discoverer, *adversary);
  const GameOutcome& out = result.outcome;
  std::cout << "discoverer " << discoverer->name() << "\n"
            << "adversary " << o.adversary << "\n"
            << "winner " << (out.winner == Winner::Discoverer ? "discoverer" : "adversary") << "\n"
            << "rounds " << out.rounds_used << "\n";
  if (auto* lazy = dynamic_cast<LazyAdversary*>(adversary.get())) {
    std::cout << "round_bound " << lazy->round_bound() << "\n";
  }
  if (!out.detail.empty()) std::cout << "detail " << out.detail << "\n";
  if (!o.transcript.empty()) {
    open_out(o.transcript) << transcript_to_json(config, result.transcript, &out) << "\n";
  }
  return out.winner == Winner::Discoverer ? 0 : 2;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_path,
                  std::size_t threads) {
  SweepConfig config = config_path.empty() ? SweepConfig::defaults() : load_sweep_config(config_path);
  if (threads) config.threads = threads;
  SweepResult result = run_sweep(config);
  for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::ofstream out = open_out(out_path);
  write_csv(out, result.records);
  std::cerr << result.records.size() << " records written to " << out_path << "\n";
  return 0;
}

int run_analyze(const std::string& in_path, const std::string& report_path) {
  std::ifstream in(in_path);
  if (!in) throw TgdError("cannot open '" + in_path + "'");
  std::vector<RunRecord> records = read_csv(in);
  std::string report = analysis_report(records);
  if (report_path.empty()) {
    std::cout << report;
  } else {
    open_out(report_path) << report;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal graph discovery games"};
  app.require_subcommand(1);

  PlayOptions play_opts;
  auto* play_cmd = app.add_subcommand("play", "play one discovery game");
  play_cmd->add_option("--graph", play_opts.graph, "hidden graph for the honest adversary");
  play_cmd->add_option("--discoverer", play_opts.discoverer)
      ->check(CLI::IsMember({"brute-force", "guess", "follow", "discovery-follow",
                             "discovery-follow-skip"}));
  play_cmd->add_option("--adversary", play_opts.adversary)
      ->check(CLI::IsMember({"honest", "thm52", "unknown-static", "multilabel"}));
  play_cmd->add_option("--feedback", play_opts.feedback)->check(CLI::IsMember({"full", "times"}));
  play_cmd->add_option("--knowledge", play_opts.knowledge)
      ->check(CLI::IsMember({"static", "nodes"}));
  play_cmd->add_option("--variant", play_opts.variant)
      ->check(CLI::IsMember({"simple", "multilabel", "multiedge"}));
  play_cmd->add_option("--goal", play_opts.goal)->check(CLI::IsMember({"discovery", "ipz"}));
  play_cmd->add_option("--k", play_opts.k)->check(CLI::PositiveNumber);
  play_cmd->add_option("--delta", play_opts.delta)->check(CLI::PositiveNumber);
  play_cmd->add_option("--n", play_opts.n, "nodes (lazy adversaries)");
  play_cmd->add_option("--tmax", play_opts.tmax, "lifetime (lazy adversaries)");
  play_cmd->add_option("--m", play_opts.m, "edges (unknown-static, multilabel)");
  play_cmd->add_option("--budget", play_opts.budget, "round budget, default 10 n Tmax");
  play_cmd->add_option("--transcript", play_opts.transcript, "write the transcript as JSON");

  std::string sweep_config, sweep_out = "results.csv";
  std::size_t sweep_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep over ERT graphs");
  sweep_cmd->add_option("--config", sweep_config, "key = value file; defaults when omitted");
  sweep_cmd->add_option("--out", sweep_out);
  sweep_cmd->add_option("--threads", sweep_threads);

  std::string analyze_in, analyze_report;
  auto* analyze_cmd = app.add_subcommand("analyze", "summarize a sweep CSV");
  analyze_cmd->add_option("--in", analyze_in)->required();
  analyze_cmd->add_option("--report", analyze_report);

  std::string gen_kind, gen_out, gen_variant = "simple";
  std::size_t gen_n = 10, gen_x = 1, gen_mult = 1;
  double gen_p = 0.5;
  Time gen_tmax = 10;
  std::uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand("generate", "write a generated graph");
  gen_cmd->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"ert", "thm52", "omega"}));
  gen_cmd->add_option("--out", gen_out)->required();
  gen_cmd->add_option("--n", gen_n);
  gen_cmd->add_option("--p", gen_p);
  gen_cmd->add_option("--tmax", gen_tmax);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--variant", gen_variant)
      ->check(CLI::IsMember({"simple", "multilabel", "multiedge"}));
  gen_cmd->add_option("--max-multiplicity", gen_mult);
  gen_cmd->add_option("--x", gen_x, "omega family size");

  std::string ingest_in, ingest_out, ingest_bucketing = "raw", ingest_reduction = "first";
  bool ingest_sweep = false;
  Time ingest_delta = 1;
  auto* ingest_cmd = app.add_subcommand("ingest", "convert interaction records to graphs");
  ingest_cmd->add_option("--input", ingest_in)->required();
  ingest_cmd->add_option("--bucketing", ingest_bucketing, "raw or fixed:<width>");
  ingest_cmd->add_option("--reduction", ingest_reduction)->check(CLI::IsMember({"first", "multi"}));
  ingest_cmd->add_option("--out", ingest_out)->required();
  ingest_cmd->add_flag("--run", ingest_sweep, "also run discovery-follow and write <out>/runs.csv");
  ingest_cmd->add_option("--delta", ingest_delta, "delta for --run")->check(CLI::PositiveNumber);

  std::string ecc_graph;
  Time ecc_delta = 1;
  auto* ecc_cmd = app.add_subcommand("ecc", "print delta-edge connected component statistics");
  ecc_cmd->add_option("--graph", ecc_graph)->required();
  ecc_cmd->add_option("--delta", ecc_delta)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*play_cmd) return run_play(play_opts);
    if (*sweep_cmd) return run_sweep_cmd(sweep_config, sweep_out, sweep_threads);
    if (*analyze_cmd) return run_analyze(analyze_in, analyze_report);
    if (*gen_cmd) {
      TemporalGraph g;
      if (gen_kind == "ert") {
        ErtParams params;
        params.n = gen_n;
        params.p = gen_p;
        params.lifetime = gen_tmax;
        params.rng_seed = gen_seed;
        params.variant = parse_variant(gen_variant);
        params.max_multiplicity = gen_mult;
        g = generate_ert(params);
      } else if (gen_kind == "thm52") {
        Thm52Family family = build_thm52_family(gen_n, gen_tmax);
        std::mt19937_64 rng(gen_seed);
        std::uniform_int_distribution<Time> label(1, gen_tmax);
        std::vector<Time> free(family.free_edges.size());
        for (Time& t : free) t = label(rng);
        g = family.complete(free);
      } else {
        OmegaFamily family = build_omega_m_family(gen_x);
        std::cerr << "delta " << family.delta << "\n";
        g = std::move(family.graph);
      }
      save_graph(gen_out, g);
      std::cerr << g.node_count() << " nodes, " << g.edge_count() << " records, Tmax "
                << g.lifetime() << "\n";
      return 0;
    }
    if (*ingest_cmd) {
      IngestResult result = ingest_file(ingest_in, parse_bucketing(ingest_bucketing),
                                        parse_reduction(ingest_reduction));
      for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
      write_ingested(result, ingest_out);
      std::cerr << result.networks.size() << " networks written to " << ingest_out << "\n";
      if (ingest_sweep) {
        std::vector<RunRecord> records;
        for (const IngestedNetwork& net : result.networks) {
          Time delta = std::min(ingest_delta, net.graph.lifetime());
          RunRecord r = run_instance(net.graph, delta, true);
          r.source = net.network_id;
          records.push_back(std::move(r));
        }
        std::ofstream out = open_out(ingest_out + "/runs.csv");
        write_csv(out, records);
      }
      return 0;
    }
    if (*ecc_cmd) {
      TemporalGraph g = load_graph(ecc_graph);
      DeltaEccPartition part = delta_ecc(g, ecc_delta);
      std::cout << "components " << part.component_count << "\n"
                << "mean_size " << (part.component_count ? part.mean_size() : 0.0) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
