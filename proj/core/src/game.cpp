#include "tgd/game.hpp"

#include <nlohmann/json.hpp>

namespace tgd {

std::string_view to_string(Feedback feedback) {
  return feedback == Feedback::FullLog ? "full" : "times";
}

std::string_view to_string(Knowledge knowledge) {
  return knowledge == Knowledge::StaticKnown ? "static" : "nodes";
}

std::string_view to_string(Goal goal) {
  return goal == Goal::FullDiscovery ? "discovery" : "ipz";
}

std::size_t GameConfig::budget() const {
  if (round_budget) return *round_budget;
  return 10 * node_count * static_cast<std::size_t>(lifetime);
}

void GameConfig::validate() const {
  if (node_count < 1) throw TgdError("a game needs at least one node");
  if (lifetime < 1) throw TgdError("lifetime must be at least 1");
  if (delta < 1 || delta > lifetime) throw TgdError("delta must lie in [1, Tmax]");
  if (k < 1) throw TgdError("k must be at least 1");
}

const RoundFeedback& GameHandle::play_round(const SeedSet& seeds) {
  if (seeds.size() > config_.k) {
    throw TgdError("round with " + std::to_string(seeds.size()) + " seeds exceeds k = " +
                   std::to_string(config_.k));
  }
  for (const Seed& s : seeds) {
    if (s.node >= config_.node_count || s.time < 0 || s.time > config_.lifetime) {
      throw TgdError("seed (" + std::to_string(s.node) + ", " + std::to_string(s.time) +
                     ") is out of range");
    }
  }
  if (transcript_.rounds.size() >= config_.budget()) {
    throw RoundBudgetExceeded("round budget of " + std::to_string(config_.budget()) +
                              " exhausted");
  }

  InfectionLog log = adversary_.respond(seeds);
  RoundFeedback feedback;
  try {
    feedback.timetable = timetable_of(log);
  } catch (const TgdError& e) {
    throw AdversaryFault(std::string("malformed adversary reply: ") + e.what());
  }
  if (config_.feedback == Feedback::FullLog) feedback.log = std::move(log);
  transcript_.rounds.push_back({seeds, std::move(feedback)});
  return transcript_.rounds.back().feedback;
}

PlayResult play(const GameConfig& config, Discoverer& discoverer, Adversary& adversary) {
  config.validate();
  PlayResult result;
  result.transcript.disclosure = adversary.disclose(config);
  if (result.transcript.disclosure.node_count != config.node_count) {
    throw TgdError("disclosed node count does not match the config");
  }
  if ((config.knowledge == Knowledge::StaticKnown) !=
      result.transcript.disclosure.pairs.has_value()) {
    throw TgdError("disclosure does not match the knowledge mode");
  }

  GameHandle handle(config, result.transcript, adversary);
  Answer answer;
  bool budget_exceeded = false;
  try {
    answer = discoverer.run(handle);
  } catch (const RoundBudgetExceeded&) {
    budget_exceeded = true;
  } catch (const AdversaryFault& e) {
    result.outcome.winner = Winner::Discoverer;
    result.outcome.harness_error = true;
    result.outcome.rounds_used = result.transcript.rounds.size();
    result.outcome.detail = e.what();
    return result;
  }

  TemporalGraph adversary_graph = adversary.final_graph(answer);
  result.outcome = adjudicate(config, result.transcript, answer, adversary_graph);
  if (budget_exceeded && !result.outcome.harness_error) {
    result.outcome.winner = Winner::Adversary;
    result.outcome.budget_exceeded = true;
    result.outcome.detail = "round budget exhausted";
  }
  return result;
}

namespace {

std::string check_consistency(const GameConfig& config, const Transcript& transcript,
                              const TemporalGraph& graph) {
  if (graph.node_count() != config.node_count || graph.lifetime() != config.lifetime ||
      graph.variant() != config.variant) {
    return "adversary graph does not match the game parameters";
  }
  if (transcript.disclosure.pairs && graph.static_pairs() != *transcript.disclosure.pairs) {
    return "adversary graph contradicts the disclosed static graph";
  }
  for (std::size_t i = 0; i < transcript.rounds.size(); ++i) {
    const Round& round = transcript.rounds[i];
    bool ok = round.feedback.log
                  ? verify_log_consistency(graph, round.seeds, *round.feedback.log, config.delta)
                  : simulate(graph, round.seeds, config.delta).timetable ==
                        round.feedback.timetable;
    if (!ok) return "adversary graph contradicts round " + std::to_string(i + 1);
  }
  return {};
}

}  // namespace

GameOutcome adjudicate(const GameConfig& config, const Transcript& transcript,
                       const Answer& answer, const TemporalGraph& adversary_graph) {
  GameOutcome outcome;
  outcome.rounds_used = transcript.rounds.size();
  outcome.answer = answer;
  outcome.adversary_graph = adversary_graph;

  std::string problem = check_consistency(config, transcript, adversary_graph);
  if (!problem.empty()) {
    outcome.winner = Winner::Discoverer;
    outcome.harness_error = true;
    outcome.detail = problem;
    return outcome;
  }

  bool won = false;
  if (config.goal == Goal::FullDiscovery) {
    if (const auto* graph = std::get_if<TemporalGraph>(&answer)) won = *graph == adversary_graph;
  } else if (const auto* ipz = std::get_if<IpzAnswer>(&answer)) {
    won = *ipz ? is_ipz(adversary_graph, **ipz, config.delta)
               : !find_ipz(adversary_graph, config.delta).has_value();
  }
  outcome.winner = won ? Winner::Discoverer : Winner::Adversary;
  return outcome;
}

bool is_ipz(const TemporalGraph& graph, Seed seed, Time delta) {
  return simulate(graph, {seed}, delta).timetable.size() == graph.node_count();
}

IpzAnswer find_ipz(const TemporalGraph& graph, Time delta) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    for (Time t = 0; t <= graph.lifetime(); ++t) {
      if (is_ipz(graph, {v, t}, delta)) return Seed{v, t};
    }
  }
  return std::nullopt;
}

namespace {

using nlohmann::json;

json log_to_json(const InfectionLog& log) {
  json out = json::array();
  for (const InfectionEvent& e : log) out.push_back({e.infector, e.infected, e.time});
  return out;
}

}  // namespace

std::string transcript_to_json(const GameConfig& config, const Transcript& transcript,
                               const GameOutcome* outcome) {
  json doc;
  doc["config"] = {{"n", config.node_count},
                   {"tmax", config.lifetime},
                   {"delta", config.delta},
                   {"k", config.k},
                   {"feedback", to_string(config.feedback)},
                   {"knowledge", to_string(config.knowledge)},
                   {"variant", to_string(config.variant)},
                   {"goal", to_string(config.goal)}};

  json disclosure = {{"node_count", transcript.disclosure.node_count}};
  if (transcript.disclosure.pairs) {
    json pairs = json::array();
    for (const StaticPair& p : *transcript.disclosure.pairs) {
      pairs.push_back({p.u, p.v, p.multiplicity});
    }
    disclosure["pairs"] = std::move(pairs);
  } else {
    disclosure["pairs"] = nullptr;
  }
  doc["disclosure"] = std::move(disclosure);

  json rounds = json::array();
  for (const Round& round : transcript.rounds) {
    json seeds = json::array();
    for (const Seed& s : round.seeds) seeds.push_back({s.node, s.time});
    json timetable = json::array();
    for (const auto& [node, time] : round.feedback.timetable) timetable.push_back({node, time});
    rounds.push_back({{"seeds", std::move(seeds)},
                      {"log", round.feedback.log ? log_to_json(*round.feedback.log) : json()},
                      {"timetable", std::move(timetable)}});
  }
  doc["rounds"] = std::move(rounds);

  if (outcome) {
    doc["outcome"] = {
        {"winner", outcome->winner == Winner::Discoverer ? "discoverer" : "adversary"},
        {"rounds_used", outcome->rounds_used},
        {"harness_error", outcome->harness_error},
        {"budget_exceeded", outcome->budget_exceeded},
        {"detail", outcome->detail}};
  }
  return doc.dump(2);
}

Transcript transcript_from_json(const std::string& text) {
  Transcript transcript;
  try {
    json doc = json::parse(text);
    const json& disclosure = doc.at("disclosure");
    transcript.disclosure.node_count = disclosure.at("node_count").get<std::size_t>();
    if (!disclosure.at("pairs").is_null()) {
      std::vector<StaticPair> pairs;
      for (const json& p : disclosure.at("pairs")) {
        pairs.push_back({p.at(0).get<NodeId>(), p.at(1).get<NodeId>(), p.at(2).get<std::size_t>()});
      }
      transcript.disclosure.pairs = std::move(pairs);
    }
    for (const json& r : doc.at("rounds")) {
      Round round;
      for (const json& s : r.at("seeds")) {
        round.seeds.insert({s.at(0).get<NodeId>(), s.at(1).get<Time>()});
      }
      if (!r.at("log").is_null()) {
        InfectionLog log;
        for (const json& e : r.at("log")) {
          log.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>(), e.at(2).get<Time>(),
                         std::nullopt});
        }
        round.feedback.log = std::move(log);
      }
      for (const json& e : r.at("timetable")) {
        round.feedback.timetable[e.at(0).get<NodeId>()] = e.at(1).get<Time>();
      }
      transcript.rounds.push_back(std::move(round));
    }
  } catch (const json::exception& e) {
    throw TgdError(std::string("malformed transcript: ") + e.what());
  }
  return transcript;
}

}  // namespace tgd
