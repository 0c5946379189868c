#include <gtest/gtest.h>

#include <functional>

#include <tgd/adversaries.hpp>
#include <tgd/delta_ecc.hpp>
#include <tgd/discoverers.hpp>
#include <tgd/knowledge.hpp>

#include "support.hpp"

using namespace tgd;

namespace {

class Scripted : public Discoverer {
 public:
  explicit Scripted(std::function<Answer(GameHandle&)> body) : body_(std::move(body)) {}
  std::string name() const override { return "scripted"; }
  Answer run(GameHandle& game) override { return body_(game); }

 private:
  std::function<Answer(GameHandle&)> body_;
};

GameConfig config_for(const TemporalGraph& g, Time delta, Feedback fb = Feedback::FullLog) {
  GameConfig c;
  c.node_count = g.node_count();
  c.lifetime = g.lifetime();
  c.delta = delta;
  c.variant = g.variant();
  c.feedback = fb;
  return c;
}

std::size_t sweep_rounds(Time tmax, Time delta) {
  return static_cast<std::size_t>((tmax + delta - 1) / delta) + 1;
}

}  // namespace

TEST(BruteForce, RoundList) {
  auto rounds = brute_force_rounds(3, 2);
  ASSERT_EQ(rounds.size(), 6u);
  EXPECT_EQ(*rounds.front().begin(), (Seed{0, 0}));
  EXPECT_EQ(*rounds.back().begin(), (Seed{2, 1}));
  EXPECT_EQ(brute_force_rounds(1, 5).size(), 5u);
}

TEST(BruteForce, SingleEdgeAtLifetime) {
  TemporalGraph g(2, 4, Variant::Simple, {{0, 1, {4}}});
  HonestAdversary adversary(g);
  BruteForce bf;
  PlayResult r = play(config_for(g, 1), bf, adversary);
  EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
  EXPECT_EQ(r.transcript.rounds[3].feedback.timetable, (InfectionTimetable{{0, 3}, {1, 4}}));
}

TEST(BruteForce, WinsEverySettingInExactlyNTmaxRounds) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Variant variant = static_cast<Variant>(trial % 3);
    TemporalGraph g = fixtures::random_graph(rng, 1 + rng() % 7, 1 + rng() % 5, 0.5, variant);
    GameConfig c = config_for(g, 1 + static_cast<Time>(rng() % g.lifetime()));
    c.knowledge = trial % 2 ? Knowledge::NodesOnly : Knowledge::StaticKnown;
    c.feedback = trial % 4 < 2 ? Feedback::FullLog : Feedback::TimesOnly;
    HonestAdversary adversary(g);
    BruteForce bf;
    PlayResult r = play(c, bf, adversary);
    EXPECT_EQ(r.outcome.winner, Winner::Discoverer) << "trial " << trial;
    EXPECT_EQ(r.outcome.rounds_used, g.node_count() * static_cast<std::size_t>(g.lifetime()));
  }
}

TEST(Guess, LabelsEverythingOne) {
  TemporalGraph ones(3, 3, Variant::Simple, {{0, 1, {1}}, {1, 2, {1}}});
  HonestAdversary a(ones);
  Guess guess;
  PlayResult r = play(config_for(ones, 1), guess, a);
  EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
  EXPECT_EQ(r.outcome.rounds_used, 0u);
}

TEST(Explore, ChainSeedsWithClampedEarlySeed) {
  // a-b at 2, b-c at 3, delta 2; b observed infected at 2.
  TemporalGraph g(3, 3, Variant::Simple, {{0, 1, {2}}, {1, 2, {3}}});
  for (EarlySeeds early : {EarlySeeds::Skip, EarlySeeds::Clamp}) {
    HonestAdversary adversary(g);
    std::size_t rounds = 0;
    bool bc_fired = false;
    Scripted d([&](GameHandle& game) -> Answer {
      DiscoveryEngine engine(game, false, early);
      engine.explore(1, 2);
      rounds = game.rounds_used();
      for (const Round& round : game.transcript().rounds) {
        auto it = round.feedback.timetable.find(2);
        if (it != round.feedback.timetable.end() && it->second == 3) bc_fired = true;
      }
      return std::monostate{};
    });
    play(config_for(g, 2), d, adversary);
    EXPECT_EQ(rounds, early == EarlySeeds::Skip ? 2u : 3u);
    EXPECT_TRUE(bc_fired);
  }
}

TEST(Explore, NothingNewWhenAllPerformed) {
  TemporalGraph g(2, 3, Variant::Simple, {{0, 1, {2}}});
  HonestAdversary adversary(g);
  std::size_t second = 99;
  Scripted d([&](GameHandle& game) -> Answer {
    DiscoveryEngine engine(game, false);
    engine.explore(1, 2);
    std::size_t first = game.rounds_used();
    engine.explore(1, 2);
    second = game.rounds_used() - first;
    return std::monostate{};
  });
  play(config_for(g, 1), d, adversary);
  EXPECT_EQ(second, 0u);
}

TEST(DiscoveryFollow, SingleEdgeOneSweepRound) {
  TemporalGraph g(2, 5, Variant::Simple, {{0, 1, {3}}});
  HonestAdversary adversary(g);
  DiscoveryFollow df;
  PlayResult r = play(config_for(g, 5), df, adversary);
  EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
  EXPECT_EQ(r.transcript.rounds[0].seeds, (SeedSet{{0, 0}}));
  EXPECT_EQ(r.transcript.rounds[0].feedback.timetable.at(1), 3);
  EXPECT_LE(r.outcome.rounds_used, 6u + 2u);
}

TEST(DiscoveryFollow, TwoDisjointComponentsTwoSweeps) {
  TemporalGraph g(6, 6, Variant::Simple,
                  {{0, 1, {2}}, {1, 2, {3}}, {3, 4, {5}}, {4, 5, {6}}});
  ASSERT_EQ(delta_ecc(g, 1).component_count, 2u);
  for (bool skip : {false, true}) {
    HonestAdversary adversary(g);
    DiscoveryFollow df(skip);
    PlayResult r = play(config_for(g, 1), df, adversary);
    EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
    EXPECT_EQ(df.counters().sweeps, 2u);
  }
}

TEST(DiscoveryFollow, SweepsNeverExceedComponentsWithoutSkipping) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    TemporalGraph g = fixtures::random_graph(rng, 2 + rng() % 12, 1 + rng() % 8, 0.4);
    Time delta = 1 + static_cast<Time>(rng() % g.lifetime());
    HonestAdversary adversary(g);
    DiscoveryFollow df(false);
    PlayResult r = play(config_for(g, delta), df, adversary);
    ASSERT_EQ(r.outcome.winner, Winner::Discoverer);
    std::size_t c = delta_ecc(g, delta).component_count;
    EXPECT_LE(df.counters().sweeps, c) << "trial " << trial;
    EXPECT_LE(df.counters().discovery, c * sweep_rounds(g.lifetime(), delta));
  }
}

TEST(DiscoveryFollow, ExactAndWithinBoundAcrossModes) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 240; ++trial) {
    Variant variant = trial % 2 ? Variant::Multiedge : Variant::Simple;
    Feedback fb = trial % 4 < 2 ? Feedback::FullLog : Feedback::TimesOnly;
    std::size_t n = 2 + rng() % 14;
    Time tmax = 1 + static_cast<Time>(rng() % 10);
    TemporalGraph g = fixtures::random_graph(rng, n, tmax, 0.35, variant);
    Time choices[] = {1, std::min<Time>(2, tmax), tmax};
    Time delta = choices[trial % 3];
    HonestAdversary adversary(g);
    DiscoveryFollow df(trial % 8 < 4);
    PlayResult r = play(config_for(g, delta, fb), df, adversary);
    ASSERT_EQ(r.outcome.winner, Winner::Discoverer) << "trial " << trial << " " << r.outcome.detail;
    std::size_t c = delta_ecc(g, delta).component_count;
    EXPECT_LE(r.outcome.rounds_used, 6 * g.edge_count() + c * sweep_rounds(tmax, delta));
    EXPECT_LE(df.counters().exploration, 6 * g.edge_count());
    EXPECT_EQ(df.counters().total(), r.outcome.rounds_used);
    EXPECT_EQ(df.counters().probes, 0u) << "trial " << trial;
  }
}

TEST(DiscoveryFollow, SeededNodesFireEveryEdgeInTheirWindow) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    TemporalGraph g = fixtures::random_graph(rng, 2 + rng() % 10, 1 + rng() % 8, 0.4);
    Time delta = 1 + static_cast<Time>(rng() % g.lifetime());
    HonestAdversary adversary(g);
    DiscoveryFollow df;
    PlayResult r = play(config_for(g, delta), df, adversary);
    std::set<RecordId> fired;
    for (const Round& round : r.transcript.rounds) {
      for (const InfectionEvent& e : *round.feedback.log) {
        if (!e.is_seed()) fired.insert(*g.record_with_label(e.infector, e.infected, e.time));
      }
    }
    for (const Round& round : r.transcript.rounds) {
      for (const Seed& s : round.seeds) {
        for (const Incidence& inc : g.incident(s.node)) {
          Time label = g.record(inc.record).labels[0];
          if (infectious_at(s.time, label, delta)) {
            EXPECT_TRUE(fired.count(inc.record)) << "trial " << trial;
          }
        }
      }
    }
  }
}

TEST(DiscoveryFollow, NeedsStaticGraph) {
  TemporalGraph g(3, 2, Variant::Simple, {{0, 1, {1}}});
  GameConfig c = config_for(g, 1);
  c.knowledge = Knowledge::NodesOnly;
  HonestAdversary adversary(g);
  DiscoveryFollow df;
  EXPECT_THROW(play(c, df, adversary), TgdError);
}

TEST(Follow, PathReturnsItsStart) {
  TemporalGraph g(2, 1, Variant::Simple, {{0, 1, {1}}});
  GameConfig c = config_for(g, 1);
  c.goal = Goal::Ipz;
  HonestAdversary adversary(g);
  Follow follow;
  PlayResult r = play(c, follow, adversary);
  EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
  EXPECT_EQ(std::get<IpzAnswer>(r.outcome.answer), (IpzAnswer{Seed{0, 0}}));
}

TEST(Follow, NoEdgesNoIpz) {
  TemporalGraph g(2, 3, Variant::Simple, {});
  GameConfig c = config_for(g, 1);
  c.goal = Goal::Ipz;
  HonestAdversary adversary(g);
  Follow follow;
  PlayResult r = play(c, follow, adversary);
  EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
  EXPECT_FALSE(std::get<IpzAnswer>(r.outcome.answer).has_value());
}

TEST(Follow, SharedComponentWithoutSpanningChain) {
  // One delta-ecc spans all four nodes, yet every chain stalls at the middle.
  TemporalGraph g(4, 2, Variant::Simple, {{0, 1, {1}}, {1, 2, {2}}, {2, 3, {1}}});
  ASSERT_EQ(delta_ecc(g, 1).component_count, 1u);
  ASSERT_FALSE(fixtures::naive_ipz(g, 1).has_value());
  GameConfig c = config_for(g, 1);
  c.goal = Goal::Ipz;
  HonestAdversary adversary(g);
  Follow follow;
  PlayResult r = play(c, follow, adversary);
  EXPECT_EQ(r.outcome.winner, Winner::Discoverer);
  EXPECT_FALSE(std::get<IpzAnswer>(r.outcome.answer).has_value());
}

TEST(Follow, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    TemporalGraph g = fixtures::random_graph(rng, 1 + rng() % 8, 1 + rng() % 6, 0.5);
    Time delta = 1 + static_cast<Time>(rng() % std::min<Time>(2, g.lifetime()));
    GameConfig c = config_for(g, delta);
    c.goal = Goal::Ipz;
    HonestAdversary adversary(g);
    Follow follow;
    PlayResult r = play(c, follow, adversary);
    IpzAnswer answer = std::get<IpzAnswer>(r.outcome.answer);
    auto oracle = fixtures::naive_ipz(g, delta);
    EXPECT_EQ(answer.has_value(), oracle.has_value()) << "trial " << trial;
    if (answer) EXPECT_EQ(fixtures::naive_timetable(g, {*answer}, delta).size(), g.node_count());
  }
}

TEST(MakeDiscoverer, KnownNames) {
  for (const char* name :
       {"brute-force", "guess", "follow", "discovery-follow", "discovery-follow-skip"}) {
    EXPECT_EQ(make_discoverer(name)->name(), name);
  }
  EXPECT_THROW(make_discoverer("oracle"), TgdError);
}
