#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tgames/errors.hpp"
#include "tgames/generate.hpp"
#include "tgames/monotone.hpp"
#include "tgames/oracle.hpp"
#include "tgames/periodic_parity.hpp"
#include "tgames/punctual.hpp"
#include "tgames/reductions.hpp"
#include "tgames/static_solvers.hpp"
#include "tgames/validate.hpp"

using namespace tgames;
using tgames::testing::below;

namespace {

TemporalGame sink_target_game(std::uint64_t seed, std::mt19937_64& rng) {
  GenerateOptions o;
  o.vertices = 2 + below(rng, 5);
  o.max_time = below(rng, 9);
  o.sink_target = true;
  return generate(Profile::StaticPunctual, seed, o);
}

const PunctualObjective& objective(const TemporalGame& g) { return std::get<PunctualObjective>(g.objective()); }

VertexSet punctual_region(const TemporalGame& g) {
  return solve_punctual(snapshot(g, 0), g.targets(), objective(g).target_time);
}

/// Player 1's time-0 region of the output, pulled back to input vertices.
VertexSet pulled_back(const ReductionOutput& out, std::size_t n) {
  const auto region = oracle_solve(out.game).region;
  VertexSet back(n);
  for (Vertex v = 0; v < n; ++v)
    if (region.contains(out.vertex_map[v])) back.insert(v);
  return back;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("waiting gadget shape") {
  StaticGameGraph s;
  for (int i = 0; i < 3; ++i) s.add_vertex(Player::One);
  s.add_edge(0, 1);
  s.add_edge(1, 2);
  s.add_edge(2, 2);
  TemporalGame g = embed_static(s);
  g.set_objective(ReachObjective{{2}});
  const auto out = reduce_exists_to_punctual(g);
  CHECK(out.game.size() == 4);
  CHECK(objective(out.game).target_time == 8);
  const Vertex start = out.game.initial();
  CHECK(out.game.name(start) == g.name(0) + "'");
  CHECK(out.game.owner(start) == Player::One);
  CHECK(out.game.edge(start, start) != nullptr);
  CHECK(out.game.edge(start, 0) != nullptr);
  CHECK(validate(out.game).empty());
  CHECK(punctual_region(out.game).contains(start));

  TemporalGame wrong = g;
  wrong.set_objective(PunctualObjective{{2}, 1});
  CHECK_THROWS_AS(reduce_exists_to_punctual(wrong), UnsupportedInstance);
}

TEST_CASE("punctual to temporal preserves the winner") {
  std::mt19937_64 rng(70);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const TemporalGame g = sink_target_game(seed, rng);
    const auto out = reduce_punctual_to_temporal(g);
    REQUIRE(validate(out.game).empty());
    REQUIRE(out.game.size() == g.size() + 1);
    REQUIRE(pulled_back(out, g.size()) == punctual_region(g));
    REQUIRE(solve_temporal_reachability(out.game, out.game.targets()) == oracle_solve(out.game).region);
  }
}

TEST_CASE("punctual to decreasing preserves the winner") {
  std::mt19937_64 rng(71);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const TemporalGame g = sink_target_game(seed, rng);
    const Vertex v = g.targets().members().front();
    const auto out = reduce_punctual_to_decreasing(g, v, objective(g).target_time);
    REQUIRE(validate(out.game).empty());
    REQUIRE(out.game.name(out.game.targets().members().front()) == "top");
    REQUIRE(classify_monotonicity(out.game).kind == MonotoneClass::Kind::Decreasing);
    REQUIRE(pulled_back(out, g.size()) == punctual_region(g));
  }
}

TEST_CASE("punctual to increasing preserves the winner") {
  std::mt19937_64 rng(72);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const TemporalGame g = sink_target_game(seed, rng);
    const Vertex v = g.targets().members().front();
    const auto out = reduce_punctual_to_increasing(g, v, objective(g).target_time);
    REQUIRE(validate(out.game).empty());
    REQUIRE(classify_monotonicity(out.game).kind == MonotoneClass::Kind::Increasing);
    REQUIRE(pulled_back(out, g.size()) == punctual_region(g));
  }
}

TEST_CASE("punctual to periodically declining preserves the winner") {
  std::mt19937_64 rng(73);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const TemporalGame g = sink_target_game(seed, rng);
    const Vertex v = g.targets().members().front();
    const auto out = reduce_punctual_to_periodically_declining(g, v, objective(g).target_time);
    REQUIRE(validate(out.game).empty());
    REQUIRE(std::get<PeriodicClass>(out.game.class_hint()).period == objective(g).target_time + 1);
    const auto expected = punctual_region(g);
    REQUIRE(pulled_back(out, g.size()) == expected);
    if (objective(g).target_time > 0) {
      const auto c = classify_monotonicity(out.game);
      REQUIRE(c.kind == MonotoneClass::Kind::PeriodicallyDeclining);
    }
    if (objective(g).target_time <= 5) {
      const auto as_parity = reachability_as_parity(out.game);
      const auto solved = solve_periodic_parity(as_parity, 0);
      for (Vertex x = 0; x < g.size(); ++x)
        REQUIRE(solved.region_by_phase[0].contains(out.vertex_map[x]) == expected.contains(x));
    }
  }
}

TEST_CASE("gadget preconditions") {
  TemporalGame g;
  g.add_vertex("a", Player::One);
  g.add_vertex("b", Player::Two);
  g.set_edge(0, 1, TimeSet::always());
  g.set_edge(1, 0, TimeSet::always());
  g.set_objective(PunctualObjective{{1}, 3});
  CHECK_THROWS_AS(reduce_punctual_to_decreasing(g, 1, 3), TargetHasOutEdges);
  CHECK_THROWS_AS(reduce_punctual_to_increasing(g, 0, 3), TargetHasOutEdges);
  g.set_edge(1, 0, TimeSet::never());
  CHECK_THROWS_AS(reduce_punctual_to_periodically_declining(g, 1, 3), TargetNotP1);
  CHECK_NOTHROW(reduce_punctual_to_decreasing(g, 1, 3));

  TemporalGame timed = g;
  timed.set_edge(0, 1, TimeSet::at_most(4));
  CHECK_THROWS_AS(reduce_punctual_to_temporal(timed), UnsupportedInstance);
}

TEST_CASE("fresh names avoid clashes") {
  TemporalGame g;
  g.add_vertex("u", Player::One);
  g.add_vertex("top", Player::One);
  g.set_edge(0, 1, TimeSet::always());
  g.set_objective(PunctualObjective{{1}, 1});
  const auto temporal = reduce_punctual_to_temporal(g);
  CHECK(temporal.game.name(2) == "u'");
  const auto dec = reduce_punctual_to_decreasing(g, 1, 1);
  CHECK(dec.game.find("top'"));
  CHECK(validate(dec.game).empty());
}

TEST_CASE("dualising swaps the winner on deadlock-free games") {
  std::mt19937_64 rng(74);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenerateOptions o;
    o.vertices = 1 + below(rng, 6);
    o.max_time = below(rng, 9);
    const TemporalGame g = generate(Profile::StaticPunctual, seed, o);
    const auto d = dualize(g);
    REQUIRE(d.game.targets() == g.targets().complement());
    REQUIRE(punctual_region(d.game) == punctual_region(g).complement());
    REQUIRE(dualize(d.game).game == g);
  }
}

TEST_CASE("reachability of sink targets as parity") {
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + below(rng, 6);
    StaticGameGraph s;
    for (std::size_t i = 0; i < n; ++i) s.add_vertex(below(rng, 2) ? Player::Two : Player::One);
    VertexSet f(n);
    for (Vertex v = 0; v < n; ++v)
      if (below(rng, 3) == 0) f.insert(v);
    for (Vertex v = 0; v < n; ++v) {
      if (f.contains(v)) {
        s.add_edge(v, v);
        continue;
      }
      const auto d = 1 + below(rng, std::min<std::uint64_t>(3, n));
      for (std::uint64_t i = 0; i < d; ++i) {
        const auto w = static_cast<Vertex>(below(rng, n));
        if (!s.has_edge(v, w)) s.add_edge(v, w);
      }
    }
    TemporalGame g = embed_static(s);
    g.set_objective(ReachObjective{f.members()});
    const auto p = reachability_as_parity(g);
    REQUIRE(p.fully_coloured());
    REQUIRE(oracle_solve(p).region == attractor(s, Player::One, f).region1);
  }

  TemporalGame bad;
  bad.add_vertex("a", Player::One);
  bad.add_vertex("b", Player::One);
  bad.set_edge(0, 1, TimeSet::always());
  bad.set_edge(1, 1, TimeSet::always());
  bad.set_objective(ReachObjective{{0}});
  CHECK_THROWS_AS(reachability_as_parity(bad), UnsupportedInstance);
  bad.set_edge(0, 0, TimeSet::always());
  CHECK_THROWS_AS(reachability_as_parity(bad), TargetHasOutEdges);
}

}  // TEST_SUITE
