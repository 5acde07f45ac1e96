#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "tgames/errors.hpp"
#include "tgames/generate.hpp"
#include "tgames/oracle.hpp"
#include "tgames/periodic_parity.hpp"
#include "tgames/static_solvers.hpp"

using namespace tgames;
using tgames::testing::below;

namespace {

OutcomeSet outcomes(const TemporalGame& g, std::initializer_list<std::pair<const char*, Colour>> items) {
  std::vector<Outcome> out;
  for (const auto& [name, c] : items) out.push_back({*g.find(name), c});
  return make_outcome_set(std::move(out));
}

PeriodicStrategy random_strategy(std::mt19937_64& rng, const TemporalGame& g, std::uint64_t k) {
  PeriodicStrategy sigma(g.size(), k);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.owner(v) != Player::One) continue;
    for (std::uint64_t i = 0; i < k; ++i) {
      const auto avail = successors(g, v, i);
      if (!avail.empty()) sigma.set_move(v, i, avail[below(rng, avail.size())]);
    }
  }
  return sigma;
}

Certificate::Edge edge(Vertex a, Colour c, Vertex b) { return {a, c, b}; }

TemporalGame tiny_periodic(std::uint64_t seed, std::mt19937_64& rng) {
  GenerateOptions o;
  o.vertices = 1 + below(rng, 4);
  o.period = 1 + below(rng, 3);
  o.colours = 1 + below(rng, 2);
  o.max_out_degree = 2;
  return generate(Profile::PeriodicParity, seed, o);
}

}  // namespace

TEST_SUITE("periodic-parity") {

TEST_CASE("summaries of the two-phase example") {
  const auto g = tgames::testing::two_phase_example();
  const Vertex s = *g.find("s"), u = *g.find("u"), t = *g.find("t"), t2 = *g.find("t'");
  PeriodicStrategy direct(g.size(), 2), via_u(g.size(), 2);
  for (auto* sigma : {&direct, &via_u}) {
    sigma->set_move(s, 1, s);
    sigma->set_move(t, 0, s);
    sigma->set_move(t, 1, t);
    sigma->set_move(t2, 0, t2);
    sigma->set_move(t2, 1, t2);
  }
  direct.set_move(s, 0, t);
  via_u.set_move(s, 0, u);
  CHECK(compute_summary(g, direct, s).pairs == outcomes(g, {{"t", 1}}));
  CHECK(compute_summary(g, via_u, s).pairs == outcomes(g, {{"t", 2}, {"t'", 2}}));

  PeriodicStrategy bad = direct;
  bad.set_move(s, 0, s);
  CHECK_THROWS_AS(compute_summary(g, bad, s), StrategyUnavailableMove);
}

TEST_CASE("realisability in the two-phase example") {
  const auto g = tgames::testing::two_phase_example();
  const Vertex s = *g.find("s");
  const auto one = check_realisable(g, s, outcomes(g, {{"t", 1}}));
  CHECK(one.realisable);
  REQUIRE(one.witness);
  CHECK(check_realisable(g, s, outcomes(g, {{"t", 2}, {"t'", 2}})).realisable);
  const auto two = check_realisable(g, s, outcomes(g, {{"t", 2}}));
  CHECK_FALSE(two.realisable);
  CHECK_FALSE(two.witness);

  const auto summaries = oracle_enumerate_summaries(g, s);
  CHECK(summaries.count(outcomes(g, {{"t", 1}})));
  CHECK(summaries.count(outcomes(g, {{"t", 2}, {"t'", 2}})));
  CHECK_FALSE(summaries.count(outcomes(g, {{"t", 2}})));
}

TEST_CASE("colour product tracks the maximum") {
  const auto g = tgames::testing::two_phase_example();
  const ColourIndex ci(g);
  REQUIRE(ci.colours() == std::vector<Colour>{1, 2});
  const auto p = colour_product(g, ci);
  CHECK(p.size() == 8);
  const Vertex s1 = *p.find("s#1"), u2 = *p.find("u#2");
  CHECK(p.edge(s1, u2) != nullptr);
  CHECK(p.edge(s1, *p.find("u#1")) == nullptr);
}

TEST_CASE("realisability agrees with summary enumeration on tiny games") {
  std::mt19937_64 rng(40);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const TemporalGame g = tiny_periodic(seed, rng);
    const ColourIndex ci(g);
    std::vector<Outcome> universe;
    for (Vertex v = 0; v < g.size(); ++v)
      for (Colour c : ci.colours()) universe.push_back({v, c});
    for (Vertex s = 0; s < g.size(); ++s) {
      const auto summaries = oracle_enumerate_summaries(g, s);
      for (std::uint64_t mask = 0; mask < (1ull << universe.size()); ++mask) {
        std::vector<Outcome> b;
        for (std::size_t i = 0; i < universe.size(); ++i)
          if (mask >> i & 1) b.push_back(universe[i]);
        const auto set = make_outcome_set(b);
        bool expected = false;
        for (const auto& sum : summaries) expected = expected || is_subset(sum, set);
        const auto r = check_realisable(g, s, set);
        REQUIRE(r.realisable == expected);
      }
    }
  }
}

TEST_CASE("realisability is monotone in B") {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TemporalGame g = tiny_periodic(500 + seed, rng);
    const ColourIndex ci(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Outcome> b;
      for (Vertex v = 0; v < g.size(); ++v)
        for (Colour c : ci.colours())
          if (below(rng, 3) == 0) b.push_back({v, c});
      auto bigger = b;
      bigger.push_back({static_cast<Vertex>(below(rng, g.size())), ci.colour(below(rng, ci.size()))});
      const Vertex s = static_cast<Vertex>(below(rng, g.size()));
      if (check_realisable(g, s, make_outcome_set(b)).realisable)
        REQUIRE(check_realisable(g, s, make_outcome_set(bigger)).realisable);
    }
  }
}

TEST_CASE("summary equals the play-tree oracle") {
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenerateOptions o;
    o.vertices = 1 + below(rng, 5);
    o.period = 1 + below(rng, 5);
    const TemporalGame g = generate(Profile::PeriodicParity, seed, o);
    const auto sigma = random_strategy(rng, g, o.period);
    for (Vertex s = 0; s < g.size(); ++s) {
      const auto sum = compute_summary(g, sigma, s);
      REQUIRE_FALSE(sum.pairs.empty());
      REQUIRE(sum.pairs == oracle_play_tree_summary(g, sigma, s));
    }
  }
}

TEST_CASE("witness summaries stay inside B") {
  std::mt19937_64 rng(43);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const TemporalGame g = tiny_periodic(900 + seed, rng);
    const auto k = game_period(g);
    for (Vertex s = 0; s < g.size(); ++s)
      for (const auto& sum : oracle_enumerate_summaries(g, s)) {
        const auto r = check_realisable(g, s, sum);
        REQUIRE(r.realisable);
        // replay the colour-memory witness over every play
        std::vector<Outcome> reached;
        std::function<void(Vertex, std::uint64_t, Colour)> walk = [&](Vertex v, std::uint64_t t, Colour c) {
          if (t == k) {
            reached.push_back({v, c});
            return;
          }
          const auto avail = successors(g, v, t);
          if (g.owner(v) == Player::Two) {
            for (Vertex w : avail) walk(w, t + 1, std::max(c, g.colour_or_zero(w)));
            return;
          }
          const Vertex w = r.witness->move(v, c, t);
          REQUIRE(std::find(avail.begin(), avail.end(), w) != avail.end());
          walk(w, t + 1, std::max(c, g.colour_or_zero(w)));
        };
        walk(s, 0, g.colour_or_zero(s));
        REQUIRE(is_subset(make_outcome_set(reached), sum));
      }
  }
}

TEST_CASE("period-fifteen certificate") {
  const auto g = tgames::testing::period_fifteen_example();
  const Vertex v = *g.find("v"), s = *g.find("s"), t = *g.find("t"), r = *g.find("r");
  Certificate cert;
  cert.vertices = {v, s, t, r};
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.edges = {edge(v, 3, s), edge(v, 3, t), edge(v, 4, r), edge(s, 2, t), edge(t, 2, s), edge(r, 4, r)};
  std::sort(cert.edges.begin(), cert.edges.end());
  cert.initial = v;
  const auto check = verify_certificate(g, cert, v);
  CHECK(check.ok);
  CHECK(check.diagnostic.empty());

  const auto extracted = extract_certificate(g, tgames::testing::alternate_strategy(g), v);
  CHECK(extracted == cert);
  CHECK(extracted.post(v) == outcomes(g, {{"s", 3}, {"t", 3}, {"r", 4}}));

  const auto solved = solve_periodic_parity(g, v);
  CHECK(solved.winner == Player::One);
  REQUIRE(solved.certificate);
  CHECK(verify_certificate(g, *solved.certificate, v).ok);

  // Post(v) without r is not realisable: Player 2 may always pick r
  Certificate smaller = cert;
  smaller.edges.erase(std::remove(smaller.edges.begin(), smaller.edges.end(), edge(v, 4, r)), smaller.edges.end());
  const auto bad = verify_certificate(g, smaller, v);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("realisab") != std::string::npos);
}

TEST_CASE("certificate structure violations") {
  const auto g = tgames::testing::self_loop_game(Player::One, 1);
  Certificate cert{{0}, {edge(0, 1, 0)}, 0};
  const auto odd = verify_certificate(g, cert, 0);
  CHECK_FALSE(odd.ok);
  CHECK(odd.diagnostic.find("cycle condition") != std::string::npos);

  const auto even_game = tgames::testing::self_loop_game(Player::One, 2);
  CHECK(verify_certificate(even_game, Certificate{{0}, {edge(0, 2, 0)}, 0}, 0).ok);
  CHECK_FALSE(verify_certificate(even_game, Certificate{{0}, {}, 0}, 0).ok);
  CHECK_FALSE(verify_certificate(even_game, Certificate{{}, {}, 0}, 0).ok);
}

TEST_CASE("cycle condition examples") {
  CHECK(check_cycle_condition(Certificate{{0}, {edge(0, 2, 0)}, 0}, 0).ok);
  CHECK(check_cycle_condition(Certificate{{0, 1}, {edge(0, 1, 1), edge(1, 2, 0)}, 0}, 0).ok);
  const auto bad = check_cycle_condition(Certificate{{0, 1}, {edge(0, 1, 1), edge(1, 3, 0)}, 0}, 0);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.odd_edge);
  CHECK(bad.odd_edge->colour == 3);
  // an odd cycle that is not reachable does not matter
  CHECK(check_cycle_condition(Certificate{{0, 1}, {edge(0, 2, 0), edge(1, 1, 1)}, 0}, 0).ok);
}

TEST_CASE("cycle condition equals simple-cycle enumeration") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = 1 + below(rng, 6);
    Certificate cert;
    for (Vertex v = 0; v < n; ++v) cert.vertices.push_back(v);
    const auto m = below(rng, 2 * n + 2);
    for (std::uint64_t i = 0; i < m; ++i)
      cert.edges.push_back(edge(static_cast<Vertex>(below(rng, n)), static_cast<Colour>(below(rng, 4)),
                                static_cast<Vertex>(below(rng, n))));
    std::sort(cert.edges.begin(), cert.edges.end());
    cert.edges.erase(std::unique(cert.edges.begin(), cert.edges.end()), cert.edges.end());
    const Vertex s0 = static_cast<Vertex>(below(rng, n));
    REQUIRE(check_cycle_condition(cert, s0).ok == oracle_cycle_condition(cert, s0));
  }
}

TEST_CASE("periodic parity basics") {
  GenerateOptions o;
  o.vertices = 5;
  o.period = 4;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TemporalGame g = generate(Profile::PeriodicParity, seed, o);
    for (Vertex v = 0; v < g.size(); ++v) g.set_colour(v, 2 * (v % 3));
    const auto r = solve_periodic_parity(g, 0);
    CHECK(r.winner == Player::One);
    for (const auto& region : r.region_by_phase) CHECK(region == VertexSet::full(g.size()));
  }
  TemporalGame g = tgames::testing::self_loop_game(Player::Two, 1);
  CHECK(solve_periodic_parity(g, 0).winner == Player::Two);

  const auto even = solve_periodic_parity(tgames::testing::self_loop_game(Player::Two, 2), 0);
  REQUIRE(even.certificate);
  CHECK(*even.certificate == Certificate{{0}, {edge(0, 2, 0)}, 0});

  IterationLimits limits;
  limits.expansion_budget = 10;
  CHECK_THROWS_AS(solve_periodic_parity(tgames::testing::period_fifteen_example(), 0, limits), BudgetExceeded);
}

TEST_CASE("periodic parity agrees with the folded expansion oracle and certificates verify") {
  std::mt19937_64 rng(45);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenerateOptions o;
    o.vertices = 1 + below(rng, 6);
    o.period = 1 + below(rng, 6);
    o.colours = 1 + below(rng, 3);
    const TemporalGame g = generate(Profile::PeriodicParity, seed, o);
    const auto r = solve_periodic_parity(g, g.initial());
    const auto oracle = oracle_solve(g);
    REQUIRE(r.region_by_phase[0] == oracle.region);
    REQUIRE(r.winner == oracle.winner);
    if (r.winner == Player::One) {
      REQUIRE(r.certificate);
      REQUIRE(verify_certificate(g, *r.certificate, g.initial()).ok);
    }
  }
}

TEST_CASE("phase rotation shifts the winning regions") {
  std::mt19937_64 rng(46);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenerateOptions o;
    o.vertices = 1 + below(rng, 5);
    o.period = 2 + below(rng, 4);
    const TemporalGame g = generate(Profile::PeriodicParity, seed, o);
    const auto k = o.period;
    // rotated availability at phase i is the original at phase i + 1
    const TemporalGame rotated = periodic_suffix(g, 1, k);
    const auto a = solve_periodic_parity(g, 0);
    const auto b = solve_periodic_parity(rotated, 0);
    for (std::uint64_t i = 0; i < k; ++i) REQUIRE(b.region_by_phase[i] == a.region_by_phase[(i + 1) % k]);
  }
}

TEST_CASE("enumerated certificates agree with the solver") {
  std::mt19937_64 rng(47);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TemporalGame g = tiny_periodic(3000 + seed, rng);
    const auto solved = solve_periodic_parity(g, g.initial());
    const auto found = enumerate_certificates(g, g.initial());
    REQUIRE(found.has_value() == (solved.winner == Player::One));
    if (found) REQUIRE(verify_certificate(g, *found, g.initial()).ok);
  }
  const auto trivial = enumerate_certificates(tgames::testing::self_loop_game(Player::One, 2), 0);
  REQUIRE(trivial);
  CHECK(*trivial == Certificate{{0}, {edge(0, 2, 0)}, 0});
  CHECK_THROWS_AS(enumerate_certificates(tgames::testing::period_fifteen_example(), 0), CapExceeded);
}

TEST_CASE("composite strategies of certificates win in simulation") {
  const auto g = tgames::testing::period_fifteen_example();
  const auto cert = extract_certificate(g, tgames::testing::alternate_strategy(g), *g.find("v"));
  const auto report = tgames::testing::simulate_certificate(g, cert, 200, 30, 7);
  CHECK_MESSAGE(report.ok, report.failure);
}

TEST_CASE("ultimately periodic parity") {
  std::mt19937_64 rng(48);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenerateOptions o;
    o.vertices = 1 + below(rng, 5);
    o.period = 1 + below(rng, 4);
    TemporalGame g = generate(Profile::PeriodicParity, seed, o);
    const auto periodic = solve_periodic_parity(g, 0);
    TemporalGame up = g;
    up.set_class_hint(UltimatelyPeriodicClass{0, o.period});
    CHECK(solve_ultimately_periodic_parity(up, 0).region == periodic.region_by_phase[0]);
  }

  // s0 can only reach good once the periodic part has started
  TemporalGame g;
  g.add_vertex("s0", Player::One, 2);
  g.add_vertex("good", Player::One, 2);
  g.add_vertex("bad", Player::One, 1);
  g.set_edge(0, 1, TimeSet::periodic(3, 1, {0}));
  g.set_edge(0, 2, TimeSet::interval(0, 2));
  g.set_edge(1, 1, TimeSet::always());
  g.set_edge(2, 2, TimeSet::always());
  g.set_objective(ParityObjective{});
  g.set_class_hint(UltimatelyPeriodicClass{3, 1});
  const auto r = solve_ultimately_periodic_parity(g, 0);
  CHECK(r.suffix_region.contains(0));
  CHECK(r.winner == Player::Two);

  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto t = below(rng, 9);
    const auto k = 1 + below(rng, 4);
    TemporalGame h;
    const auto n = 1 + below(rng, 5);
    for (std::size_t i = 0; i < n; ++i)
      h.add_vertex("v" + std::to_string(i), below(rng, 2) ? Player::Two : Player::One,
                   static_cast<Colour>(below(rng, 3)));
    for (Vertex v = 0; v < n; ++v) {
      h.set_edge(v, static_cast<Vertex>(below(rng, n)), TimeSet::always());
      const Vertex w = static_cast<Vertex>(below(rng, n));
      if (!h.edge(v, w)) {
        std::vector<Time> residues{below(rng, k)};
        h.set_edge(v, w, t > 0 && below(rng, 2) ? TimeSet::interval(0, below(rng, t))
                                                : TimeSet::periodic(t, k, residues));
      }
    }
    h.set_objective(ParityObjective{});
    h.set_class_hint(UltimatelyPeriodicClass{t, k});
    const auto expected = oracle_solve(h);
    REQUIRE(solve_ultimately_periodic_parity(h, 0).region == expected.region);
  }
}

}  // TEST_SUITE
