#include "fixtures.hpp"

#include <algorithm>
#include <map>

#include "tgames/static_solvers.hpp"

namespace tgames::testing {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

TemporalGame two_phase_example() {
  TemporalGame g;
  const Vertex s = g.add_vertex("s", Player::One, 1);
  const Vertex u = g.add_vertex("u", Player::Two, 2);
  const Vertex t = g.add_vertex("t", Player::One, 1);
  const Vertex t2 = g.add_vertex("t'", Player::One, 1);
  const auto even = TimeSet::periodic(0, 2, {0});
  const auto odd = TimeSet::periodic(0, 2, {1});
  g.set_edge(s, t, even);
  g.set_edge(s, u, even);
  g.set_edge(s, s, odd);
  g.set_edge(u, t, odd);
  g.set_edge(u, t2, odd);
  g.set_edge(u, u, even);
  g.set_edge(t, t, odd);
  g.set_edge(t, s, even);
  g.set_edge(t2, t2, TimeSet::always());
  g.set_objective(ParityObjective{});
  g.set_initial(s);
  g.set_class_hint(PeriodicClass{2});
  return g;
}

TemporalGame period_fifteen_example() {
  TemporalGame g;
  const Vertex v = g.add_vertex("v", Player::Two, 3);
  const Vertex s = g.add_vertex("s", Player::One, 2);
  const Vertex t = g.add_vertex("t", Player::One, 2);
  const Vertex r = g.add_vertex("r", Player::One, 4);
  const Vertex x = g.add_vertex("x", Player::One, 5);
  const auto start = TimeSet::periodic(0, 15, {0});
  std::vector<Time> rest;
  for (int i = 1; i < 15; ++i) rest.emplace_back(i);
  g.set_edge(v, s, start);
  g.set_edge(v, t, start);
  g.set_edge(v, r, start);
  g.set_edge(v, v, TimeSet::periodic(0, 15, rest));
  g.set_edge(s, t, TimeSet::always());
  g.set_edge(t, s, TimeSet::always());
  g.set_edge(s, x, TimeSet::always());
  g.set_edge(t, x, TimeSet::always());
  g.set_edge(x, x, TimeSet::always());
  g.set_edge(r, r, TimeSet::always());
  g.set_objective(ParityObjective{});
  g.set_initial(v);
  g.set_class_hint(PeriodicClass{15});
  return g;
}

PeriodicStrategy alternate_strategy(const TemporalGame& g) {
  PeriodicStrategy sigma(g.size(), 15);
  const Vertex s = *g.find("s"), t = *g.find("t"), r = *g.find("r"), x = *g.find("x");
  for (std::uint64_t i = 0; i < 15; ++i) {
    sigma.set_move(s, i, t);
    sigma.set_move(t, i, s);
    sigma.set_move(r, i, r);
    sigma.set_move(x, i, x);
  }
  return sigma;
}

TemporalGame self_loop_game(Player owner, Colour colour) {
  TemporalGame g;
  g.add_vertex("a", owner, colour);
  g.set_edge(0, 0, TimeSet::always());
  g.set_objective(ParityObjective{});
  g.set_class_hint(PeriodicClass{1});
  return g;
}

StaticGameGraph random_static_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_degree,
                                    std::optional<std::uint32_t> colours, bool allow_sinks) {
  StaticGameGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Colour> c;
    if (colours) c = static_cast<Colour>(below(rng, *colours));
    g.add_vertex(below(rng, 2) ? Player::Two : Player::One, c);
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto lo = allow_sinks ? 0 : 1;
    const auto d = lo + below(rng, std::min(max_degree, n) - lo + 1);
    std::vector<Vertex> succ;
    while (succ.size() < d) {
      const auto w = static_cast<Vertex>(below(rng, n));
      if (std::find(succ.begin(), succ.end(), w) == succ.end()) succ.push_back(w);
    }
    for (Vertex w : succ) g.add_edge(v, w);
  }
  return g;
}

TimeSet random_timeset(std::mt19937_64& rng, std::uint64_t max_constant) {
  switch (below(rng, 5)) {
    case 0: return TimeSet::always();
    case 1: return TimeSet::never();
    case 2: {
      std::vector<TimeSet::Interval> items;
      std::uint64_t lo = below(rng, max_constant / 2 + 1);
      const auto k = 1 + below(rng, 3);
      for (std::uint64_t i = 0; i < k && lo <= max_constant; ++i) {
        const auto hi = lo + below(rng, max_constant / 4 + 1);
        items.push_back({lo, hi});
        lo = hi + 2 + below(rng, max_constant / 4 + 1);
      }
      return TimeSet::intervals(std::move(items));
    }
    case 3: {
      const auto period = 1 + below(rng, 5);
      std::vector<Time> residues;
      for (std::uint64_t r = 0; r < period; ++r)
        if (below(rng, 2)) residues.emplace_back(r);
      if (residues.empty()) residues.emplace_back(below(rng, period));
      return TimeSet::periodic(below(rng, max_constant / 2 + 1), period, residues);
    }
    default: {
      const Time bound(below(rng, max_constant + 1));
      return below(rng, 2) ? TimeSet::at_most(bound) : TimeSet::at_least(bound);
    }
  }
}

TemporalGame random_punctual_game(std::mt19937_64& rng, std::size_t n, std::uint64_t max_t) {
  const StaticGameGraph s = random_static_graph(rng, n, 3, std::nullopt, true);
  TemporalGame g = embed_static(s);
  std::vector<Vertex> f;
  for (Vertex v = 0; v < n; ++v)
    if (below(rng, 3) == 0) f.push_back(v);
  g.set_objective(PunctualObjective{f, below(rng, max_t + 1)});
  g.set_initial(static_cast<Vertex>(below(rng, n)));
  return g;
}

SimulationReport simulate_certificate(const TemporalGame& g, const Certificate& cert, std::size_t plays,
                                      std::size_t periods, std::uint64_t seed) {
  const auto k = game_period(g);
  std::map<Vertex, ColourMemoryStrategy> witness;
  for (Vertex s : cert.vertices) {
    auto r = check_realisable(g, s, cert.post(s));
    if (!r.realisable) return {false, "Post(" + g.name(s) + ") is not realisable"};
    witness.emplace(s, std::move(*r.witness));
  }

  std::mt19937_64 rng(seed);
  for (std::size_t play = 0; play < plays; ++play) {
    Vertex v = cert.initial;
    std::vector<Vertex> starts{v};
    std::vector<Colour> dominant;
    bool opponent_stuck = false;
    for (std::size_t p = 0; p < periods && !opponent_stuck; ++p) {
      const Vertex start = v;
      Colour c = g.colour_or_zero(v);
      for (std::uint64_t phase = 0; phase < k; ++phase) {
        const auto avail = successors(g, v, Time(phase));
        Vertex w;
        if (g.owner(v) == Player::One) {
          w = witness.at(start).move(v, c, phase);
          if (std::find(avail.begin(), avail.end(), w) == avail.end())
            return {false, "composite strategy has no legal move at " + g.name(v)};
        } else {
          if (avail.empty()) {
            opponent_stuck = true;
            break;
          }
          w = avail[below(rng, avail.size())];
        }
        c = std::max(c, g.colour_or_zero(w));
        v = w;
      }
      if (opponent_stuck) break;
      const auto post = cert.post(start);
      if (!std::binary_search(post.begin(), post.end(), Outcome{v, c}))
        return {false, "period from " + g.name(start) + " ended outside Post"};
      starts.push_back(v);
      dominant.push_back(c);
    }
    // every closed walk over the period boundaries must be even-dominated
    for (std::size_t j = 1; j < starts.size(); ++j) {
      Colour top = 0;
      for (std::size_t i = j; i-- > 0;) {
        top = std::max(top, dominant[i]);
        if (starts[i] == starts[j] && top % 2 == 1)
          return {false, "closed walk through " + g.name(starts[j]) + " has odd dominant colour"};
      }
    }
  }
  return {};
}

}  // namespace tgames::testing
