#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tgames/game.hpp"
#include "tgames/periodic_parity.hpp"

namespace tgames::testing {

/// Period-2 game with Player 1 vertex s, Player 2 vertex u and sinks t, t'.
/// From s at time 0, Player 1 either moves to t directly or passes through u,
/// where Player 2 picks t or t' at time 1.
TemporalGame two_phase_example();

/// Period-15 game: Player 2's v sends the play to s, t (Player 1's pair that
/// can alternate forever) or r at time 0, and waits otherwise.
TemporalGame period_fifteen_example();

/// Player 1's strategy in period_fifteen_example: alternate between s and t.
PeriodicStrategy alternate_strategy(const TemporalGame& g);

/// One vertex with an always-available self-loop.
TemporalGame self_loop_game(Player owner, Colour colour);

/// Random static graph with every vertex having 1..max_degree successors.
StaticGameGraph random_static_graph(std::mt19937_64& rng, std::size_t n, std::size_t max_degree,
                                    std::optional<std::uint32_t> colours = std::nullopt, bool allow_sinks = false);

/// Random TimeSet over small constants, any variant.
TimeSet random_timeset(std::mt19937_64& rng, std::uint64_t max_constant);

/// Random static game (all edges Always) with a punctual objective.
TemporalGame random_punctual_game(std::mt19937_64& rng, std::size_t n, std::uint64_t max_t);

/// Simulates the composite strategy of a verified certificate against a
/// random opponent. Every period starts at a certificate vertex s_i and is
/// played with the realisability witness of Post(s_i). Returns false if a
/// period ends outside Post(s_i) or a closed walk of periods has an odd
/// maximal colour.
struct SimulationReport {
  bool ok = true;
  std::string failure;
};
SimulationReport simulate_certificate(const TemporalGame& g, const Certificate& cert, std::size_t plays,
                                      std::size_t periods, std::uint64_t seed);

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n);

}  // namespace tgames::testing
