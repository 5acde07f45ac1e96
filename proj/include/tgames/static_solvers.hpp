#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "tgames/game.hpp"

namespace tgames {

inline constexpr Vertex kNoMove = std::numeric_limits<Vertex>::max();

/// Positional strategy: successor per vertex, or kNoMove where undefined.
using PositionalStrategy = std::vector<Vertex>;

/// Winning regions (a partition of the vertices) and positional strategies
/// defined on each player's own vertices inside their region.
struct SolveResult {
  VertexSet region1;
  VertexSet region2;
  PositionalStrategy strategy1;
  PositionalStrategy strategy2;

  const VertexSet& region(Player p) const { return p == Player::One ? region1 : region2; }
  const PositionalStrategy& strategy(Player p) const { return p == Player::One ? strategy1 : strategy2; }
  Player winner(Vertex v) const { return region1.contains(v) ? Player::One : Player::Two; }
};

/// Region from which `player` forces a visit to `target` in zero or more
/// steps. An opponent vertex without successors counts as won (the player
/// who cannot move loses). Strategies break ties towards the lowest id.
SolveResult attractor(const StaticGameGraph& g, Player player, const VertexSet& target);

/// Zielonka's recursive algorithm, max-colour-even convention.
/// Throws DeadlockVertex if a vertex has no successor.
SolveResult solve_static_parity(const StaticGameGraph& g);

/// Parity solving where a player who cannot move loses. Deadlocked vertices
/// are routed to a fresh sink of the losing colour before Zielonka runs.
SolveResult solve_parity_allowing_deadlocks(const StaticGameGraph& g);

}  // namespace tgames
