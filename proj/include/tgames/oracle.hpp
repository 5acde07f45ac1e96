#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "tgames/game.hpp"
#include "tgames/periodic_parity.hpp"
#include "tgames/punctual.hpp"

// Brute-force reference implementations. They share only the data model
// and the static solvers with the main algorithms and are meant for
// cross-validation at small sizes.

namespace tgames {

/// What happens after the last layer H of an expansion.
struct ExpansionTail {
  enum class Mode { None, Fold, Idle };
  Mode mode = Mode::None;
  std::uint64_t period = 0;  // Fold: layer H moves into layer H - period + 1

  static ExpansionTail none() { return {}; }
  /// Every vertex of the last layer gets a self-loop, so the play idles
  /// rather than deadlocks there.
  static ExpansionTail idle() { return {Mode::Idle, 0}; }
  static ExpansionTail fold(std::uint64_t k) { return {Mode::Fold, k}; }
};

/// Layered game over (v, i), i in [0, H], with id i * |V| + v.
struct ExpansionGraph {
  StaticGameGraph graph;
  std::size_t base_size = 0;
  std::uint64_t layers = 0;

  Vertex id(Vertex v, std::uint64_t layer) const { return static_cast<Vertex>(layer * base_size + v); }
  /// Lifts a set of base vertices to layer `layer` (or to every layer).
  VertexSet lift(const VertexSet& s, std::optional<std::uint64_t> layer = std::nullopt) const;
  /// Projects layer `layer` of an expansion set back to base vertices.
  VertexSet project(const VertexSet& s, std::uint64_t layer) const;
};

/// Throws BudgetExceeded when (H + 1) * |V| exceeds limits.expansion_budget.
ExpansionGraph build_expansion(const TemporalGame& g, const Time& horizon, ExpansionTail tail = {},
                               const IterationLimits& limits = {});

struct OracleResult {
  Player winner = Player::Two;  // from the initial vertex at time 0
  VertexSet region;             // Player 1's vertices at time 0
};

/// Solves g on its explicit expansion:
/// punctual objectives by an attractor to F at the last layer, reachability
/// by an attractor on the (folded or idle-tailed) expansion, parity by
/// Zielonka on the folded expansion.
OracleResult oracle_solve(const TemporalGame& g, const IterationLimits& limits = {});

/// Forward minimax over exactly-T-step plays with memoisation.
VertexSet oracle_punctual_minimax(const TemporalGame& g, const VertexSet& targets, std::uint64_t t);

/// Least fixpoint of S union Pre_player(S) by plain iteration.
VertexSet oracle_reach_fixpoint(const StaticGameGraph& g, Player player, const VertexSet& target);

/// Parity winners by enumerating every pair of positional strategies. A
/// player who cannot move loses. Throws CapExceeded above `max_pairs`.
VertexSet oracle_parity_enumeration(const StaticGameGraph& g, std::uint64_t max_pairs = 50'000'000);

/// Summary of sigma from s by walking every play of one period.
OutcomeSet oracle_play_tree_summary(const TemporalGame& g, const PeriodicStrategy& sigma, Vertex s);

struct SummaryCaps {
  std::size_t max_vertices = 4;
  std::uint64_t max_period = 3;
};

/// Summaries of all Player 1 strategies for one period from s. Strategies
/// choose per (vertex, maximal colour so far, phase) and are enumerated
/// only at decision points some play actually reaches.
std::set<OutcomeSet> oracle_enumerate_summaries(const TemporalGame& g, Vertex s, const SummaryCaps& caps = {});

/// Cycle condition by enumerating every simple cycle reachable from s0.
bool oracle_cycle_condition(const Certificate& cert, Vertex s0);

}  // namespace tgames
