#pragma once

#include <optional>
#include <string>

#include "tgames/game.hpp"
#include "tgames/punctual.hpp"

namespace tgames {

struct MonotoneClass {
  enum class Kind {
    Declining,
    Improving,
    Decreasing,
    Increasing,
    PeriodicallyDeclining,
    PeriodicallyImproving,
    None,
  };
  Kind kind = Kind::None;
  std::optional<Time> period;  // for the periodic kinds

  std::string to_string() const;
  friend bool operator==(const MonotoneClass&, const MonotoneClass&) = default;
};

/// Syntactic classification. Always and Never count as both decreasing and
/// increasing; with several matches the earliest kind in the enum wins.
MonotoneClass classify_monotonicity(const TemporalGame& g);

/// Player 1 edges decreasing, Player 2 edges increasing.
bool is_declining(const TemporalGame& g);
/// Player 1 edges increasing, Player 2 edges decreasing.
bool is_improving(const TemporalGame& g);

/// G_m: the static graph of edges available at time m.
StaticGameGraph stabilized_graph(const TemporalGame& g, const Time& m);

/// Time-0 winning region of Player 1 for reaching the objective's targets
/// at any time. Runs the change-point accelerated backward walk from the
/// stabilisation time; stats->backward_steps counts the executed steps.
/// Throws NotDeclining, or InvariantViolation if a monotonicity assertion
/// fails.
VertexSet solve_declining_reachability(const TemporalGame& g, const IterationLimits& limits = {},
                                       RunStats* stats = nullptr);

/// As above for improving games, by walking Player 2's region and
/// complementing. Throws NotImproving.
VertexSet solve_improving_reachability(const TemporalGame& g, const IterationLimits& limits = {},
                                       RunStats* stats = nullptr);

/// Parity on a declining game (or an improving one, through Player 2's
/// region). Throws NotDeclining when the game is neither.
VertexSet solve_declining_parity(const TemporalGame& g, const IterationLimits& limits = {},
                                 RunStats* stats = nullptr);

/// Layer-by-layer backward solving of a monotone game (any threshold mix):
/// solve G_s statically, then one backward step per time unit down to 0.
/// Reachability and parity objectives. Throws BudgetExceeded when the
/// stabilisation time exceeds the iteration budget.
VertexSet solve_ultimately_static(const TemporalGame& g, const IterationLimits& limits = {},
                                  RunStats* stats = nullptr);

}  // namespace tgames
