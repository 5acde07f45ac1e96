#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tgames/game.hpp"

namespace tgames {

inline constexpr std::uint64_t kDefaultIterationBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultExpansionBudget = 1'000'000;

/// Limits for the exponential-time loops. `cancelled` is polled every 2^16
/// iterations; returning true aborts with Cancelled.
struct IterationLimits {
  std::uint64_t budget = kDefaultIterationBudget;
  std::uint64_t expansion_budget = kDefaultExpansionBudget;
  std::function<bool()> cancelled;
};

struct RunStats {
  std::uint64_t iterations = 0;
  std::uint64_t backward_steps = 0;
  std::uint64_t expansion_vertices = 0;
};

/// Vertices from which `player` forces entering s in exactly one step. An
/// opponent vertex with no successor satisfies the universal branch.
VertexSet pre(const StaticGameGraph& g, Player player, const VertexSet& s);

/// As above, with moves departing at time t.
VertexSet pre(const TemporalGame& g, Player player, const VertexSet& s, const Time& t);

/// Pre_1^T(F): the vertices from which Player 1 is in F at exactly time T.
/// Throws BudgetExceeded when T exceeds the iteration budget.
VertexSet solve_punctual(const StaticGameGraph& g, const VertexSet& targets, const Time& target_time,
                         const IterationLimits& limits = {}, RunStats* stats = nullptr);

/// The whole sequence F = B_0, B_1, ..., B_T with B_{k+1} = Pre_1(B_k).
std::vector<VertexSet> punctual_layers(const StaticGameGraph& g, const VertexSet& targets,
                                       const Time& target_time, const IterationLimits& limits = {});

/// A winning move for Player 1 at v with `remaining` >= 1 steps to go, given
/// the layers of punctual_layers. Returns kNoMove when v is not winning.
Vertex punctual_witness_move(const StaticGameGraph& g, const std::vector<VertexSet>& layers, Vertex v,
                             std::size_t remaining);

/// Exact-time reachability on a temporal game: s is returned iff Player 1,
/// starting at (s, 0), forces being in F at time T.
VertexSet solve_punctual_temporal(const TemporalGame& g, const VertexSet& targets, const Time& target_time,
                                  const IterationLimits& limits = {}, RunStats* stats = nullptr);

/// Winning sets at every time: result[t] for t in [0, T].
std::vector<VertexSet> punctual_temporal_layers(const TemporalGame& g, const VertexSet& targets,
                                                std::uint64_t target_time,
                                                const IterationLimits& limits = {});

/// B_0 = F, B_{k+1} = Pre_1(B_k), computed until the first repeated set.
struct PreSequenceTrace {
  std::vector<VertexSet> sets;  // B_0 .. B_{first_repeat + cycle_length - 1}
  std::size_t first_repeat = 0;
  std::size_t cycle_length = 0;
  bool repeat_detected = false;

  /// B_k for any k, using the detected cycle.
  const VertexSet& at(std::uint64_t k) const;
};

PreSequenceTrace pre_sequence_trace(const StaticGameGraph& g, const VertexSet& targets,
                                    const IterationLimits& limits = {});

/// Least T with s0 in Pre_1^T(F), or nullopt if there is none.
std::optional<std::uint64_t> solve_exists_target_time(const StaticGameGraph& g, const VertexSet& targets,
                                                      Vertex s0, const IterationLimits& limits = {});

/// Reachability (visit F at any time) on a finite-horizon game. After the
/// horizon no edge is available and the play ends, so the region at h + 1
/// is F itself; earlier layers are F united with the backward step.
VertexSet solve_temporal_reachability(const TemporalGame& g, const VertexSet& targets,
                                      const IterationLimits& limits = {}, RunStats* stats = nullptr);

/// Reachability (visit F at any time) on a periodic or ultimately periodic
/// game: an attractor on the period expansion from the prefix on, then one
/// backward step per prefix time unit.
VertexSet solve_periodic_reachability(const TemporalGame& g, const IterationLimits& limits = {},
                                      RunStats* stats = nullptr);

/// Throws BudgetExceeded unless steps <= limits.budget; returns the count.
std::uint64_t checked_iterations(const Time& steps, const IterationLimits& limits, const char* what);

/// Polls the cancellation hook every 2^16 iterations.
void poll_cancellation(const IterationLimits& limits, std::uint64_t iteration);

}  // namespace tgames
