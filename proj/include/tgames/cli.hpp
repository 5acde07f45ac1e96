#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgames/game.hpp"
#include "tgames/periodic_parity.hpp"
#include "tgames/punctual.hpp"

namespace tgames::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kParseError = 2, kBudget = 3 };

struct SolveOutcome {
  Player winner = Player::Two;
  VertexSet region;  // Player 1's vertices at time 0
  std::string method;
  std::optional<Certificate> certificate;
  RunStats stats;
  std::optional<std::size_t> step_bound;  // |V| + |N| for accelerated runs
};

/// Dispatches on objective and class hint. `naive` replaces the accelerated
/// monotone solvers by layer-by-layer backward solving.
SolveOutcome solve_game(const TemporalGame& g, const IterationLimits& limits = {}, bool naive = false);

using Solver = std::function<SolveOutcome(const TemporalGame&, const IterationLimits&)>;

/// Runs `solver` (solve_game by default) and oracle_solve on g and compares
/// time-0 regions. Returns kOk, kNegative on disagreement, kBudget.
int oracle_check(const TemporalGame& g, const IterationLimits& limits, std::ostream& out, std::ostream& err,
                 const Solver& solver = {});

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Entry point without the program name: run({"solve", "g.json"}, ...).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgames::cli
