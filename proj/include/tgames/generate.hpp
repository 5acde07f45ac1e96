#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgames/game.hpp"

namespace tgames {

enum class Profile { StaticPunctual, Finite, PeriodicParity, Declining, Improving };

std::optional<Profile> parse_profile(std::string_view name);
std::string profile_name(Profile p);
const std::vector<std::string>& profile_names();

struct GenerateOptions {
  std::size_t vertices = 5;
  std::size_t max_out_degree = 3;
  std::uint64_t max_time = 10;   // target time (punctual) or horizon (finite)
  std::uint64_t period = 3;      // periodic-parity
  std::uint32_t colours = 3;     // periodic-parity, and parity objectives
  std::uint64_t max_bound = 20;  // threshold bounds of monotone profiles
  bool parity = false;           // monotone profiles: parity instead of reachability
  /// static-punctual: the single target is a Player 1 vertex without
  /// outgoing edges, as the punctual reductions expect.
  bool sink_target = false;
};

/// Deterministic in (profile, seed, options). Instances validate, carry the
/// profile's class hint, and have no deadlock within the horizon or period
/// (apart from a requested sink target). Vertices are "v0", "v1", ...
TemporalGame generate(Profile profile, std::uint64_t seed, const GenerateOptions& options = {});

}  // namespace tgames
