#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgames/game.hpp"

namespace tgames {

struct Violation {
  std::string subject;  // e.g. `vertex "a"` or `edge "a"->"b"`
  std::string rule;
  std::string to_string() const { return subject + ": " + rule; }
};

/// All data-model and class-hint violations of g; empty iff g is well formed.
std::vector<Violation> validate(const TemporalGame& g);

struct DeadlockWarning {
  Vertex vertex;
  Time earliest_dead_time;
  std::string to_string(const TemporalGame& g) const;
};

/// Vertices that have no available successor at some time within the
/// relevant window of the class hint (t <= h, t < K, or t < prefix + K).
std::vector<DeadlockWarning> deadlock_warnings(const TemporalGame& g);

/// True iff for every t >= start, membership of t and t + period agree.
bool is_periodic_from(const TimeSet& ts, const Time& start, const Time& period);

/// Sorted, deduplicated threshold bounds of a monotone instance.
/// Throws NonMonotoneInstance if an edge is Intervals or Periodic.
std::vector<Time> change_points(const TemporalGame& g);

/// Least s such that availability is constant on [s, infinity). For x <= c
/// the last change happens between c and c + 1; for x >= c at c.
/// Throws NonMonotoneInstance as change_points does.
Time stabilisation_time(const TemporalGame& g);

/// Times b such that availability at b - 1 and at b may differ, sorted.
std::vector<Time> availability_boundaries(const TemporalGame& g);

}  // namespace tgames
