#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tgames/time.hpp"

namespace tgames {

/// Finitely represented predicate over non-negative integer times: the
/// language in which edge availability is written.
///
/// Instances can be built in an ill-formed state (e.g. an out-of-range
/// residue read from a file); `violations()` reports such problems and the
/// solvers assume they have been checked.
class TimeSet {
 public:
  struct Always {
    friend bool operator==(const Always&, const Always&) = default;
  };
  struct Never {
    friend bool operator==(const Never&, const Never&) = default;
  };
  struct Interval {
    Time lo;
    Time hi;
    friend bool operator==(const Interval&, const Interval&) = default;
  };
  /// Union of closed intervals, expected sorted and pairwise disjoint.
  struct Intervals {
    std::vector<Interval> items;
    friend bool operator==(const Intervals&, const Intervals&) = default;
  };
  /// t is a member iff t >= offset and (t - offset) mod period is a residue.
  struct Periodic {
    Time offset;
    Time period;
    std::vector<Time> residues;
    friend bool operator==(const Periodic&, const Periodic&) = default;
  };
  enum class Comparison { AtMost, AtLeast };
  /// t <= bound (decreasing edge) or t >= bound (increasing edge).
  struct Threshold {
    Comparison op;
    Time bound;
    friend bool operator==(const Threshold&, const Threshold&) = default;
  };

  using Rep = std::variant<Always, Never, Intervals, Periodic, Threshold>;

  TimeSet() : rep_(Never{}) {}
  TimeSet(Rep rep) : rep_(std::move(rep)) {}  // NOLINT: implicit by design of the variant

  static TimeSet always() { return TimeSet(Always{}); }
  static TimeSet never() { return TimeSet(Never{}); }
  static TimeSet interval(Time lo, Time hi);
  static TimeSet intervals(std::vector<Interval> items);
  static TimeSet periodic(Time offset, Time period, std::vector<Time> residues);
  static TimeSet at_most(Time bound) { return TimeSet(Threshold{Comparison::AtMost, std::move(bound)}); }
  static TimeSet at_least(Time bound) { return TimeSet(Threshold{Comparison::AtLeast, std::move(bound)}); }

  bool contains(const Time& t) const;

  const Rep& rep() const noexcept { return rep_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(rep_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(rep_);
  }

  /// Well-formedness problems of this representation; empty when valid.
  std::vector<std::string> violations() const;

  /// Short human-readable rendering, used in diagnostics.
  std::string describe() const;

  friend bool operator==(const TimeSet&, const TimeSet&) = default;

 private:
  Rep rep_;
};

}  // namespace tgames
