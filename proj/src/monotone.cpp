#include "tgames/monotone.hpp"

#include <algorithm>
#include <functional>

#include "tgames/errors.hpp"
#include "tgames/static_solvers.hpp"
#include "tgames/validate.hpp"

namespace tgames {

namespace {

enum Direction : unsigned { kDecreasing = 1, kIncreasing = 2, kBoth = 3 };

unsigned direction(const TimeSet& ts) {
  if (ts.is<TimeSet::Always>() || ts.is<TimeSet::Never>()) return kBoth;
  if (ts.is<TimeSet::Threshold>())
    return ts.as<TimeSet::Threshold>().op == TimeSet::Comparison::AtMost ? kDecreasing : kIncreasing;
  return 0;
}

/// Residues in [0, K) at which ts holds, or nullopt if ts is not K-periodic
/// from time 0.
std::optional<std::vector<char>> residues_mod(const TimeSet& ts, std::uint64_t k) {
  if (ts.is<TimeSet::Always>()) return std::vector<char>(k, 1);
  if (ts.is<TimeSet::Never>()) return std::vector<char>(k, 0);
  if (!ts.is<TimeSet::Periodic>()) return std::nullopt;
  const auto& p = ts.as<TimeSet::Periodic>();
  if (p.offset != 0 || p.period <= 0 || Time(k) % p.period != 0) return std::nullopt;
  std::vector<char> out(k, 0);
  for (std::uint64_t r = 0; r < k; ++r) out[r] = ts.contains(Time(r));
  return out;
}

/// Direction of availability within one period: a prefix of the phases is
/// decreasing, a suffix increasing.
unsigned periodic_direction(const std::vector<char>& on) {
  const auto first_off = std::find(on.begin(), on.end(), 0);
  const bool prefix = std::find(first_off, on.end(), 1) == on.end();
  const auto first_on = std::find(on.begin(), on.end(), 1);
  const bool suffix = std::find(first_on, on.end(), 0) == on.end();
  return (prefix ? kDecreasing : 0u) | (suffix ? kIncreasing : 0u);
}

/// Intersection of edge directions per owner.
struct OwnerDirections {
  unsigned p1 = kBoth;
  unsigned p2 = kBoth;
  bool all_known = true;
};

OwnerDirections collect(const TemporalGame& g, const std::function<std::optional<unsigned>(const TimeSet&)>& dir) {
  OwnerDirections d;
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v)) {
      const auto x = dir(e.avail);
      if (!x) {
        d.all_known = false;
        return d;
      }
      (g.owner(v) == Player::One ? d.p1 : d.p2) &= *x;
    }
  return d;
}

OwnerDirections threshold_directions(const TemporalGame& g) {
  return collect(g, [](const TimeSet& ts) -> std::optional<unsigned> {
    const auto d = direction(ts);
    if (d == 0) return std::nullopt;
    return d;
  });
}

void require_walkable(const TemporalGame& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v))
      if (direction(e.avail) == 0)
        throw NonMonotoneInstance("edge " + vertex_label(g, v) + "->" + vertex_label(g, e.to) + " is " +
                                  e.avail.describe());
}

bool same_edges(const TemporalGame& g, const Time& a, const Time& b) {
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v))
      if (e.avail.contains(a) != e.avail.contains(b)) return false;
  return true;
}

/// The accelerated backward walk. `x` holds the region at time `s`; `step`
/// maps the region at time t + 1 to the region at time t. The region may
/// only grow as time decreases, which is asserted at every step. A step that
/// leaves the region unchanged is repeated implicitly over the rest of the
/// constant-availability segment.
VertexSet accelerated_walk(const TemporalGame& g, VertexSet x, const Time& s,
                           const std::function<VertexSet(const VertexSet&, const Time&)>& step,
                           const IterationLimits& limits, RunStats* stats) {
  const auto boundaries = availability_boundaries(g);
  std::uint64_t steps = 0;
  Time n = s;
  while (n > 0) {
    poll_cancellation(limits, steps);
    const Time t = n - 1;
    VertexSet next = step(x, t);
    ++steps;
    if (!x.is_subset_of(next))
      throw InvariantViolation("backward step at time " + t.str() + " dropped a vertex from the region");
    if (next != x) {
      x = std::move(next);
      n = t;
      continue;
    }
    // stable: availability is constant on [b, t] for the largest boundary b <= t
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), t);
    const Time b = it == boundaries.begin() ? Time(0) : *std::prev(it);
    if (!same_edges(g, b, t))
      throw InvariantViolation("availability changes inside [" + b.str() + ", " + t.str() + "]");
    n = b;
  }
  const auto bound = g.size() + boundaries.size();
  if (steps > bound)
    throw InvariantViolation("backward walk took " + std::to_string(steps) + " steps, above |V| + |B| = " +
                             std::to_string(bound));
  if (stats) stats->backward_steps += steps;
  return x;
}

VertexSet static_reach_region(const StaticGameGraph& gs, Player p, const VertexSet& targets) {
  return attractor(gs, p, targets).region(p);
}

StaticGameGraph coloured_snapshot(const TemporalGame& g, const Time& t) {
  StaticGameGraph gs = snapshot(g, t);
  if (!gs.has_colours())
    for (Vertex v = 0; v < g.size(); ++v) gs.set_colour(v, g.colour_or_zero(v));
  return gs;
}

}  // namespace

std::string MonotoneClass::to_string() const {
  const auto k = period ? "(" + period->str() + ")" : std::string();
  switch (kind) {
    case Kind::Declining: return "declining";
    case Kind::Improving: return "improving";
    case Kind::Decreasing: return "decreasing";
    case Kind::Increasing: return "increasing";
    case Kind::PeriodicallyDeclining: return "periodically-declining" + k;
    case Kind::PeriodicallyImproving: return "periodically-improving" + k;
    case Kind::None: break;
  }
  return "none";
}

MonotoneClass classify_monotonicity(const TemporalGame& g) {
  using K = MonotoneClass::Kind;
  const auto d = threshold_directions(g);
  if (d.all_known) {
    if ((d.p1 & kDecreasing) && (d.p2 & kIncreasing)) return {K::Declining, {}};
    if ((d.p1 & kIncreasing) && (d.p2 & kDecreasing)) return {K::Improving, {}};
    if ((d.p1 & d.p2) & kDecreasing) return {K::Decreasing, {}};
    if ((d.p1 & d.p2) & kIncreasing) return {K::Increasing, {}};
  }
  if (const auto* hint = std::get_if<PeriodicClass>(&g.class_hint())) {
    const auto k = to_u64(hint->period);
    if (k && *k > 0 && *k <= kDefaultExpansionBudget) {
      const auto p = collect(g, [&](const TimeSet& ts) -> std::optional<unsigned> {
        auto on = residues_mod(ts, *k);
        if (!on) return std::nullopt;
        return periodic_direction(*on);
      });
      if (p.all_known) {
        if ((p.p1 & kDecreasing) && (p.p2 & kIncreasing)) return {K::PeriodicallyDeclining, hint->period};
        if ((p.p1 & kIncreasing) && (p.p2 & kDecreasing)) return {K::PeriodicallyImproving, hint->period};
      }
    }
  }
  return {K::None, {}};
}

bool is_declining(const TemporalGame& g) {
  const auto d = threshold_directions(g);
  return d.all_known && (d.p1 & kDecreasing) && (d.p2 & kIncreasing);
}

bool is_improving(const TemporalGame& g) {
  const auto d = threshold_directions(g);
  return d.all_known && (d.p1 & kIncreasing) && (d.p2 & kDecreasing);
}

StaticGameGraph stabilized_graph(const TemporalGame& g, const Time& m) { return snapshot(g, m); }

VertexSet solve_declining_reachability(const TemporalGame& g, const IterationLimits& limits, RunStats* stats) {
  if (!is_declining(g)) throw NotDeclining("game is not declining: " + classify_monotonicity(g).to_string());
  const VertexSet f = g.targets();
  const Time s = stabilisation_time(g);
  VertexSet w = static_reach_region(stabilized_graph(g, s), Player::One, f);
  return accelerated_walk(
      g, std::move(w), s, [&](const VertexSet& x, const Time& t) { return f | pre(g, Player::One, x, t); },
      limits, stats);
}

VertexSet solve_improving_reachability(const TemporalGame& g, const IterationLimits& limits, RunStats* stats) {
  if (!is_improving(g)) throw NotImproving("game is not improving: " + classify_monotonicity(g).to_string());
  const VertexSet f = g.targets();
  const Time s = stabilisation_time(g);
  VertexSet x = static_reach_region(stabilized_graph(g, s), Player::One, f).complement();
  x = accelerated_walk(
      g, std::move(x), s, [&](const VertexSet& y, const Time& t) { return pre(g, Player::Two, y, t) - f; },
      limits, stats);
  return x.complement();
}

VertexSet solve_declining_parity(const TemporalGame& g, const IterationLimits& limits, RunStats* stats) {
  const bool declining = is_declining(g);
  if (!declining && !is_improving(g))
    throw NotDeclining("game is neither declining nor improving: " + classify_monotonicity(g).to_string());
  const Time s = stabilisation_time(g);
  const SolveResult tail = solve_parity_allowing_deadlocks(coloured_snapshot(g, s));
  const Player p = declining ? Player::One : Player::Two;
  VertexSet x = tail.region(p);
  x = accelerated_walk(
      g, std::move(x), s, [&](const VertexSet& y, const Time& t) { return pre(g, p, y, t); }, limits, stats);
  return declining ? x : x.complement();
}

VertexSet solve_ultimately_static(const TemporalGame& g, const IterationLimits& limits, RunStats* stats) {
  require_walkable(g);
  const Time s = stabilisation_time(g);
  const auto steps = checked_iterations(s, limits, "stabilisation time");
  const bool parity = std::holds_alternative<ParityObjective>(g.objective());
  const VertexSet f = g.targets();
  VertexSet w = parity ? solve_parity_allowing_deadlocks(coloured_snapshot(g, s)).region1
                       : static_reach_region(stabilized_graph(g, s), Player::One, f);
  for (std::uint64_t t = steps; t-- > 0;) {
    poll_cancellation(limits, t);
    w = pre(g, Player::One, w, Time(t));
    if (!parity) w |= f;
  }
  if (stats) stats->iterations += steps;
  return w;
}

}  // namespace tgames
