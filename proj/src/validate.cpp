#include "tgames/validate.hpp"

#include <algorithm>
#include <set>

#include "tgames/errors.hpp"

namespace tgames {

namespace {

Time floor_mod(const Time& a, const Time& m) {
  Time r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string edge_subject(const TemporalGame& g, Vertex from, Vertex to) {
  return "edge " + vertex_label(g, from) + "->" + vertex_label(g, to);
}

std::optional<std::string> class_violation(const TimeSet& ts, const ClassHint& hint) {
  if (std::holds_alternative<StaticClass>(hint)) {
    if (!ts.is<TimeSet::Always>() && !ts.is<TimeSet::Never>())
      return "static class admits only always/never availability, found " + ts.describe();
    return std::nullopt;
  }
  if (const auto* f = std::get_if<FiniteHorizonClass>(&hint)) {
    const Time& h = f->horizon;
    if (ts.is<TimeSet::Always>() || ts.is<TimeSet::Periodic>())
      return "finite horizon " + h.str() + " violated by unbounded availability " + ts.describe();
    if (ts.is<TimeSet::Threshold>()) {
      const auto& th = ts.as<TimeSet::Threshold>();
      if (th.op == TimeSet::Comparison::AtLeast)
        return "finite horizon " + h.str() + " violated by unbounded availability " + ts.describe();
      if (th.bound > h) return "available after horizon " + h.str() + " (" + ts.describe() + ")";
    }
    if (ts.is<TimeSet::Intervals>()) {
      const auto& items = ts.as<TimeSet::Intervals>().items;
      if (!items.empty() && items.back().hi > h)
        return "available after horizon " + h.str() + " (" + ts.describe() + ")";
    }
    return std::nullopt;
  }
  if (const auto* p = std::get_if<PeriodicClass>(&hint)) {
    if (ts.is<TimeSet::Always>() || ts.is<TimeSet::Never>()) return std::nullopt;
    if (!ts.is<TimeSet::Periodic>())
      return "period " + p->period.str() + " requires always/never/periodic availability, found " +
             ts.describe();
    const auto& per = ts.as<TimeSet::Periodic>();
    if (per.offset != 0) return "periodic availability must have offset 0 under period " + p->period.str();
    if (per.period <= 0 || p->period % per.period != 0)
      return "availability period " + per.period.str() + " does not divide " + p->period.str();
    return std::nullopt;
  }
  const auto& up = std::get<UltimatelyPeriodicClass>(hint);
  if (!is_periodic_from(ts, up.prefix, up.period))
    return "availability " + ts.describe() + " is not periodic with period " + up.period.str() +
           " from time " + up.prefix.str();
  return std::nullopt;
}

/// Window [0, end) in which deadlocks are reported.
Time deadlock_window_end(const ClassHint& hint) {
  if (std::holds_alternative<StaticClass>(hint)) return 1;
  if (const auto* f = std::get_if<FiniteHorizonClass>(&hint)) return f->horizon + 1;
  if (const auto* p = std::get_if<PeriodicClass>(&hint)) return p->period;
  const auto& up = std::get<UltimatelyPeriodicClass>(hint);
  return up.prefix + up.period;
}

void add_breakpoints(const TimeSet& ts, std::set<Time>& out) {
  if (ts.is<TimeSet::Intervals>()) {
    for (const auto& iv : ts.as<TimeSet::Intervals>().items) {
      out.insert(iv.lo);
      out.insert(iv.hi + 1);
    }
  } else if (ts.is<TimeSet::Threshold>()) {
    const auto& th = ts.as<TimeSet::Threshold>();
    out.insert(th.bound);
    out.insert(th.bound + 1);
  } else if (ts.is<TimeSet::Periodic>()) {
    const auto& p = ts.as<TimeSet::Periodic>();
    out.insert(p.offset);
    for (const auto& r : p.residues) {
      out.insert(p.offset + r);
      out.insert(p.offset + r + 1);
    }
  }
}

}  // namespace

bool is_periodic_from(const TimeSet& ts, const Time& start, const Time& period) {
  if (period <= 0) return false;
  if (ts.is<TimeSet::Always>() || ts.is<TimeSet::Never>()) return true;
  if (ts.is<TimeSet::Intervals>()) {
    const auto& items = ts.as<TimeSet::Intervals>().items;
    return items.empty() || items.back().hi < start;
  }
  if (ts.is<TimeSet::Threshold>()) {
    const auto& th = ts.as<TimeSet::Threshold>();
    return th.op == TimeSet::Comparison::AtMost ? th.bound < start : th.bound <= start;
  }
  const auto& p = ts.as<TimeSet::Periodic>();
  if (p.period <= 0) return false;
  auto has_residue = [&](const Time& r) {
    return std::find(p.residues.begin(), p.residues.end(), r) != p.residues.end();
  };
  for (const auto& r : p.residues)
    if (!has_residue(floor_mod(r + period, p.period))) return false;
  if (start < p.offset) {
    // t in [start, offset) is outside the set, so t + period must be too.
    const Time lo = std::max<Time>(start + period, p.offset);
    const Time hi = p.offset + period;  // exclusive
    for (const auto& r : p.residues) {
      const Time first = lo + floor_mod(r - (lo - p.offset), p.period);
      if (first < hi) return false;
    }
  }
  return true;
}

std::vector<Violation> validate(const TemporalGame& g) {
  std::vector<Violation> out;
  if (g.size() == 0) {
    out.push_back({"game", "has no vertices"});
    return out;
  }
  if (g.initial() >= g.size()) out.push_back({"initial", "not a vertex"});

  const auto& hint = g.class_hint();
  if (const auto* p = std::get_if<PeriodicClass>(&hint); p && p->period <= 0)
    out.push_back({"class", "period must be positive"});
  if (const auto* u = std::get_if<UltimatelyPeriodicClass>(&hint); u && u->period <= 0)
    out.push_back({"class", "period must be positive"});
  if (const auto* f = std::get_if<FiniteHorizonClass>(&hint); f && f->horizon < 0)
    out.push_back({"class", "horizon must be non-negative"});

  for (Vertex v = 0; v < g.size(); ++v) {
    for (const auto& e : g.out_edges(v)) {
      const auto subject = edge_subject(g, v, e.to);
      const auto problems = e.avail.violations();
      for (const auto& p : problems) out.push_back({subject, p});
      if (problems.empty())
        if (auto cv = class_violation(e.avail, hint)) out.push_back({subject, *cv});
    }
  }

  if (std::holds_alternative<ParityObjective>(g.objective())) {
    for (Vertex v = 0; v < g.size(); ++v)
      if (!g.colour(v)) out.push_back({"vertex " + vertex_label(g, v), "parity objective needs a colour"});
  }
  if (const auto* p = std::get_if<PunctualObjective>(&g.objective()); p && p->target_time < 0)
    out.push_back({"objective", "negative target time"});
  return out;
}

std::string DeadlockWarning::to_string(const TemporalGame& g) const {
  return "vertex " + vertex_label(g, vertex) + " has no available successor at time " +
         earliest_dead_time.str();
}

std::vector<DeadlockWarning> deadlock_warnings(const TemporalGame& g) {
  constexpr unsigned kScanLimit = 100000;
  std::vector<DeadlockWarning> out;
  const Time end = deadlock_window_end(g.class_hint());
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto edges = g.out_edges(v);
    auto dead_at = [&](const Time& t) {
      return std::none_of(edges.begin(), edges.end(), [&](const auto& e) { return e.avail.contains(t); });
    };
    std::optional<Time> found;
    if (end <= kScanLimit) {
      for (Time t = 0; t < end; ++t)
        if (dead_at(t)) {
          found = t;
          break;
        }
    } else {
      std::set<Time> candidates{0};
      for (const auto& e : edges) add_breakpoints(e.avail, candidates);
      for (Time t = 0; t < kScanLimit; ++t) candidates.insert(t);
      for (const auto& t : candidates) {
        if (t >= end) break;
        if (dead_at(t)) {
          found = t;
          break;
        }
      }
    }
    if (found) out.push_back({v, *found});
  }
  return out;
}

std::vector<Time> change_points(const TemporalGame& g) {
  std::set<Time> points;
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v)) {
      if (e.avail.is<TimeSet::Threshold>())
        points.insert(e.avail.as<TimeSet::Threshold>().bound);
      else if (!e.avail.is<TimeSet::Always>() && !e.avail.is<TimeSet::Never>())
        throw NonMonotoneInstance("edge " + vertex_label(g, v) + "->" + vertex_label(g, e.to) +
                                  " has non-threshold availability " + e.avail.describe());
    }
  return {points.begin(), points.end()};
}

std::vector<Time> availability_boundaries(const TemporalGame& g) {
  change_points(g);  // rejects non-monotone instances
  std::set<Time> out;
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v))
      if (e.avail.is<TimeSet::Threshold>()) {
        const auto& th = e.avail.as<TimeSet::Threshold>();
        Time b = th.op == TimeSet::Comparison::AtMost ? th.bound + 1 : th.bound;
        if (b > 0) out.insert(std::move(b));
      }
  return {out.begin(), out.end()};
}

Time stabilisation_time(const TemporalGame& g) {
  const auto b = availability_boundaries(g);
  return b.empty() ? Time(0) : b.back();
}

}  // namespace tgames
