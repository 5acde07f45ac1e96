#include "tgames/punctual.hpp"

#include <unordered_map>

#include "tgames/errors.hpp"
#include "tgames/static_solvers.hpp"

namespace tgames {

std::uint64_t checked_iterations(const Time& steps, const IterationLimits& limits, const char* what) {
  const auto n = to_u64(steps);
  if (!n || *n > limits.budget)
    throw BudgetExceeded("iteration budget " + std::to_string(limits.budget),
                         std::string(what) + " needs " + steps.str() + " iterations");
  return *n;
}

void poll_cancellation(const IterationLimits& limits, std::uint64_t iteration) {
  if ((iteration & 0xFFFFu) == 0 && limits.cancelled && limits.cancelled()) throw Cancelled();
}

VertexSet pre(const StaticGameGraph& g, Player player, const VertexSet& s) {
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto succ = g.successors(v);
    bool in;
    if (g.owner(v) == player) {
      in = false;
      for (Vertex w : succ)
        if (s.contains(w)) {
          in = true;
          break;
        }
    } else {
      in = true;
      for (Vertex w : succ)
        if (!s.contains(w)) {
          in = false;
          break;
        }
    }
    if (in) out.insert(v);
  }
  return out;
}

VertexSet pre(const TemporalGame& g, Player player, const VertexSet& s, const Time& t) {
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const bool existential = g.owner(v) == player;
    bool in = !existential;
    for (const auto& e : g.out_edges(v)) {
      if (!e.avail.contains(t)) continue;
      if (existential && s.contains(e.to)) {
        in = true;
        break;
      }
      if (!existential && !s.contains(e.to)) {
        in = false;
        break;
      }
    }
    if (in) out.insert(v);
  }
  return out;
}

VertexSet solve_punctual(const StaticGameGraph& g, const VertexSet& targets, const Time& target_time,
                         const IterationLimits& limits, RunStats* stats) {
  const auto steps = checked_iterations(target_time, limits, "punctual target time");
  VertexSet b = targets;
  for (std::uint64_t k = 0; k < steps; ++k) {
    poll_cancellation(limits, k);
    b = pre(g, Player::One, b);
  }
  if (stats) stats->iterations += steps;
  return b;
}

std::vector<VertexSet> punctual_layers(const StaticGameGraph& g, const VertexSet& targets,
                                       const Time& target_time, const IterationLimits& limits) {
  const auto steps = checked_iterations(target_time, limits, "punctual target time");
  std::vector<VertexSet> layers{targets};
  layers.reserve(steps + 1);
  for (std::uint64_t k = 0; k < steps; ++k) {
    poll_cancellation(limits, k);
    layers.push_back(pre(g, Player::One, layers.back()));
  }
  return layers;
}

Vertex punctual_witness_move(const StaticGameGraph& g, const std::vector<VertexSet>& layers, Vertex v,
                             std::size_t remaining) {
  if (remaining == 0 || remaining >= layers.size() || !layers[remaining].contains(v)) return kNoMove;
  for (Vertex w : g.successors(v))
    if (layers[remaining - 1].contains(w)) return w;
  return kNoMove;
}

VertexSet solve_punctual_temporal(const TemporalGame& g, const VertexSet& targets, const Time& target_time,
                                  const IterationLimits& limits, RunStats* stats) {
  const auto steps = checked_iterations(target_time, limits, "punctual target time");
  VertexSet w = targets;
  // after n backward steps w is the winning set at time T - n
  for (std::uint64_t n = 1; n <= steps; ++n) {
    poll_cancellation(limits, n);
    w = pre(g, Player::One, w, Time(steps - n));
  }
  if (stats) stats->iterations += steps;
  return w;
}

std::vector<VertexSet> punctual_temporal_layers(const TemporalGame& g, const VertexSet& targets,
                                                std::uint64_t target_time, const IterationLimits& limits) {
  checked_iterations(Time(target_time), limits, "punctual target time");
  std::vector<VertexSet> at_time(target_time + 1);
  at_time[target_time] = targets;
  for (std::uint64_t t = target_time; t-- > 0;) {
    poll_cancellation(limits, t);
    at_time[t] = pre(g, Player::One, at_time[t + 1], Time(t));
  }
  return at_time;
}

const VertexSet& PreSequenceTrace::at(std::uint64_t k) const {
  if (k < sets.size() || !repeat_detected) return sets.at(k);
  const auto offset = (k - first_repeat) % cycle_length;
  return sets[first_repeat + offset];
}

PreSequenceTrace pre_sequence_trace(const StaticGameGraph& g, const VertexSet& targets,
                                    const IterationLimits& limits) {
  PreSequenceTrace trace;
  std::unordered_map<VertexSet, std::size_t> seen;
  VertexSet current = targets;
  for (std::uint64_t k = 0;; ++k) {
    poll_cancellation(limits, k);
    if (k > limits.budget)
      throw BudgetExceeded("iteration budget " + std::to_string(limits.budget),
                           "pre-sequence did not repeat");
    auto [it, fresh] = seen.emplace(current, trace.sets.size());
    if (!fresh) {
      trace.first_repeat = it->second;
      trace.cycle_length = trace.sets.size() - it->second;
      trace.repeat_detected = true;
      return trace;
    }
    trace.sets.push_back(current);
    current = pre(g, Player::One, current);
  }
}

std::optional<std::uint64_t> solve_exists_target_time(const StaticGameGraph& g, const VertexSet& targets,
                                                      Vertex s0, const IterationLimits& limits) {
  const auto trace = pre_sequence_trace(g, targets, limits);
  for (std::size_t k = 0; k < trace.sets.size(); ++k)
    if (trace.sets[k].contains(s0)) return k;
  return std::nullopt;
}

VertexSet solve_temporal_reachability(const TemporalGame& g, const VertexSet& targets,
                                      const IterationLimits& limits, RunStats* stats) {
  const auto* hint = std::get_if<FiniteHorizonClass>(&g.class_hint());
  if (!hint) throw UnsupportedInstance("temporal reachability solver needs a finite-horizon game");
  const auto horizon = checked_iterations(hint->horizon + 1, limits, "finite horizon");
  VertexSet w = targets;  // time h + 1
  for (std::uint64_t t = horizon; t-- > 0;) {
    poll_cancellation(limits, t);
    w = targets | pre(g, Player::One, w, Time(t));
  }
  if (stats) stats->iterations += horizon;
  return w;
}

VertexSet solve_periodic_reachability(const TemporalGame& g, const IterationLimits& limits, RunStats* stats) {
  Time prefix = 0, period = 0;
  if (const auto* up = std::get_if<UltimatelyPeriodicClass>(&g.class_hint())) {
    prefix = up->prefix;
    period = up->period;
  } else if (const auto* p = std::get_if<PeriodicClass>(&g.class_hint())) {
    period = p->period;
  } else {
    throw UnsupportedInstance("periodic reachability needs a periodic class hint");
  }
  const auto k = checked_iterations(period, limits, "period");
  const auto t = checked_iterations(prefix, limits, "periodic prefix");
  const auto n = g.size();
  if (k == 0 || k > limits.expansion_budget / std::max<std::size_t>(n, 1))
    throw BudgetExceeded("expansion budget " + std::to_string(limits.expansion_budget),
                         "period " + std::to_string(k) + " times " + std::to_string(n) + " vertices");

  // (v, i) stands for v at time prefix + i and has id i * n + v
  StaticGameGraph cycle;
  for (std::uint64_t i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v) cycle.add_vertex(g.owner(v));
  for (std::uint64_t i = 0; i < k; ++i) {
    poll_cancellation(limits, i);
    const Time now = prefix + i;
    for (Vertex v = 0; v < n; ++v)
      for (const auto& e : g.out_edges(v))
        if (e.avail.contains(now)) cycle.add_edge(static_cast<Vertex>(i * n + v), static_cast<Vertex>((i + 1) % k * n + e.to));
  }
  const VertexSet f = g.targets();
  VertexSet lifted(n * k);
  for (Vertex v : f.members())
    for (std::uint64_t i = 0; i < k; ++i) lifted.insert(static_cast<Vertex>(i * n + v));
  const VertexSet won = attractor(cycle, Player::One, lifted).region1;
  VertexSet w(n);
  for (Vertex v = 0; v < n; ++v)
    if (won.contains(v)) w.insert(v);
  for (std::uint64_t s = t; s-- > 0;) {
    poll_cancellation(limits, s);
    w = f | pre(g, Player::One, w, Time(s));
  }
  if (stats) {
    stats->iterations += t;
    stats->expansion_vertices += n * k;
  }
  return w;
}

}  // namespace tgames
