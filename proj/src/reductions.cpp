#include "tgames/reductions.hpp"

#include "tgames/errors.hpp"
#include "tgames/validate.hpp"

namespace tgames {

namespace {

std::string fresh_name(const TemporalGame& g, std::string base) {
  while (g.find(base)) base += "'";
  return base;
}

void require_static(const TemporalGame& g) {
  if (!is_static(g)) throw UnsupportedInstance("reduction input must be a static game");
}

const PunctualObjective& punctual_objective(const TemporalGame& g) {
  const auto* p = std::get_if<PunctualObjective>(&g.objective());
  if (!p) throw UnsupportedInstance("reduction input must have a punctual objective");
  return *p;
}

/// Copies the vertices of g (same ids); edges are left to the caller.
ReductionOutput copy_vertices(const TemporalGame& g) {
  ReductionOutput out;
  for (Vertex v = 0; v < g.size(); ++v) out.vertex_map.push_back(out.game.add_vertex(g.name(v), g.owner(v), g.colour(v)));
  out.game.set_initial(g.initial());
  return out;
}

void require_sink(const TemporalGame& g, Vertex v) {
  for (const auto& e : g.out_edges(v))
    if (!e.avail.is<TimeSet::Never>())
      throw TargetHasOutEdges("target " + vertex_label(g, v) + " has an outgoing edge to " + vertex_label(g, e.to));
}

TimeSet at_most_or_never(const Time& bound) { return bound < 0 ? TimeSet::never() : TimeSet::at_most(bound); }

/// Original edge availability scaled to a window: Never stays Never.
TimeSet restrict(const TimeSet& original, TimeSet window) {
  return original.is<TimeSet::Never>() ? TimeSet::never() : std::move(window);
}

}  // namespace

ReductionOutput reduce_exists_to_punctual(const TemporalGame& g) {
  require_static(g);
  const auto* reach = std::get_if<ReachObjective>(&g.objective());
  if (!reach) throw UnsupportedInstance("reduction input must have a reachability objective");
  ReductionOutput out = copy_vertices(g);
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v)) out.game.set_edge(v, e.to, e.avail);
  const Vertex start = out.game.add_vertex(fresh_name(g, g.name(g.initial()) + "'"), Player::One);
  out.game.set_edge(start, start, TimeSet::always());
  out.game.set_edge(start, g.initial(), TimeSet::always());
  const Time horizon = pow2(static_cast<unsigned>(g.size()));
  out.game.set_objective(PunctualObjective{reach->targets, horizon});
  out.game.set_initial(start);
  out.game.set_class_hint(StaticClass{});
  out.claim = "Player 1 wins from " + out.game.name(start) + " at target time " + horizon.str() +
              " iff some target time is won from " + g.name(g.initial()) + " in the input";
  return out;
}

ReductionOutput reduce_punctual_to_temporal(const TemporalGame& g) {
  require_static(g);
  const auto& obj = punctual_objective(g);
  const Time& t = obj.target_time;
  const VertexSet f = g.targets();
  ReductionOutput out = copy_vertices(g);
  const Vertex u = out.game.add_vertex(fresh_name(g, "u"), Player::One);
  for (Vertex v = 0; v < g.size(); ++v) {
    // from F the original moves close at T - 1 so that u is the only move at T
    const TimeSet window = f.contains(v) ? (t == 0 ? TimeSet::never() : TimeSet::interval(0, t - 1))
                                         : TimeSet::interval(0, t);
    for (const auto& e : g.out_edges(v)) out.game.set_edge(v, e.to, restrict(e.avail, window));
    if (f.contains(v)) out.game.set_edge(v, u, TimeSet::interval(t, t));
  }
  out.game.set_objective(ReachObjective{{u}});
  out.game.set_class_hint(FiniteHorizonClass{t});
  out.claim = "Player 1 reaches " + out.game.name(u) + " iff she is in F at exactly time " + t.str();
  return out;
}

ReductionOutput reduce_punctual_to_decreasing(const TemporalGame& g, Vertex v, const Time& t) {
  require_static(g);
  require_sink(g, v);
  ReductionOutput out = copy_vertices(g);
  auto& h = out.game;
  h.set_owner(v, Player::Two);
  const Vertex w = h.add_vertex(fresh_name(g, "w"), Player::One);
  const Vertex top = h.add_vertex(fresh_name(g, "top"), Player::Two);
  const Vertex bot = h.add_vertex(fresh_name(g, "bottom"), Player::Two);
  const Time last = t + 1;
  for (Vertex x = 0; x < g.size(); ++x)
    for (const auto& e : g.out_edges(x)) h.set_edge(x, e.to, restrict(e.avail, TimeSet::at_most(last)));
  h.set_edge(v, bot, at_most_or_never(t - 1));
  h.set_edge(v, w, TimeSet::at_most(last));
  h.set_edge(w, top, TimeSet::at_most(last));
  h.set_edge(top, top, TimeSet::at_most(last));
  h.set_edge(bot, bot, TimeSet::at_most(last));
  h.set_objective(ReachObjective{{top}});
  h.set_class_hint(FiniteHorizonClass{last});
  out.claim = "Player 1 reaches " + h.name(top) + " iff she reaches " + g.name(v) + " at exactly time " + t.str();
  return out;
}

ReductionOutput reduce_punctual_to_increasing(const TemporalGame& g, Vertex v, const Time& t) {
  require_static(g);
  require_sink(g, v);
  ReductionOutput out = copy_vertices(g);
  auto& h = out.game;
  h.set_owner(v, Player::One);
  const Vertex w = h.add_vertex(fresh_name(g, "w"), Player::Two);
  const Vertex top = h.add_vertex(fresh_name(g, "top"), Player::One);
  const Vertex bot = h.add_vertex(fresh_name(g, "bottom"), Player::One);
  for (Vertex x = 0; x < g.size(); ++x)
    for (const auto& e : g.out_edges(x)) h.set_edge(x, e.to, e.avail);
  h.set_edge(v, w, TimeSet::at_least(t));
  h.set_edge(v, bot, TimeSet::always());
  h.set_edge(w, top, TimeSet::always());
  h.set_edge(w, bot, TimeSet::at_least(t + 2));
  h.set_edge(top, top, TimeSet::always());
  h.set_edge(bot, bot, TimeSet::always());
  h.set_objective(ReachObjective{{top}});
  h.set_class_hint(UltimatelyPeriodicClass{t + 2, 1});
  out.claim = "Player 1 reaches " + h.name(top) + " iff she reaches " + g.name(v) + " at exactly time " + t.str();
  return out;
}

ReductionOutput reduce_punctual_to_periodically_declining(const TemporalGame& g, Vertex v, const Time& t) {
  require_static(g);
  if (g.owner(v) != Player::One) throw TargetNotP1("target " + vertex_label(g, v) + " is owned by Player 2");
  require_sink(g, v);
  const Time k = t + 1;
  std::vector<Time> before_t, all, at_t{t};
  for (Time r = 0; r < k; ++r) {
    all.push_back(r);
    if (r < t) before_t.push_back(r);
  }
  auto phases = [&](const std::vector<Time>& rs) {
    if (rs.empty()) return TimeSet::never();
    if (rs.size() == all.size()) return TimeSet::always();
    return TimeSet::periodic(0, k, rs);
  };

  ReductionOutput out = copy_vertices(g);
  auto& h = out.game;
  const Vertex w = h.add_vertex(fresh_name(g, "w"), Player::One);
  const Vertex top = h.add_vertex(fresh_name(g, "top"), Player::One);
  const Vertex bot = h.add_vertex(fresh_name(g, "bottom"), Player::One);
  for (Vertex x = 0; x < g.size(); ++x) {
    if (x == v) continue;
    const bool mine = g.owner(x) == Player::One;
    for (const auto& e : g.out_edges(x)) h.set_edge(x, e.to, restrict(e.avail, mine ? phases(before_t) : TimeSet::always()));
    h.set_edge(x, bot, mine ? TimeSet::always() : phases(at_t));
  }
  h.set_edge(v, w, TimeSet::always());
  h.set_edge(w, bot, TimeSet::always());
  h.set_edge(w, top, phases({Time(0)}));
  h.set_edge(top, top, TimeSet::always());
  h.set_edge(bot, bot, TimeSet::always());
  h.set_objective(ReachObjective{{top}});
  h.set_class_hint(PeriodicClass{k});
  out.claim = "Player 1 reaches " + h.name(top) + " iff she reaches " + g.name(v) + " at exactly time " + t.str();
  return out;
}

ReductionOutput dualize(const TemporalGame& g) {
  const auto& obj = punctual_objective(g);
  ReductionOutput out = copy_vertices(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    out.game.set_owner(v, opponent(g.owner(v)));
    for (const auto& e : g.out_edges(v)) out.game.set_edge(v, e.to, e.avail);
  }
  out.game.set_objective(PunctualObjective{g.targets().complement().members(), obj.target_time});
  out.game.set_class_hint(g.class_hint());
  out.claim = "Player 1 wins the input iff Player 2 wins the output";
  return out;
}

TemporalGame reachability_as_parity(const TemporalGame& g) {
  TemporalGame out = g;
  const VertexSet f = g.targets();
  for (Vertex v = 0; v < g.size(); ++v) {
    if (f.contains(v)) {
      const TimeSet* loop = g.edge(v, v);
      if (!loop || !loop->is<TimeSet::Always>())
        throw UnsupportedInstance("target " + vertex_label(g, v) + " needs an always-available self-loop");
      for (const auto& e : g.out_edges(v))
        if (e.to != v && !e.avail.is<TimeSet::Never>())
          throw TargetHasOutEdges("target " + vertex_label(g, v) + " has an outgoing edge");
    }
    out.set_colour(v, f.contains(v) ? 2 : 1);
  }
  out.set_objective(ParityObjective{});
  return out;
}

}  // namespace tgames
