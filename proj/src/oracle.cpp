#include "tgames/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tgames/errors.hpp"
#include "tgames/static_solvers.hpp"

namespace tgames {

VertexSet ExpansionGraph::lift(const VertexSet& s, std::optional<std::uint64_t> layer) const {
  VertexSet out(graph.size());
  for (Vertex v : s.members())
    for (std::uint64_t i = 0; i < layers; ++i)
      if (!layer || *layer == i) out.insert(id(v, i));
  return out;
}

VertexSet ExpansionGraph::project(const VertexSet& s, std::uint64_t layer) const {
  VertexSet out(base_size);
  for (Vertex v = 0; v < base_size; ++v)
    if (s.contains(id(v, layer))) out.insert(v);
  return out;
}

ExpansionGraph build_expansion(const TemporalGame& g, const Time& horizon, ExpansionTail tail,
                               const IterationLimits& limits) {
  const auto n = g.size();
  const auto h = to_u64(horizon);
  if (!h || *h >= limits.expansion_budget || (*h + 1) * n > limits.expansion_budget)
    throw BudgetExceeded("expansion budget " + std::to_string(limits.expansion_budget),
                         "(" + horizon.str() + " + 1) layers of " + std::to_string(n) + " vertices");
  if (tail.mode == ExpansionTail::Mode::Fold && (tail.period == 0 || tail.period > *h + 1))
    throw Error("fold period must lie in [1, H + 1]");

  ExpansionGraph x;
  x.base_size = n;
  x.layers = *h + 1;
  for (std::uint64_t i = 0; i <= *h; ++i)
    for (Vertex v = 0; v < n; ++v) x.graph.add_vertex(g.owner(v), g.colour_or_zero(v));
  for (std::uint64_t i = 0; i <= *h; ++i) {
    const bool last = i == *h;
    if (last && tail.mode == ExpansionTail::Mode::Idle) {
      for (Vertex v = 0; v < n; ++v) x.graph.add_edge(x.id(v, i), x.id(v, i));
      continue;
    }
    if (last && tail.mode == ExpansionTail::Mode::None) continue;
    const auto next = last ? i + 1 - tail.period : i + 1;
    for (Vertex v = 0; v < n; ++v)
      for (const auto& e : g.out_edges(v))
        if (e.avail.contains(Time(i))) x.graph.add_edge(x.id(v, i), x.id(e.to, next));
  }
  return x;
}

VertexSet oracle_punctual_minimax(const TemporalGame& g, const VertexSet& targets, std::uint64_t t) {
  std::map<std::pair<Vertex, std::uint64_t>, bool> memo;
  std::function<bool(Vertex, std::uint64_t)> wins = [&](Vertex v, std::uint64_t now) -> bool {
    if (now == t) return targets.contains(v);
    const auto key = std::make_pair(v, now);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const bool p1 = g.owner(v) == Player::One;
    bool result = !p1;  // no move: the mover loses
    for (Vertex w : successors(g, v, Time(now))) {
      const bool r = wins(w, now + 1);
      if (p1 && r) {
        result = true;
        break;
      }
      if (!p1 && !r) {
        result = false;
        break;
      }
    }
    memo[key] = result;
    return result;
  };
  VertexSet out(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    if (wins(v, 0)) out.insert(v);
  return out;
}

VertexSet oracle_reach_fixpoint(const StaticGameGraph& g, Player player, const VertexSet& target) {
  VertexSet s = target;
  while (true) {
    VertexSet next = s | pre(g, player, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

VertexSet oracle_parity_enumeration(const StaticGameGraph& g, std::uint64_t max_pairs) {
  const auto n = g.size();
  std::uint64_t pairs = 1;
  for (Vertex v = 0; v < n; ++v) {
    pairs *= std::max<std::size_t>(1, g.successors(v).size());
    if (pairs > max_pairs) throw CapExceeded("too many strategy pairs to enumerate");
  }

  // choice[v] indexes successors(v); a strategy profile is a mixed-radix counter
  std::vector<std::size_t> choice(n, 0);
  auto advance = [&](Player p) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.owner(v) != p || g.successors(v).empty()) continue;
      if (++choice[v] < g.successors(v).size()) return true;
      choice[v] = 0;
    }
    return false;
  };
  auto player1_wins_from = [&](Vertex start) {
    std::vector<int> seen_at(n, -1);
    std::vector<Vertex> path;
    Vertex v = start;
    while (seen_at[v] < 0) {
      seen_at[v] = static_cast<int>(path.size());
      path.push_back(v);
      if (g.successors(v).empty()) return g.owner(v) == Player::Two;
      v = g.successors(v)[choice[v]];
    }
    Colour top = 0;
    for (std::size_t i = seen_at[v]; i < path.size(); ++i) top = std::max(top, g.colour(path[i]));
    return parity_winner(top) == Player::One;
  };

  VertexSet region(n);
  do {
    std::vector<char> holds(n, 1);
    std::size_t alive = n;
    for (Vertex v = 0; v < n; ++v)
      if (g.owner(v) == Player::Two) choice[v] = 0;
    do {
      for (Vertex v = 0; v < n; ++v)
        if (holds[v] && !player1_wins_from(v)) {
          holds[v] = 0;
          --alive;
        }
    } while (alive > 0 && advance(Player::Two));
    for (Vertex v = 0; v < n; ++v)
      if (holds[v]) region.insert(v);
  } while (region.count() < n && advance(Player::One));
  return region;
}

OracleResult oracle_solve(const TemporalGame& g, const IterationLimits& limits) {
  const auto n = g.size();
  OracleResult r;

  struct Shape {
    Time horizon;
    ExpansionTail tail;
  };
  auto cyclic_shape = [&]() -> Shape {
    if (std::holds_alternative<StaticClass>(g.class_hint())) return {0, ExpansionTail::fold(1)};
    if (const auto* p = std::get_if<PeriodicClass>(&g.class_hint())) {
      const auto k = to_u64(p->period);
      if (!k || *k > limits.expansion_budget) throw BudgetExceeded("expansion budget", "period " + p->period.str());
      return {p->period - 1, ExpansionTail::fold(*k)};
    }
    if (const auto* up = std::get_if<UltimatelyPeriodicClass>(&g.class_hint())) {
      const auto k = to_u64(up->period);
      if (!k || *k > limits.expansion_budget) throw BudgetExceeded("expansion budget", "period " + up->period.str());
      return {up->prefix + up->period - 1, ExpansionTail::fold(*k)};
    }
    throw UnsupportedInstance("no cyclic expansion for a finite-horizon game with this objective");
  };

  std::visit(
      [&](const auto& obj) {
        using O = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<O, PunctualObjective>) {
          const auto x = build_expansion(g, obj.target_time, ExpansionTail::idle(), limits);
          const auto last = x.layers - 1;
          const auto won = attractor(x.graph, Player::One, x.lift(g.targets(), last)).region1;
          r.region = x.project(won, 0);
        } else if constexpr (std::is_same_v<O, ReachObjective>) {
          Shape shape;
          if (const auto* fh = std::get_if<FiniteHorizonClass>(&g.class_hint()))
            shape = {fh->horizon + 1, ExpansionTail::idle()};
          else
            shape = cyclic_shape();
          const auto x = build_expansion(g, shape.horizon, shape.tail, limits);
          const auto won = attractor(x.graph, Player::One, x.lift(g.targets())).region1;
          r.region = x.project(won, 0);
        } else {
          const Shape shape = cyclic_shape();
          const auto x = build_expansion(g, shape.horizon, shape.tail, limits);
          r.region = x.project(solve_parity_allowing_deadlocks(x.graph).region1, 0);
        }
      },
      g.objective());
  if (r.region.universe() != n) r.region = VertexSet(n);
  r.winner = r.region.contains(g.initial()) ? Player::One : Player::Two;
  return r;
}

OutcomeSet oracle_play_tree_summary(const TemporalGame& g, const PeriodicStrategy& sigma, Vertex s) {
  const auto k = sigma.period();
  std::vector<Outcome> found;
  std::function<void(Vertex, std::uint64_t, Colour)> walk = [&](Vertex v, std::uint64_t t, Colour c) {
    if (t == k) {
      found.push_back({v, c});
      return;
    }
    const auto avail = successors(g, v, Time(t));
    if (g.owner(v) == Player::Two) {
      for (Vertex w : avail) walk(w, t + 1, std::max(c, g.colour_or_zero(w)));
      return;
    }
    const Vertex w = sigma.move(v, t);
    if (w == kNoMove && avail.empty()) return;
    if (std::find(avail.begin(), avail.end(), w) == avail.end())
      throw StrategyUnavailableMove("strategy move unavailable at " + vertex_label(g, v));
    walk(w, t + 1, std::max(c, g.colour_or_zero(w)));
  };
  walk(s, 0, g.colour_or_zero(s));
  return make_outcome_set(std::move(found));
}

std::set<OutcomeSet> oracle_enumerate_summaries(const TemporalGame& g, Vertex s, const SummaryCaps& caps) {
  const auto k = game_period(g);
  if (g.size() > caps.max_vertices || k > caps.max_period)
    throw CapExceeded("summary enumeration is capped at " + std::to_string(caps.max_vertices) +
                      " vertices and period " + std::to_string(caps.max_period));

  using State = std::pair<Vertex, Colour>;  // vertex, maximal colour so far
  std::set<OutcomeSet> out;
  std::function<void(std::uint64_t, const std::set<State>&)> expand = [&](std::uint64_t t,
                                                                          const std::set<State>& states) {
    if (t == k) {
      std::vector<Outcome> o;
      for (const auto& [v, c] : states) o.push_back({v, c});
      out.insert(make_outcome_set(std::move(o)));
      return;
    }
    std::set<State> forced;
    std::vector<State> decisions;
    std::vector<std::vector<Vertex>> options;
    for (const auto& [v, c] : states) {
      auto avail = successors(g, v, Time(t));
      if (g.owner(v) == Player::Two) {
        for (Vertex w : avail) forced.insert({w, std::max(c, g.colour_or_zero(w))});
      } else if (!avail.empty()) {
        decisions.push_back({v, c});
        options.push_back(std::move(avail));
      }
    }
    std::vector<std::size_t> pick(decisions.size(), 0);
    while (true) {
      std::set<State> next = forced;
      for (std::size_t i = 0; i < decisions.size(); ++i) {
        const Vertex w = options[i][pick[i]];
        next.insert({w, std::max(decisions[i].second, g.colour_or_zero(w))});
      }
      expand(t + 1, next);
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < options[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  };
  expand(0, {{s, g.colour_or_zero(s)}});
  return out;
}

bool oracle_cycle_condition(const Certificate& cert, Vertex s0) {
  std::set<Vertex> reachable{s0};
  std::vector<Vertex> stack{s0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& e : cert.edges)
      if (e.from == v && reachable.insert(e.to).second) stack.push_back(e.to);
  }

  // each simple cycle is enumerated from its least vertex
  bool ok = true;
  std::set<Vertex> on_path;
  std::function<void(Vertex, Vertex, Colour)> extend = [&](Vertex start, Vertex v, Colour top) {
    for (const auto& e : cert.edges) {
      if (!ok) return;
      if (e.from != v || e.to < start) continue;
      const Colour c = std::max(top, e.colour);
      if (e.to == start) {
        ok = c % 2 == 0;
      } else if (!on_path.count(e.to)) {
        on_path.insert(e.to);
        extend(start, e.to, c);
        on_path.erase(e.to);
      }
    }
  };
  for (Vertex start : reachable) {
    on_path = {start};
    extend(start, start, 0);
    if (!ok) return false;
  }
  return true;
}

}  // namespace tgames
