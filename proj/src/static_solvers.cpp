#include "tgames/static_solvers.hpp"

#include <algorithm>
#include <deque>

#include "tgames/errors.hpp"

namespace tgames {

namespace {

constexpr std::uint32_t kUnranked = std::numeric_limits<std::uint32_t>::max();

struct Attraction {
  VertexSet set;
  std::vector<std::uint32_t> rank;  // BFS round at which a vertex joined
};

/// Counter-based attractor restricted to the subgame `mask`.
Attraction attract(const StaticGameGraph& g, const VertexSet& mask, Player player,
                   const VertexSet& target) {
  const auto n = g.size();
  Attraction a{VertexSet(n), std::vector<std::uint32_t>(n, kUnranked)};
  std::vector<std::uint32_t> remaining(n, 0);
  std::deque<Vertex> queue;

  for (Vertex v = 0; v < n; ++v) {
    if (!mask.contains(v)) continue;
    for (Vertex w : g.successors(v))
      if (mask.contains(w)) ++remaining[v];
    const bool stuck_opponent = g.owner(v) != player && remaining[v] == 0;
    if (target.contains(v) || stuck_opponent) {
      a.set.insert(v);
      a.rank[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    for (Vertex v : g.predecessors(w)) {
      if (!mask.contains(v) || a.set.contains(v)) continue;
      if (g.owner(v) == player || --remaining[v] == 0) {
        a.set.insert(v);
        a.rank[v] = a.rank[w] + 1;
        queue.push_back(v);
      }
    }
  }
  return a;
}

/// Lowest-id successor of v inside `within`, if any.
Vertex first_successor_in(const StaticGameGraph& g, Vertex v, const VertexSet& within) {
  for (Vertex w : g.successors(v))
    if (within.contains(w)) return w;
  return kNoMove;
}

/// Attractor moves for `player` on a \ target: the lowest-id successor
/// that is strictly closer to the target.
void write_attractor_moves(const StaticGameGraph& g, const VertexSet& mask, Player player,
                           const Attraction& a, const VertexSet& target,
                           PositionalStrategy& strategy) {
  for (Vertex v : a.set.members()) {
    if (g.owner(v) != player || target.contains(v)) continue;
    for (Vertex w : g.successors(v)) {
      if (mask.contains(w) && a.set.contains(w) && a.rank[w] < a.rank[v]) {
        strategy[v] = w;
        break;
      }
    }
  }
}

struct Split {
  VertexSet w1;
  VertexSet w2;
  VertexSet& of(Player p) { return p == Player::One ? w1 : w2; }
};

void zielonka(const StaticGameGraph& g, const VertexSet& mask, Split& out,
              PositionalStrategy& s1, PositionalStrategy& s2) {
  const auto n = g.size();
  out.w1 = VertexSet(n);
  out.w2 = VertexSet(n);
  if (mask.empty()) return;

  const auto members = mask.members();
  Colour top = 0;
  for (Vertex v : members) top = std::max(top, g.colour(v));
  const Player p = parity_winner(top);
  const Player q = opponent(p);
  auto& sp = p == Player::One ? s1 : s2;
  auto& sq = p == Player::One ? s2 : s1;

  VertexSet top_vertices(n);
  for (Vertex v : members)
    if (g.colour(v) == top) top_vertices.insert(v);

  const Attraction a = attract(g, mask, p, top_vertices);
  Split sub;
  zielonka(g, mask - a.set, sub, s1, s2);

  if (sub.of(q).empty()) {
    out.of(p) = mask;
    write_attractor_moves(g, mask, p, a, top_vertices, sp);
    for (Vertex v : top_vertices.members())
      if (g.owner(v) == p) sp[v] = first_successor_in(g, v, mask);
    return;
  }

  const Attraction b = attract(g, mask, q, sub.of(q));
  write_attractor_moves(g, mask, q, b, sub.of(q), sq);
  Split rest;
  zielonka(g, mask - b.set, rest, s1, s2);
  out.of(p) = rest.of(p);
  out.of(q) = rest.of(q) | b.set;
}

}  // namespace

SolveResult attractor(const StaticGameGraph& g, Player player, const VertexSet& target) {
  const auto n = g.size();
  const VertexSet all = VertexSet::full(n);
  const Attraction a = attract(g, all, player, target);

  SolveResult r;
  r.strategy1.assign(n, kNoMove);
  r.strategy2.assign(n, kNoMove);
  auto& own = player == Player::One ? r.strategy1 : r.strategy2;
  auto& other = player == Player::One ? r.strategy2 : r.strategy1;
  write_attractor_moves(g, all, player, a, target, own);
  for (Vertex v : target.members())
    if (g.owner(v) == player && !g.successors(v).empty()) own[v] = g.successors(v).front();

  const VertexSet rest = a.set.complement();
  for (Vertex v : rest.members())
    if (g.owner(v) != player) other[v] = first_successor_in(g, v, rest);

  if (player == Player::One) {
    r.region1 = a.set;
    r.region2 = rest;
  } else {
    r.region2 = a.set;
    r.region1 = rest;
  }
  return r;
}

SolveResult solve_static_parity(const StaticGameGraph& g) {
  if (!g.has_colours() && g.size() > 0) throw Error("parity solving requires a colouring");
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.successors(v).empty())
      throw DeadlockVertex("vertex #" + std::to_string(v) + " has no successor");

  const auto n = g.size();
  SolveResult r;
  r.strategy1.assign(n, kNoMove);
  r.strategy2.assign(n, kNoMove);
  Split split;
  zielonka(g, VertexSet::full(n), split, r.strategy1, r.strategy2);
  r.region1 = std::move(split.w1);
  r.region2 = std::move(split.w2);
  // strategies are only meaningful inside the owner's region
  for (Vertex v = 0; v < n; ++v) {
    if (!r.region1.contains(v) || g.owner(v) != Player::One) r.strategy1[v] = kNoMove;
    if (!r.region2.contains(v) || g.owner(v) != Player::Two) r.strategy2[v] = kNoMove;
  }
  return r;
}

SolveResult solve_parity_allowing_deadlocks(const StaticGameGraph& g) {
  const auto n = g.size();
  bool any_dead = false;
  for (Vertex v = 0; v < n && !any_dead; ++v) any_dead = g.successors(v).empty();
  if (!any_dead) return solve_static_parity(g);

  // sink_for[p] is lost by p: odd self-loop for Player 1, even for Player 2
  StaticGameGraph completed = g;
  const Vertex lose1 = completed.add_vertex(Player::One, 1);
  const Vertex lose2 = completed.add_vertex(Player::Two, 0);
  completed.add_edge(lose1, lose1);
  completed.add_edge(lose2, lose2);
  for (Vertex v = 0; v < n; ++v)
    if (g.successors(v).empty()) completed.add_edge(v, g.owner(v) == Player::One ? lose1 : lose2);

  SolveResult full = solve_static_parity(completed);
  SolveResult r;
  r.region1 = VertexSet(n);
  r.region2 = VertexSet(n);
  r.strategy1.assign(n, kNoMove);
  r.strategy2.assign(n, kNoMove);
  for (Vertex v = 0; v < n; ++v) {
    (full.region1.contains(v) ? r.region1 : r.region2).insert(v);
    if (full.strategy1[v] < n) r.strategy1[v] = full.strategy1[v];
    if (full.strategy2[v] < n) r.strategy2[v] = full.strategy2[v];
  }
  return r;
}

}  // namespace tgames
