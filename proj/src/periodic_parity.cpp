#include "tgames/periodic_parity.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tgames/errors.hpp"

namespace tgames {

OutcomeSet make_outcome_set(std::vector<Outcome> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool is_subset(const OutcomeSet& a, const OutcomeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ColourIndex::ColourIndex(const TemporalGame& g) {
  for (Vertex v = 0; v < g.size(); ++v) colours_.push_back(g.colour_or_zero(v));
  std::sort(colours_.begin(), colours_.end());
  colours_.erase(std::unique(colours_.begin(), colours_.end()), colours_.end());
}

std::optional<std::size_t> ColourIndex::find(Colour c) const {
  auto it = std::lower_bound(colours_.begin(), colours_.end(), c);
  if (it == colours_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - colours_.begin());
}

std::size_t ColourIndex::index(Colour c) const {
  auto i = find(c);
  if (!i) throw Error("colour " + std::to_string(c) + " does not occur in the game");
  return *i;
}

ColourMemoryStrategy::ColourMemoryStrategy(std::size_t vertices, std::vector<Colour> colours,
                                           std::uint64_t period)
    : vertices_(vertices),
      colours_(std::move(colours)),
      period_(period),
      moves_(vertices * colours_.size() * period, kNoMove) {}

std::size_t ColourMemoryStrategy::slot(Vertex v, Colour seen, std::uint64_t phase) const {
  auto it = std::lower_bound(colours_.begin(), colours_.end(), seen);
  if (it == colours_.end() || *it != seen || v >= vertices_ || phase >= period_)
    throw Error("colour-memory strategy queried outside its domain");
  const auto c = static_cast<std::size_t>(it - colours_.begin());
  return (phase * vertices_ + v) * colours_.size() + c;
}

Vertex ColourMemoryStrategy::move(Vertex v, Colour seen, std::uint64_t phase) const {
  return moves_[slot(v, seen, phase)];
}

void ColourMemoryStrategy::set_move(Vertex v, Colour seen, std::uint64_t phase, Vertex w) {
  moves_[slot(v, seen, phase)] = w;
}

OutcomeSet Certificate::post(Vertex s) const {
  std::vector<Outcome> out;
  for (const auto& e : edges)
    if (e.from == s) out.push_back({e.to, e.colour});
  return make_outcome_set(std::move(out));
}

bool Certificate::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::uint64_t game_period(const TemporalGame& g, const IterationLimits& limits) {
  const auto* hint = std::get_if<PeriodicClass>(&g.class_hint());
  if (!hint) throw UnsupportedInstance("game is not declared periodic");
  return checked_iterations(hint->period, limits, "period");
}

Summary compute_summary(const TemporalGame& g, const PeriodicStrategy& sigma, Vertex s) {
  const auto k = sigma.period();
  const ColourIndex ci(g);
  const auto nc = ci.size();
  const auto n = g.size();
  std::vector<char> current(n * nc, 0), next(n * nc, 0);
  current[s * nc + ci.index(g.colour_or_zero(s))] = 1;

  for (std::uint64_t t = 0; t < k; ++t) {
    std::fill(next.begin(), next.end(), 0);
    const Time now(t);
    for (Vertex v = 0; v < n; ++v) {
      bool any = false;
      for (std::size_t c = 0; c < nc; ++c) any = any || current[v * nc + c];
      if (!any) continue;
      const auto avail = successors(g, v, now);
      std::vector<Vertex> chosen;
      if (g.owner(v) == Player::One) {
        const Vertex w = sigma.move(v, t);
        if (w == kNoMove) {
          if (!avail.empty())
            throw StrategyUnavailableMove("strategy has no move at " + vertex_label(g, v) + " phase " +
                                          std::to_string(t));
          continue;  // Player 1 is stuck: the play is lost and ends here
        }
        if (std::find(avail.begin(), avail.end(), w) == avail.end())
          throw StrategyUnavailableMove("strategy moves " + vertex_label(g, v) + "->" + vertex_label(g, w) +
                                        " at phase " + std::to_string(t) + " where the edge is unavailable");
        chosen.push_back(w);
      } else {
        chosen = avail;
      }
      for (std::size_t c = 0; c < nc; ++c) {
        if (!current[v * nc + c]) continue;
        for (Vertex w : chosen) next[w * nc + std::max(c, ci.index(g.colour_or_zero(w)))] = 1;
      }
    }
    std::swap(current, next);
  }

  Summary summary{s, {}};
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t c = 0; c < nc; ++c)
      if (current[v * nc + c]) summary.pairs.push_back({v, ci.colour(c)});
  return summary;
}

TemporalGame colour_product(const TemporalGame& g, const ColourIndex& colours) {
  TemporalGame p;
  const auto nc = colours.size();
  for (Vertex v = 0; v < g.size(); ++v)
    for (std::size_t c = 0; c < nc; ++c)
      p.add_vertex(g.name(v) + "#" + std::to_string(colours.colour(c)), g.owner(v), g.colour_or_zero(v));
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v)) {
      const auto dc = colours.index(g.colour_or_zero(e.to));
      for (std::size_t c = 0; c < nc; ++c)
        p.set_edge(static_cast<Vertex>(v * nc + c), static_cast<Vertex>(e.to * nc + std::max(c, dc)), e.avail);
    }
  p.set_class_hint(g.class_hint());
  p.set_objective(ParityObjective{});
  return p;
}

Realisability check_realisable(const TemporalGame& g, Vertex s, const OutcomeSet& b,
                               const IterationLimits& limits) {
  const auto k = game_period(g, limits);
  const ColourIndex ci(g);
  const auto nc = ci.size();
  const TemporalGame product = colour_product(g, ci);

  VertexSet targets(product.size());
  for (const auto& o : b)
    if (o.end < g.size())
      if (auto c = ci.find(o.colour)) targets.insert(static_cast<Vertex>(o.end * nc + *c));

  const auto layers = punctual_temporal_layers(product, targets, k, limits);
  const auto start = static_cast<Vertex>(s * nc + ci.index(g.colour_or_zero(s)));
  Realisability r;
  r.realisable = layers[0].contains(start);
  if (!r.realisable) return r;

  ColourMemoryStrategy witness(g.size(), ci.colours(), k);
  for (std::uint64_t t = 0; t < k; ++t) {
    const Time now(t);
    for (Vertex pv : layers[t].members()) {
      const Vertex v = pv / static_cast<Vertex>(nc);
      if (g.owner(v) != Player::One) continue;
      for (const auto& e : product.out_edges(pv))
        if (layers[t + 1].contains(e.to) && e.avail.contains(now)) {
          witness.set_move(v, ci.colour(pv % nc), t, e.to / static_cast<Vertex>(nc));
          break;
        }
    }
  }
  r.witness = std::move(witness);
  return r;
}

namespace {

/// Tarjan's algorithm over a small adjacency list; returns component ids.
std::vector<int> strongly_connected(const std::vector<std::vector<std::size_t>>& adj) {
  const auto n = adj.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0, components = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> calls{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      auto& f = calls.back();
      if (f.next < adj[f.v].size()) {
        const auto w = adj[f.v][f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const auto v = f.v;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      calls.pop_back();
      if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
    }
  }
  return comp;
}

}  // namespace

CycleCheck check_cycle_condition(const Certificate& cert, Vertex s0) {
  // local ids for the certificate's vertices
  std::map<Vertex, std::size_t> local;
  for (const auto& e : cert.edges) {
    local.emplace(e.from, 0);
    local.emplace(e.to, 0);
  }
  local.emplace(s0, 0);
  std::size_t next_id = 0;
  for (auto& [v, id] : local) id = next_id++;

  std::vector<std::vector<std::size_t>> all(local.size());
  for (const auto& e : cert.edges) all[local[e.from]].push_back(local[e.to]);
  std::vector<char> reachable(local.size(), 0);
  std::deque<std::size_t> queue{local[s0]};
  reachable[local[s0]] = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : all[v])
      if (!reachable[w]) {
        reachable[w] = 1;
        queue.push_back(w);
      }
  }

  std::vector<Colour> odd;
  for (const auto& e : cert.edges)
    if (reachable[local[e.from]] && e.colour % 2 == 1) odd.push_back(e.colour);
  std::sort(odd.begin(), odd.end());
  odd.erase(std::unique(odd.begin(), odd.end()), odd.end());

  for (Colour c : odd) {
    std::vector<std::vector<std::size_t>> adj(local.size());
    for (const auto& e : cert.edges)
      if (reachable[local[e.from]] && e.colour <= c) adj[local[e.from]].push_back(local[e.to]);
    const auto comp = strongly_connected(adj);
    for (const auto& e : cert.edges)
      if (reachable[local[e.from]] && e.colour == c && comp[local[e.from]] == comp[local[e.to]])
        return {false, e};
  }
  return {};
}

CertificateCheck verify_certificate(const TemporalGame& g, const Certificate& cert, Vertex s0,
                                    const IterationLimits& limits) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  if (!cert.contains(s0)) return fail("initial vertex " + vertex_label(g, s0) + " is not in the certificate");
  for (Vertex v : cert.vertices)
    if (v >= g.size()) return fail("certificate vertex #" + std::to_string(v) + " is not a game vertex");
  for (const auto& e : cert.edges)
    if (!cert.contains(e.from) || !cert.contains(e.to))
      return fail("edge " + vertex_label(g, e.from) + " -" + std::to_string(e.colour) + "-> " +
                  vertex_label(g, e.to) + " leaves the certificate's vertex set");
  for (Vertex v : cert.vertices)
    if (cert.post(v).empty()) return fail("vertex " + vertex_label(g, v) + " has no outgoing certificate edge");

  for (Vertex v : cert.vertices) {
    const auto post = cert.post(v);
    if (!check_realisable(g, v, post, limits).realisable) {
      std::string set;
      for (const auto& o : post)
        set += (set.empty() ? "" : ", ") + std::string("(") + g.name(o.end) + "," + std::to_string(o.colour) + ")";
      return fail("realisability: Post(" + g.name(v) + ") = {" + set + "} is not " + g.name(v) + "-realisable");
    }
  }
  const auto cycles = check_cycle_condition(cert, s0);
  if (!cycles.ok) {
    const auto& e = *cycles.odd_edge;
    return fail("cycle condition: a reachable cycle through " + vertex_label(g, e.from) + " -" +
                std::to_string(e.colour) + "-> " + vertex_label(g, e.to) + " has odd maximal colour " +
                std::to_string(e.colour));
  }
  return {true, {}};
}

Certificate extract_certificate(const TemporalGame& g, const PeriodicStrategy& sigma, Vertex s0) {
  Certificate cert;
  cert.initial = s0;
  std::vector<char> seen(g.size(), 0);
  std::deque<Vertex> queue{s0};
  seen[s0] = 1;
  while (!queue.empty()) {
    const Vertex s = queue.front();
    queue.pop_front();
    cert.vertices.push_back(s);
    for (const auto& o : compute_summary(g, sigma, s).pairs) {
      cert.edges.push_back({s, o.colour, o.end});
      if (!seen[o.end]) {
        seen[o.end] = 1;
        queue.push_back(o.end);
      }
    }
  }
  std::sort(cert.vertices.begin(), cert.vertices.end());
  std::sort(cert.edges.begin(), cert.edges.end());
  const auto cycles = check_cycle_condition(cert, s0);
  if (!cycles.ok)
    throw NotWinning("strategy admits a reachable cycle with odd maximal colour " +
                     std::to_string(cycles.odd_edge->colour) + " through " + vertex_label(g, cycles.odd_edge->from));
  return cert;
}

PeriodicParityResult solve_periodic_parity(const TemporalGame& g, Vertex s0, const IterationLimits& limits,
                                           RunStats* stats) {
  const auto k = game_period(g, limits);
  const auto n = g.size();
  if (k > limits.expansion_budget / std::max<std::size_t>(n, 1))
    throw BudgetExceeded("expansion budget " + std::to_string(limits.expansion_budget),
                         "period " + std::to_string(k) + " times " + std::to_string(n) + " vertices");

  // (v, i) has id i * n + v
  StaticGameGraph expansion;
  for (std::uint64_t i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v) expansion.add_vertex(g.owner(v), g.colour_or_zero(v));
  for (std::uint64_t i = 0; i < k; ++i) {
    poll_cancellation(limits, i);
    const Time now(i);
    const auto next = (i + 1) % k;
    for (Vertex v = 0; v < n; ++v)
      for (const auto& e : g.out_edges(v))
        if (e.avail.contains(now))
          expansion.add_edge(static_cast<Vertex>(i * n + v), static_cast<Vertex>(next * n + e.to));
  }
  if (stats) stats->expansion_vertices += n * k;

  const SolveResult solved = solve_parity_allowing_deadlocks(expansion);
  PeriodicParityResult result;
  result.region_by_phase.assign(k, VertexSet(n));
  for (std::uint64_t i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v)
      if (solved.region1.contains(static_cast<Vertex>(i * n + v))) result.region_by_phase[i].insert(v);
  result.winner = result.region_by_phase[0].contains(s0) ? Player::One : Player::Two;
  if (result.winner == Player::Two) return result;

  PeriodicStrategy sigma(n, k);
  for (std::uint64_t i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v) {
      if (g.owner(v) != Player::One) continue;
      const auto id = static_cast<Vertex>(i * n + v);
      Vertex choice = solved.strategy1[id];
      if (choice == kNoMove && !expansion.successors(id).empty()) choice = expansion.successors(id).front();
      if (choice != kNoMove) sigma.set_move(v, i, choice % static_cast<Vertex>(n));
    }
  result.certificate = extract_certificate(g, sigma, s0);
  result.strategy = std::move(sigma);
  return result;
}

std::optional<Certificate> enumerate_certificates(const TemporalGame& g, Vertex s0,
                                                  const CertificateSearchCaps& caps) {
  const auto k = game_period(g);
  const ColourIndex ci(g);
  const auto n = g.size();
  if (n > caps.max_vertices || ci.size() > caps.max_colours || k > caps.max_period)
    throw CapExceeded("certificate enumeration is capped at " + std::to_string(caps.max_vertices) +
                      " vertices, " + std::to_string(caps.max_colours) + " colours and period " +
                      std::to_string(caps.max_period));
  const auto nc = ci.size();

  // vertex subsets containing s0, by size then lexicographically
  std::vector<std::vector<Vertex>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> s0 & 1u)) continue;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) members.push_back(v);
    subsets.push_back(std::move(members));
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  for (const auto& vs : subsets) {
    // outcome universe V' x C; bit i stands for (vs[i / nc], colour i % nc)
    const auto bits = vs.size() * nc;
    auto decode = [&](std::uint32_t m) {
      std::vector<Outcome> out;
      for (std::size_t i = 0; i < bits; ++i)
        if (m >> i & 1u) out.push_back({vs[i / nc], ci.colour(i % nc)});
      return make_outcome_set(std::move(out));
    };

    std::vector<std::vector<std::uint32_t>> candidates;
    bool dead_end = false;
    for (Vertex s : vs) {
      std::vector<char> ok(std::size_t{1} << bits, 0);
      for (std::uint32_t m = 1; m < (1u << bits); ++m) ok[m] = check_realisable(g, s, decode(m)).realisable;
      // realisability is upward closed, so minimal sets suffice for the search
      std::vector<std::uint32_t> minimal;
      for (std::uint32_t m = 1; m < (1u << bits); ++m) {
        if (!ok[m]) continue;
        bool is_min = true;
        for (std::uint32_t sub = (m - 1) & m; sub != 0 && is_min; sub = (sub - 1) & m) is_min = !ok[sub];
        if (is_min) minimal.push_back(m);
      }
      if (minimal.empty()) {
        dead_end = true;
        break;
      }
      candidates.push_back(std::move(minimal));
    }
    if (dead_end) continue;

    std::vector<std::size_t> pick(vs.size(), 0);
    while (true) {
      Certificate cert;
      cert.vertices = vs;
      cert.initial = s0;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (const auto& o : decode(candidates[i][pick[i]])) cert.edges.push_back({vs[i], o.colour, o.end});
      std::sort(cert.edges.begin(), cert.edges.end());
      if (check_cycle_condition(cert, s0).ok && verify_certificate(g, cert, s0).ok) return cert;

      std::size_t i = vs.size();
      while (i > 0) {
        --i;
        if (++pick[i] < candidates[i].size()) break;
        pick[i] = 0;
        if (i == 0) {
          i = vs.size() + 1;
          break;
        }
      }
      if (i == vs.size() + 1 || vs.empty()) break;
    }
  }
  return std::nullopt;
}

TemporalGame periodic_suffix(const TemporalGame& g, const Time& shift, std::uint64_t period) {
  TemporalGame out;
  for (Vertex v = 0; v < g.size(); ++v) out.add_vertex(g.name(v), g.owner(v), g.colour(v));
  for (Vertex v = 0; v < g.size(); ++v)
    for (const auto& e : g.out_edges(v)) {
      std::vector<Time> residues;
      for (std::uint64_t r = 0; r < period; ++r)
        if (e.avail.contains(shift + r)) residues.emplace_back(r);
      if (residues.empty())
        out.set_edge(v, e.to, TimeSet::never());
      else if (residues.size() == period)
        out.set_edge(v, e.to, TimeSet::always());
      else
        out.set_edge(v, e.to, TimeSet::periodic(0, period, std::move(residues)));
    }
  out.set_objective(g.objective());
  out.set_initial(g.initial());
  out.set_class_hint(PeriodicClass{period});
  return out;
}

UltimatelyPeriodicResult solve_ultimately_periodic_parity(const TemporalGame& g, Vertex s0,
                                                          const IterationLimits& limits, RunStats* stats) {
  Time prefix = 0, period = 0;
  if (const auto* up = std::get_if<UltimatelyPeriodicClass>(&g.class_hint())) {
    prefix = up->prefix;
    period = up->period;
  } else if (const auto* p = std::get_if<PeriodicClass>(&g.class_hint())) {
    period = p->period;
  } else {
    throw UnsupportedInstance("game is not declared (ultimately) periodic");
  }
  const auto k = checked_iterations(period, limits, "period");
  checked_iterations(prefix, limits, "periodic prefix");

  const TemporalGame suffix = periodic_suffix(g, prefix, k);
  const auto tail = solve_periodic_parity(suffix, s0, limits, stats);
  UltimatelyPeriodicResult r;
  r.suffix_region = tail.region_by_phase[0];
  r.region = solve_punctual_temporal(g, r.suffix_region, prefix, limits, stats);
  r.winner = r.region.contains(s0) ? Player::One : Player::Two;
  return r;
}

}  // namespace tgames
