#include "tgames/generate.hpp"

#include <algorithm>
#include <random>

#include "tgames/validate.hpp"

namespace tgames {

namespace {

const std::vector<std::pair<Profile, std::string>>& table() {
  static const std::vector<std::pair<Profile, std::string>> t = {
      {Profile::StaticPunctual, "static-punctual"},
      {Profile::Finite, "finite"},
      {Profile::PeriodicParity, "periodic-parity"},
      {Profile::Declining, "declining"},
      {Profile::Improving, "improving"},
  };
  return t;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 1; }

  /// Distinct successors of v, the first of which is always present.
  std::vector<Vertex> targets(std::size_t n, std::size_t max_degree) {
    const auto d = between(1, std::min(max_degree, n));
    std::vector<Vertex> out;
    while (out.size() < d) {
      const auto w = static_cast<Vertex>(below(n));
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

TemporalGame with_vertices(Draw& draw, std::size_t n, std::optional<std::uint32_t> colours) {
  TemporalGame g;
  for (std::size_t i = 0; i < n; ++i) {
    const Player owner = draw.coin() ? Player::Two : Player::One;
    std::optional<Colour> c;
    if (colours) c = static_cast<Colour>(draw.below(*colours));
    g.add_vertex("v" + std::to_string(i), owner, c);
  }
  g.set_initial(0);
  return g;
}

std::vector<Vertex> some_targets(Draw& draw, std::size_t n) {
  std::vector<Vertex> f;
  const auto k = draw.between(1, std::min<std::size_t>(2, n));
  while (f.size() < k) {
    const auto v = static_cast<Vertex>(draw.below(n));
    if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
  }
  std::sort(f.begin(), f.end());
  return f;
}

TemporalGame static_punctual(Draw& draw, const GenerateOptions& o) {
  const auto n = std::max<std::size_t>(o.vertices, o.sink_target ? 2 : 1);
  TemporalGame g = with_vertices(draw, n, std::nullopt);
  const auto sink = static_cast<Vertex>(n - 1);
  if (o.sink_target) g.set_owner(sink, Player::One);
  for (Vertex v = 0; v < n; ++v) {
    if (o.sink_target && v == sink) continue;
    for (Vertex w : draw.targets(n, o.max_out_degree)) g.set_edge(v, w, TimeSet::always());
  }
  const Time t(draw.between(0, o.max_time));
  g.set_objective(PunctualObjective{o.sink_target ? std::vector<Vertex>{sink} : some_targets(draw, n), t});
  g.set_class_hint(StaticClass{});
  return g;
}

TemporalGame finite(Draw& draw, const GenerateOptions& o) {
  const auto n = std::max<std::size_t>(o.vertices, 1);
  const auto h = o.max_time;
  TemporalGame g = with_vertices(draw, n, std::nullopt);
  for (Vertex v = 0; v < n; ++v) {
    const auto succ = draw.targets(n, o.max_out_degree);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      if (i == 0) {
        g.set_edge(v, succ[i], TimeSet::interval(0, h));
        continue;
      }
      const auto a = draw.between(0, h);
      const auto b = draw.between(a, h);
      if (b + 2 <= h && draw.coin()) {
        const auto c = draw.between(b + 2, h);
        g.set_edge(v, succ[i], TimeSet::intervals({{a, b}, {c, draw.between(c, h)}}));
      } else {
        g.set_edge(v, succ[i], TimeSet::interval(a, b));
      }
    }
  }
  g.set_objective(ReachObjective{some_targets(draw, n)});
  g.set_class_hint(FiniteHorizonClass{h});
  return g;
}

TemporalGame periodic_parity(Draw& draw, const GenerateOptions& o) {
  const auto n = std::max<std::size_t>(o.vertices, 1);
  const auto k = std::max<std::uint64_t>(o.period, 1);
  TemporalGame g = with_vertices(draw, n, std::max<std::uint32_t>(o.colours, 1));
  for (Vertex v = 0; v < n; ++v) {
    const auto succ = draw.targets(n, o.max_out_degree);
    std::vector<std::vector<char>> on(succ.size(), std::vector<char>(k, 0));
    for (auto& row : on) {
      for (auto& bit : row) bit = draw.coin();
      row[draw.below(k)] = 1;
    }
    // every phase needs a move
    for (std::uint64_t r = 0; r < k; ++r) {
      bool covered = false;
      for (const auto& row : on) covered = covered || row[r];
      if (!covered) on[draw.below(succ.size())][r] = 1;
    }
    for (std::size_t i = 0; i < succ.size(); ++i) {
      std::vector<Time> residues;
      for (std::uint64_t r = 0; r < k; ++r)
        if (on[i][r]) residues.emplace_back(r);
      g.set_edge(v, succ[i], residues.size() == k ? TimeSet::always() : TimeSet::periodic(0, k, residues));
    }
  }
  g.set_objective(ParityObjective{});
  g.set_class_hint(PeriodicClass{k});
  return g;
}

TemporalGame monotone(Draw& draw, const GenerateOptions& o, bool declining) {
  const auto n = std::max<std::size_t>(o.vertices, 1);
  TemporalGame g = with_vertices(draw, n, o.parity ? std::optional<std::uint32_t>(std::max<std::uint32_t>(o.colours, 1))
                                                   : std::nullopt);
  for (Vertex v = 0; v < n; ++v) {
    const auto succ = draw.targets(n, o.max_out_degree);
    const bool decreasing = (g.owner(v) == Player::One) == declining;
    for (std::size_t i = 0; i < succ.size(); ++i) {
      if (i == 0) {
        g.set_edge(v, succ[i], TimeSet::always());
        continue;
      }
      const Time bound(draw.between(0, o.max_bound));
      g.set_edge(v, succ[i], decreasing ? TimeSet::at_most(bound) : TimeSet::at_least(bound));
    }
  }
  if (o.parity)
    g.set_objective(ParityObjective{});
  else
    g.set_objective(ReachObjective{some_targets(draw, n)});
  g.set_class_hint(UltimatelyPeriodicClass{stabilisation_time(g), 1});
  return g;
}

}  // namespace

std::optional<Profile> parse_profile(std::string_view name) {
  for (const auto& [p, s] : table())
    if (s == name) return p;
  return std::nullopt;
}

std::string profile_name(Profile p) {
  for (const auto& [q, s] : table())
    if (q == p) return s;
  return {};
}

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [p, s] : table()) out.push_back(s);
    return out;
  }();
  return names;
}

TemporalGame generate(Profile profile, std::uint64_t seed, const GenerateOptions& options) {
  Draw draw(seed);
  switch (profile) {
    case Profile::StaticPunctual: return static_punctual(draw, options);
    case Profile::Finite: return finite(draw, options);
    case Profile::PeriodicParity: return periodic_parity(draw, options);
    case Profile::Declining: return monotone(draw, options, true);
    case Profile::Improving: return monotone(draw, options, false);
  }
  return {};
}

}  // namespace tgames
