#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tgames/time.hpp"
#include "tgames/timeset.hpp"
#include "tgames/vertex_set.hpp"

namespace tgames {

enum class Player : std::uint8_t { One = 1, Two = 2 };

constexpr Player opponent(Player p) noexcept { return p == Player::One ? Player::Two : Player::One; }
constexpr int to_int(Player p) noexcept { return static_cast<int>(p); }

using Colour = std::uint32_t;

/// Player 1 wins an infinite play iff the maximal colour seen infinitely
/// often is even.
constexpr Player parity_winner(Colour c) noexcept { return c % 2 == 0 ? Player::One : Player::Two; }

struct ReachObjective {
  std::vector<Vertex> targets;  // sorted, unique
  friend bool operator==(const ReachObjective&, const ReachObjective&) = default;
};

/// Reach a target at exactly `target_time`.
struct PunctualObjective {
  std::vector<Vertex> targets;  // sorted, unique
  Time target_time;
  friend bool operator==(const PunctualObjective&, const PunctualObjective&) = default;
};

struct ParityObjective {
  friend bool operator==(const ParityObjective&, const ParityObjective&) = default;
};

using Objective = std::variant<ReachObjective, PunctualObjective, ParityObjective>;

struct StaticClass {
  friend bool operator==(const StaticClass&, const StaticClass&) = default;
};
/// No edge is available after `horizon`.
struct FiniteHorizonClass {
  Time horizon;
  friend bool operator==(const FiniteHorizonClass&, const FiniteHorizonClass&) = default;
};
struct PeriodicClass {
  Time period;
  friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
};
/// Availability at t >= prefix repeats with `period`.
struct UltimatelyPeriodicClass {
  Time prefix;
  Time period;
  friend bool operator==(const UltimatelyPeriodicClass&, const UltimatelyPeriodicClass&) = default;
};

using ClassHint = std::variant<StaticClass, FiniteHorizonClass, PeriodicClass, UltimatelyPeriodicClass>;

struct TemporalEdge {
  Vertex to;
  TimeSet avail;
  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// A two-player game on a temporal graph. Moving from u to w departs at time
/// t, requires t in avail(u, w), and arrives at time t + 1.
///
/// Built incrementally (vertices, then edges, objective, initial vertex and
/// class hint) and treated as immutable afterwards.
class TemporalGame {
 public:
  Vertex add_vertex(std::string name, Player owner, std::optional<Colour> colour = std::nullopt);
  /// Adds or replaces the availability of edge (from, to).
  void set_edge(Vertex from, Vertex to, TimeSet avail);
  void set_objective(Objective objective) { objective_ = std::move(objective); }
  void set_initial(Vertex v) { initial_ = v; }
  void set_class_hint(ClassHint hint) { hint_ = std::move(hint); }
  void set_owner(Vertex v, Player p) { owners_.at(v) = p; }
  void set_colour(Vertex v, std::optional<Colour> c) { colours_.at(v) = c; }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> find(std::string_view name) const;
  Player owner(Vertex v) const { return owners_.at(v); }
  std::optional<Colour> colour(Vertex v) const { return colours_.at(v); }
  /// Colour of v, or 0 when the vertex is uncoloured.
  Colour colour_or_zero(Vertex v) const { return colours_.at(v).value_or(0); }
  bool fully_coloured() const;

  /// Outgoing edges of v, sorted by target.
  std::span<const TemporalEdge> out_edges(Vertex v) const { return out_.at(v); }
  const TimeSet* edge(Vertex from, Vertex to) const;
  std::size_t edge_count() const;

  const Objective& objective() const noexcept { return objective_; }
  Vertex initial() const noexcept { return initial_; }
  const ClassHint& class_hint() const noexcept { return hint_; }

  /// Target set of a reachability or punctual objective (empty for parity).
  VertexSet targets() const;

  friend bool operator==(const TemporalGame& a, const TemporalGame& b);

 private:
  std::vector<std::string> names_;
  std::vector<Player> owners_;
  std::vector<std::optional<Colour>> colours_;
  std::vector<std::vector<TemporalEdge>> out_;
  std::unordered_map<std::string, Vertex> index_;
  Objective objective_ = ReachObjective{};
  Vertex initial_ = 0;
  ClassHint hint_ = StaticClass{};
};

/// Successors of v when departing at time t.
std::vector<Vertex> successors(const TemporalGame& g, Vertex v, const Time& t);

/// Ordinary game graph with positional ownership; successor and predecessor
/// lists are kept sorted by vertex id.
class StaticGameGraph {
 public:
  StaticGameGraph() = default;
  explicit StaticGameGraph(std::vector<Player> owners);

  Vertex add_vertex(Player owner, std::optional<Colour> colour = std::nullopt);
  void add_edge(Vertex from, Vertex to);
  void set_colour(Vertex v, Colour c);

  std::size_t size() const noexcept { return owners_.size(); }
  Player owner(Vertex v) const { return owners_[v]; }
  std::span<const Vertex> successors(Vertex v) const { return succ_[v]; }
  std::span<const Vertex> predecessors(Vertex v) const { return pred_[v]; }
  bool has_edge(Vertex from, Vertex to) const;
  std::size_t edge_count() const;

  bool has_colours() const noexcept { return !colours_.empty(); }
  Colour colour(Vertex v) const { return colours_.at(v); }

  friend bool operator==(const StaticGameGraph&, const StaticGameGraph&) = default;

 private:
  std::vector<Player> owners_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::vector<Colour> colours_;
};

/// The static graph of edges available at time t (colours copied when the
/// game is fully coloured).
StaticGameGraph snapshot(const TemporalGame& g, const Time& t);

/// True iff every edge is Always or Never.
bool is_static(const TemporalGame& g);

/// Embeds a static graph as a temporal game whose edges are all Always.
TemporalGame embed_static(const StaticGameGraph& g, std::span<const std::string> names = {});

std::string vertex_label(const TemporalGame& g, Vertex v);

}  // namespace tgames
