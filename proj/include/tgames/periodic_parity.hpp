#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgames/game.hpp"
#include "tgames/punctual.hpp"
#include "tgames/static_solvers.hpp"

namespace tgames {

/// End of a one-period play: the vertex reached at time K and the maximal
/// colour seen on the way (both endpoints included).
struct Outcome {
  Vertex end;
  Colour colour;
  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

/// Sorted, duplicate-free set of outcomes.
using OutcomeSet = std::vector<Outcome>;

OutcomeSet make_outcome_set(std::vector<Outcome> items);
bool is_subset(const OutcomeSet& a, const OutcomeSet& b);

/// R_sigma(s): every outcome of a sigma-consistent play of one period from s.
struct Summary {
  Vertex source;
  OutcomeSet pairs;
};

/// Positional strategy on the period expansion: a successor per Player 1
/// vertex and phase in [0, K).
class PeriodicStrategy {
 public:
  PeriodicStrategy() = default;
  PeriodicStrategy(std::size_t vertices, std::uint64_t period)
      : vertices_(vertices), period_(period), moves_(vertices * period, kNoMove) {}

  std::uint64_t period() const noexcept { return period_; }
  std::size_t vertices() const noexcept { return vertices_; }
  Vertex move(Vertex v, std::uint64_t phase) const { return moves_.at(phase * vertices_ + v); }
  void set_move(Vertex v, std::uint64_t phase, Vertex w) { moves_.at(phase * vertices_ + v) = w; }

  friend bool operator==(const PeriodicStrategy&, const PeriodicStrategy&) = default;

 private:
  std::size_t vertices_ = 0;
  std::uint64_t period_ = 0;
  std::vector<Vertex> moves_;
};

/// Dense index of the colours occurring in a game.
class ColourIndex {
 public:
  explicit ColourIndex(const TemporalGame& g);
  std::size_t size() const noexcept { return colours_.size(); }
  std::size_t index(Colour c) const;  // throws if c does not occur
  std::optional<std::size_t> find(Colour c) const;
  Colour colour(std::size_t i) const { return colours_.at(i); }
  const std::vector<Colour>& colours() const noexcept { return colours_; }

 private:
  std::vector<Colour> colours_;
};

/// A Player 1 strategy for one period that also remembers the maximal
/// colour seen so far: move(v, colour, phase).
class ColourMemoryStrategy {
 public:
  ColourMemoryStrategy() = default;
  ColourMemoryStrategy(std::size_t vertices, std::vector<Colour> colours, std::uint64_t period);

  Vertex move(Vertex v, Colour seen, std::uint64_t phase) const;
  void set_move(Vertex v, Colour seen, std::uint64_t phase, Vertex w);
  std::uint64_t period() const noexcept { return period_; }

 private:
  std::size_t slot(Vertex v, Colour seen, std::uint64_t phase) const;

  std::size_t vertices_ = 0;
  std::vector<Colour> colours_;
  std::uint64_t period_ = 0;
  std::vector<Vertex> moves_;
};

/// Colour-labelled multigraph witnessing a Player 1 win.
struct Certificate {
  struct Edge {
    Vertex from;
    Colour colour;
    Vertex to;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
  Vertex initial = 0;

  /// Post(s) = {(t, c) | (s, c, t) in edges}.
  OutcomeSet post(Vertex s) const;
  bool contains(Vertex v) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// The period K of a game with a Periodic class hint, bounded by the
/// iteration budget.
std::uint64_t game_period(const TemporalGame& g, const IterationLimits& limits = {});

/// Forward exploration of (vertex, time, max colour) for one period.
/// Throws StrategyUnavailableMove if sigma picks an unavailable edge, or has
/// no move at a Player 1 vertex that could move.
Summary compute_summary(const TemporalGame& g, const PeriodicStrategy& sigma, Vertex s);

struct Realisability {
  bool realisable = false;
  /// On success: a strategy whose summary from s is contained in B.
  std::optional<ColourMemoryStrategy> witness;
};

/// The colour-product game over V x C, tracking the maximal colour seen.
/// Vertex (v, c) has id v * |C| + index(c).
TemporalGame colour_product(const TemporalGame& g, const ColourIndex& colours);

/// Decides whether Player 1 can guarantee that every one-period play from s
/// ends in B, by punctual reachability on the colour product with target B
/// at time K.
Realisability check_realisable(const TemporalGame& g, Vertex s, const OutcomeSet& b,
                               const IterationLimits& limits = {});

struct CycleCheck {
  bool ok = true;
  std::optional<Certificate::Edge> odd_edge;  // an odd-maximal cycle passes through it
};

/// Every cycle reachable from s0 has an even maximal label.
CycleCheck check_cycle_condition(const Certificate& cert, Vertex s0);

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;  // empty when ok
};

CertificateCheck verify_certificate(const TemporalGame& g, const Certificate& cert, Vertex s0,
                                    const IterationLimits& limits = {});

/// Certificate induced by sigma from s0. Throws NotWinning if a reachable
/// cycle has an odd maximal colour.
Certificate extract_certificate(const TemporalGame& g, const PeriodicStrategy& sigma, Vertex s0);

struct PeriodicParityResult {
  Player winner = Player::Two;
  /// region_by_phase[i]: vertices v such that Player 1 wins from (v, i).
  std::vector<VertexSet> region_by_phase;
  std::optional<PeriodicStrategy> strategy;
  std::optional<Certificate> certificate;
};

/// Solves the parity game on the period expansion V x [0, K) and, when
/// Player 1 wins from (s0, 0), returns her periodic strategy and the
/// certificate it induces. Throws BudgetExceeded when K * |V| exceeds the
/// expansion budget.
PeriodicParityResult solve_periodic_parity(const TemporalGame& g, Vertex s0,
                                           const IterationLimits& limits = {}, RunStats* stats = nullptr);

struct CertificateSearchCaps {
  std::size_t max_vertices = 4;
  std::size_t max_colours = 2;
  std::uint64_t max_period = 3;
};

/// Exhaustive certificate search for tiny games: vertex subsets by size then
/// lexicographically, and per vertex the minimal realisable outcome sets in
/// ascending bitmask order. Throws CapExceeded above the caps.
std::optional<Certificate> enumerate_certificates(const TemporalGame& g, Vertex s0,
                                                  const CertificateSearchCaps& caps = {});

/// Copy of g whose availability at time t is the original at shift + t,
/// with a Periodic(period) class hint. Requires availability to be periodic
/// from `shift`.
TemporalGame periodic_suffix(const TemporalGame& g, const Time& shift, std::uint64_t period);

struct UltimatelyPeriodicResult {
  Player winner = Player::Two;
  VertexSet region;         // Player 1 winning vertices at time 0
  VertexSet suffix_region;  // Player 1 winning vertices at time T
};

UltimatelyPeriodicResult solve_ultimately_periodic_parity(const TemporalGame& g, Vertex s0,
                                                          const IterationLimits& limits = {},
                                                          RunStats* stats = nullptr);

}  // namespace tgames
