#pragma once

#include <string>
#include <vector>

#include "tgames/game.hpp"

namespace tgames {

/// A transformed instance. vertex_map[v] is the image of original vertex v.
struct ReductionOutput {
  TemporalGame game;
  std::vector<Vertex> vertex_map;
  std::string claim;
};

/// Waiting gadget: a fresh Player 1 initial vertex with a self-loop and an
/// edge to the old initial vertex; target time 2^|V|. Input: a static game
/// with a reachability objective.
ReductionOutput reduce_exists_to_punctual(const TemporalGame& g);

/// Finite temporal reachability game with a fresh target u entered from F
/// exactly at time T. Input: a static game with a punctual objective.
ReductionOutput reduce_punctual_to_temporal(const TemporalGame& g);

/// Finite decreasing game around target v (which must be a sink) and time T;
/// the new target is the fresh vertex "top".
ReductionOutput reduce_punctual_to_decreasing(const TemporalGame& g, Vertex v, const Time& t);

/// Increasing variant of the above.
ReductionOutput reduce_punctual_to_increasing(const TemporalGame& g, Vertex v, const Time& t);

/// Periodically declining game with period T + 1 and target "top". v must be
/// a Player 1 sink.
ReductionOutput reduce_punctual_to_periodically_declining(const TemporalGame& g, Vertex v, const Time& t);

/// Swaps ownership and complements the targets of a punctual game.
ReductionOutput dualize(const TemporalGame& g);

/// Reachability of sink targets as parity: targets get colour 2, every other
/// vertex colour 1. Each target must have an always-available self-loop.
TemporalGame reachability_as_parity(const TemporalGame& g);

}  // namespace tgames
