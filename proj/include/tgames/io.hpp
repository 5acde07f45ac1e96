#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tgames/game.hpp"
#include "tgames/periodic_parity.hpp"
#include "tgames/reductions.hpp"

namespace tgames {

/// Parses the JSON game format. Time constants may be JSON integers or
/// decimal strings. Throws ParseError on malformed input or unknown
/// vertex references; semantic rules are left to validate().
TemporalGame parse_game(std::string_view text);

/// Canonical form: sorted keys, two-space indentation, vertices in id order,
/// edges sorted by (from, to), every time constant as a decimal string.
std::string serialise_game(const TemporalGame& g);

/// Parses a certificate whose vertices are named as in g. Throws ParseError,
/// also for vertices g does not have.
Certificate parse_certificate(std::string_view text, const TemporalGame& g);
std::string serialise_certificate(const Certificate& cert, const TemporalGame& g);

/// Sidecar describing a reduction: vertex map (by name) and claim.
std::string serialise_reduction_map(const TemporalGame& input, const ReductionOutput& out);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace tgames
