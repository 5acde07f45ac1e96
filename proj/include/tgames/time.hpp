#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tgames {

/// Points in discrete time. Constants in instance files may exceed 2^63,
/// so the data model stores them exactly.
using Time = boost::multiprecision::cpp_int;

/// Parses a non-negative decimal integer. Throws ParseError otherwise.
Time parse_time(std::string_view text);

std::string format_time(const Time& t);

/// Narrowing to a machine word, for loops that are actually executed.
std::optional<std::uint64_t> to_u64(const Time& t);

Time pow2(unsigned exponent);

}  // namespace tgames
