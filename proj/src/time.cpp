#include "tgames/time.hpp"

#include <limits>

#include "tgames/errors.hpp"

namespace tgames {

Time parse_time(std::string_view text) {
  if (text.empty()) throw ParseError("empty time constant");
  Time value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("time constant is not a non-negative decimal: \"" +
                       std::string(text) + "\"");
    value *= 10;
    value += c - '0';
  }
  return value;
}

std::string format_time(const Time& t) { return t.str(); }

std::optional<std::uint64_t> to_u64(const Time& t) {
  if (t < 0 || t > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return t.convert_to<std::uint64_t>();
}

Time pow2(unsigned exponent) {
  Time r = 1;
  r <<= exponent;
  return r;
}

}  // namespace tgames
