#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sawsine {

enum class Family { sawtooth, sine };

inline const char* family_name(Family f) { return f == Family::sawtooth ? "sawtooth" : "sine"; }

inline Family parse_family(std::string_view s) {
  if (s == "sawtooth") return Family::sawtooth;
  if (s == "sine") return Family::sine;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

}  // namespace sawsine
