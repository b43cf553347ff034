#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace hetperc::cli {

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace hetperc::cli
