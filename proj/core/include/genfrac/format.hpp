#ifndef GENFRAC_FORMAT_HPP_
#define GENFRAC_FORMAT_HPP_

#include <charconv>
#include <string>
#include <system_error>

namespace genfrac {

/// Shortest decimal string that round-trips to the same double (at most 17
/// significant digits).
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

}  // namespace genfrac

#endif  // GENFRAC_FORMAT_HPP_
