#ifndef FRIEZE_INTS_HPP
#define FRIEZE_INTS_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "frieze/errors.hpp"

namespace frieze {

/// Exact arbitrary-precision integer used for all grid entries and
/// submodule counts.  Entries grow quickly with the polygon size, so no
/// fixed-width type is safe in general.
using Int = boost::multiprecision::cpp_int;

using Json = nlohmann::json;

/// Serializes an exact integer: a plain JSON number when the value fits in
/// 64 bits, a decimal string otherwise (so round-trips never lose
/// precision even for huge entries).
[[nodiscard]] inline Json int_to_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

/// Parses an exact integer from either a JSON number or a decimal string.
[[nodiscard]] inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return Int(j.get<std::int64_t>());
  }
  if (j.is_number_unsigned()) {
    return Int(j.get<std::uint64_t>());
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidInput("not a decimal integer string: " + j.dump());
    }
  }
  throw InvalidInput("expected an integer (number or decimal string), got: " +
                     j.dump());
}

}  // namespace frieze

#endif  // FRIEZE_INTS_HPP
