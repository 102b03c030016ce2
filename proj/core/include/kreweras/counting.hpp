#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kreweras {

using BigInt = boost::multiprecision::cpp_int;

/// Families with a closed-form exact count.
enum class CountKind {
  kreweras_origin,  ///< quarter-plane walks returning to the origin, by size n
  excursion,        ///< half-plane walks ending on the line i+j = 0, by size n
  projected,        ///< +2/-1 walks from 0 to 0 staying nonnegative, by size n
  cubic,            ///< bridgeless cubic maps with 3n edges (= loopless triangulations)
  depth_map,        ///< bridgeless 2-near-cubic maps carrying a depth tree
  kreweras_to,      ///< quarter-plane walks of size n ending at (i, 0)
  near_cubic_to,    ///< non-separable (i+2)-near-cubic maps of size n
};

/// C(n, k), exact.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Exact number of size-n objects of the given kind. `i` is required for
/// kreweras_to and near_cubic_to and must be absent for every other kind.
BigInt count(CountKind kind, std::int64_t n,
             std::optional<std::int64_t> i = std::nullopt);

std::string_view to_string(CountKind kind);
std::optional<CountKind> count_kind_from_string(std::string_view name);

}  // namespace kreweras
