#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kreweras/walk.hpp"

namespace kreweras {

/// Walk families that can be listed exhaustively.
enum class WalkFamily {
  kreweras_origin,  ///< quarter-plane walks of size n returning to the origin
  excursion,        ///< half-plane walks of size n ending on i+j = 0
  kreweras_to,      ///< quarter-plane walks of size n ending at (i, 0)
};

/// Lists every member of the family in lexicographic order (a < b < c).
/// `i` is required for kreweras_to and must be absent otherwise.
/// Guard: the word length 3n (+2i) must not exceed 21.
std::vector<Walk> enumerate_walks(WalkFamily family, int n,
                                  std::optional<int> i = std::nullopt);

std::string_view to_string(WalkFamily family);
std::optional<WalkFamily> walk_family_from_string(std::string_view name);

}  // namespace kreweras
