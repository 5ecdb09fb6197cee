#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pairkit/nat.hpp"

namespace pairkit {

// The max-shelled d-tupling function, defined by r(x1) = x1 and
//   r(x1..xd) = r(x1..x(d-1)) + m^d + (m - xd) * ((m+1)^(d-1) - m^(d-1)),
// with m = max(x1..xd). Enumerates each box [0,m]^d completely before
// touching any point with a larger maximum. Requires a non-empty tuple.
Nat rs_pair(std::span<const Nat> coords);

// Total inverse: every z decodes, for any dim >= 1. Peels one coordinate per
// level via m = floor_root(z, level) and
//   x_level = m - floor(max(0, z - m^level - m^(level-1)) /
//                       ((m+1)^(level-1) - m^(level-1))).
std::vector<Nat> rs_unpair(std::size_t dim, const Nat& z);

}  // namespace pairkit
