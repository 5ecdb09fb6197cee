#pragma once

#include <cstdint>

#include "pairkit/nat.hpp"

namespace pairkit {

// base^exponent by binary exponentiation.
Nat ipow(Nat base, std::uint64_t exponent);

// Number of base-n digits of x: 0 for x = 0, otherwise the unique L with
// n^(L-1) <= x < n^L. Requires base >= 2.
std::uint64_t len_base(std::uint64_t base, Nat x);

// Largest m with m^degree <= x. Requires degree >= 1.
// Integer Newton iteration from an overestimate, then exact correction;
// no floating point anywhere.
Nat floor_root(const Nat& x, std::uint64_t degree);

// Smallest m with m^degree >= x. Requires degree >= 1.
Nat ceil_root(const Nat& x, std::uint64_t degree);

}  // namespace pairkit
