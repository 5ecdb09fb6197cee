#include "pairkit/rosenberg_strong.hpp"

#include <algorithm>
#include <stdexcept>

#include "pairkit/intmath.hpp"

namespace pairkit {

Nat rs_pair(std::span<const Nat> coords) {
  if (coords.empty()) throw std::domain_error("rs_pair: empty tuple");
  for (const Nat& c : coords) {
    if (c < 0) throw std::domain_error("rs_pair: negative coordinate");
  }
  Nat acc = coords[0];
  Nat m = coords[0];
  for (std::size_t level = 2; level <= coords.size(); ++level) {
    const Nat& x = coords[level - 1];
    m = std::max(m, x);
    // m - x >= 0 because m includes x in its maximum.
    acc += ipow(m, level) +
           (m - x) * (ipow(m + 1, level - 1) - ipow(m, level - 1));
  }
  return acc;
}

std::vector<Nat> rs_unpair(std::size_t dim, const Nat& z) {
  if (dim == 0) throw std::domain_error("rs_unpair: dimension must be >= 1");
  if (z < 0) throw std::domain_error("rs_unpair: negative input");
  std::vector<Nat> coords(dim);
  Nat rem = z;
  for (std::size_t level = dim; level >= 2; --level) {
    const Nat m = floor_root(rem, level);
    const Nat inner = ipow(m, level - 1);
    const Nat band = ipow(m + 1, level - 1) - inner;
    const Nat corner = ipow(m, level) + inner;
    // x = m - floor(max(0, rem - m^level - m^(level-1)) / band); the max
    // realized as a clamp keeps everything non-negative.
    const Nat offset = rem > corner ? (rem - corner) / band : Nat(0);
    coords[level - 1] = m - offset;
    rem -= ipow(m, level) + offset * band;
  }
  coords[0] = rem;
  return coords;
}

}  // namespace pairkit
