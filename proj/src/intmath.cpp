#include "pairkit/intmath.hpp"

#include <stdexcept>

namespace pairkit {

Nat ipow(Nat base, std::uint64_t exponent) {
  Nat result{1};
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::uint64_t len_base(std::uint64_t base, Nat x) {
  if (base < 2) throw std::domain_error("len_base: base must be >= 2");
  if (x < 0) throw std::domain_error("len_base: negative value");
  std::uint64_t digits = 0;
  while (x > 0) {
    x /= base;
    ++digits;
  }
  return digits;
}

Nat floor_root(const Nat& x, std::uint64_t degree) {
  if (degree == 0) throw std::domain_error("floor_root: degree must be >= 1");
  if (x < 0) throw std::domain_error("floor_root: negative value");
  if (degree == 1 || x <= 1) return x;

  const std::uint64_t bits = boost::multiprecision::msb(x) + 1;
  // x < 2^bits <= 2^degree means the root is 1; also keeps the shift below
  // from being fed a degenerate exponent.
  if (degree >= bits) return 1;

  // Overestimate 2^ceil(bits/degree), then Newton's update
  //   r' = ((degree-1) r + x / r^(degree-1)) / degree,
  // which decreases monotonically from above until it stalls within one of
  // the true root; the final loops nudge it exactly onto the floor.
  Nat r = Nat(1) << static_cast<unsigned>((bits + degree - 1) / degree);
  while (true) {
    Nat next = ((degree - 1) * r + x / ipow(r, degree - 1)) / degree;
    if (next >= r) break;
    r = next;
  }
  while (ipow(r, degree) > x) --r;
  while (ipow(r + 1, degree) <= x) ++r;
  return r;
}

Nat ceil_root(const Nat& x, std::uint64_t degree) {
  if (degree == 0) throw std::domain_error("ceil_root: degree must be >= 1");
  if (x < 0) throw std::domain_error("ceil_root: negative value");
  Nat r = floor_root(x, degree);
  return ipow(r, degree) == x ? r : r + 1;
}

}  // namespace pairkit
