#include "pairkit/proportional.hpp"

#include <numeric>
#include <stdexcept>

#include "pairkit/intmath.hpp"

namespace pairkit {

Proportions::Proportions(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
  if (a < 1 || b < 1) {
    throw std::domain_error("constants of proportionality must be >= 1");
  }
}

Nat Proportions::g(const Nat& x) const {
  return ipow(floor_root(x, a_) + 1, b_) - 1;
}

Nat Proportions::pair(const Nat& x, const Nat& y) const {
  if (x < 0 || y < 0) throw std::domain_error("pair: negative input");
  const Nat rx = floor_root(x, a_);
  const Nat ry = floor_root(y, b_);
  if (ry > rx) return y * ipow(ry, a_) + x;
  return x * ipow(rx + 1, b_) + y;
}

std::pair<Nat, Nat> Proportions::unpair(const Nat& z) const {
  if (z < 0) throw std::domain_error("unpair: negative input");
  const Nat m = floor_root(z, a_ + b_);
  const Nat ma = ipow(m, a_);
  if (z < ma * ipow(m + 1, b_)) return {z % ma, z / ma};
  const Nat col = ipow(m + 1, b_);
  return {z / col, z % col};
}

std::pair<Nat, Nat> Proportions::unpair_fast(const Nat& z) const {
  if (z < 0) throw std::domain_error("unpair: negative input");
  if (a_ == 1 && b_ == 1) {
    const Nat m = floor_root(z, 2);
    const Nat mm = m * m;
    if (z < mm + m) return {z - mm, m};
    return {m, z - mm - m};
  }
  if (a_ == 1) {
    const Nat m = floor_root(z, 1 + b_);
    const Nat cell = m * ipow(m + 1, b_);
    if (z < cell) return {z % m, z / m};
    return {m, z - cell};
  }
  if (b_ == 1) {
    const Nat m = floor_root(z, a_ + 1);
    const Nat ma = ipow(m, a_);
    if (z < ma * (m + 1)) return {z - ma * m, m};
    return {z / (m + 1), z % (m + 1)};
  }
  return unpair(z);
}

Nat Proportions::shell(const Nat& x, const Nat& y) const {
  return std::max(floor_root(x, a_), floor_root(y, b_));
}

Proportions Proportions::reduced() const {
  const std::uint64_t d = std::gcd(a_, b_);
  return Proportions(a_ / d, b_ / d);
}

MonotoneSource Proportions::source() const {
  const std::uint64_t a = a_;
  const std::uint64_t b = b_;
  return MonotoneSource(
      [a, b](const Nat& x) { return ipow(floor_root(x, a) + 1, b) - 1; },
      "g_" + std::to_string(a) + "," + std::to_string(b));
}

}  // namespace pairkit
