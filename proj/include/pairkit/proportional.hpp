#pragma once

#include <cstdint>
#include <utility>

#include "pairkit/monotone_pairing.hpp"
#include "pairkit/nat.hpp"

namespace pairkit {

// The two-constant family of pairing functions. An instance with constants
// (a, b) emits, for inputs of at most a*k and b*k base-n digits, an output of
// at most (a+b)*k base-n digits, for every base n >= 2 and every k.
class Proportions {
 public:
  // Requires a >= 1 and b >= 1.
  Proportions(std::uint64_t a, std::uint64_t b);

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }

  // The generating function (floor_root(x, a) + 1)^b - 1.
  Nat g(const Nat& x) const;

  //   pair(x, y) = y * r_y^a + x          if r_y > r_x, where r_y = floor_root(y, b)
  //              = x * (r_x + 1)^b + y    otherwise,     and r_x = floor_root(x, a)
  Nat pair(const Nat& x, const Nat& y) const;

  // Total inverse of pair via m = floor_root(z, a + b):
  //   z < m^a * (m+1)^b  ->  (z mod m^a, z div m^a)
  //   otherwise          ->  (z div (m+1)^b, z mod (m+1)^b)
  std::pair<Nat, Nat> unpair(const Nat& z) const;

  // Same result as unpair, but when a = 1 or b = 1 one of the two interior
  // powers collapses and a division disappears. Falls back to unpair for
  // other constants.
  std::pair<Nat, Nat> unpair_fast(const Nat& z) const;

  // max(floor_root(x, a), floor_root(y, b)): the shell index of (x, y).
  // Points with a smaller shell value always pair to smaller outputs.
  Nat shell(const Nat& x, const Nat& y) const;

  // Constants divided by their gcd. pair/unpair of the reduced instance
  // differ from this one, but the digit-length guarantee carries over.
  Proportions reduced() const;

  // The same construction packaged as a MonotoneSource, so the generic
  // phi/psi machinery can run against it.
  MonotoneSource source() const;

  bool operator==(const Proportions& other) const = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

}  // namespace pairkit
