#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairkit/nat.hpp"
#include "pairkit/proportional.hpp"

namespace pairkit {

class CurveSpec;

// A concrete witness that a checked condition fails. Re-evaluating the named
// predicate on `inputs` reproduces the violation; `observed` holds the values
// involved (encoder outputs, digit lengths, bounds) and `detail` renders the
// whole thing for humans.
struct Counterexample {
  std::string predicate;
  std::vector<std::vector<Nat>> inputs;
  std::vector<Nat> observed;
  std::string detail;
};

// A d-tupling function under test: forward maps a tuple to a code, backward
// (optional) decodes. Checkers only see this surface, so anything callable
// can be checked.
struct TuplerHandle {
  std::string label;
  std::size_t arity = 0;
  std::function<Nat(std::span<const Nat>)> forward;
  std::function<std::vector<Nat>(const Nat&)> backward;

  static TuplerHandle from(const Proportions& p);
  static TuplerHandle from(const CurveSpec& spec);
  static TuplerHandle from(const MonotoneSource& g);
  static TuplerHandle rs(std::size_t dim);
};

// nullopt means the check passed.
using CheckResult = std::optional<Counterexample>;

// Seed for the pseudo-random interior points used when a box exceeds the
// budget. Fixed so repeated runs visit identical point sets.
inline constexpr std::uint64_t kSampleSeed = 0x5EEDBA5EULL;

// Deterministic point set for a box too large to enumerate: every
// combination of the per-axis extreme values, then `budget` seeded
// pseudo-random interior points (duplicates of earlier points removed).
std::vector<std::vector<Nat>> sample_box(
    std::span<const Nat> bounds,
    std::span<const std::vector<Nat>> axis_extremes, std::uint64_t budget,
    std::uint64_t seed = kSampleSeed);

// backward(forward(·)) checks are exhaustive; this one checks the other
// direction: forward(backward(z)) = z for all z <= z_max, and that no two z
// decode to the same tuple. Requires t.backward; throws std::invalid_argument
// without it.
CheckResult check_bijection(const TuplerHandle& t, const Nat& z_max);

// For every tuple in [0, n^k_max)^d: the code has at most d * k base-n
// digits, where k is the largest per-coordinate digit count. Exhaustive when
// the box has at most `budget` points; otherwise every combination of the
// digit-length extremes {0, n^k - 1 : k <= k_max} plus `budget` seeded
// interior points.
CheckResult check_base_n_perfect(const TuplerHandle& t, std::uint64_t base,
                                 std::uint64_t k_max, std::uint64_t budget);

// For every k <= k_max and every (x, y) with x < n^(a*k), y < n^(b*k):
// the code has at most (a+b)*k base-n digits. Same budget policy as above,
// applied per k. Requires t.arity = 2.
CheckResult check_proportional(const TuplerHandle& t, std::uint64_t base,
                               const Proportions& p, std::uint64_t k_max,
                               std::uint64_t budget);

// Groups the box's points by their shell value s(tuple) and verifies that
// every code in a lower shell is smaller than every code in any higher
// shell. Exhaustive over the whole box (callers keep boxes modest).
CheckResult check_shell_numbering(
    const TuplerHandle& t,
    const std::function<Nat(std::span<const Nat>)>& shell,
    std::span<const Nat> box);

// check_shell_numbering with s = max of the per-coordinate base-n digit
// counts.
CheckResult check_base_n_shells(const TuplerHandle& t, std::uint64_t base,
                                std::span<const Nat> box);

}  // namespace pairkit
