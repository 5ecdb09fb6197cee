#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pairkit/nat.hpp"

namespace pairkit {

// Thrown when a function wrapped as a MonotoneSource turns out not to honour
// its contract (non-decreasing, unbounded), e.g. when the galloping search in
// pseudo_inverse exceeds its cap without finding a large enough value.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A non-decreasing unbounded function g: N -> N, the only ingredient the
// generic pairing construction needs. Carries a description for error
// messages and a memoized prefix of the step-point sequence; copies share
// both. Evaluation itself is never cached (g is assumed cheap).
class MonotoneSource {
 public:
  MonotoneSource(std::function<Nat(const Nat&)> fn, std::string description);

  Nat operator()(const Nat& x) const;
  const std::string& description() const;

  // Bound on the galloping upper-bound search inside pseudo_inverse.
  // Exceeding it means g never reached the requested value, so g is
  // presumably bounded and the contract is violated.
  Nat gallop_cap() const;
  void set_gallop_cap(Nat cap);

 private:
  struct State;
  std::shared_ptr<State> state_;

  friend Nat step_point(const MonotoneSource& g, std::uint64_t k);
};

// Smallest x with g(x) >= y; 0 when g(0) already suffices.
// Galloping doubling for an upper bound, then binary search.
Nat pseudo_inverse(const MonotoneSource& g, const Nat& y);

// k-th element of the increasing sequence of points where g attains a value
// for the first time: s_0 = 0 and s_{k+1} = pseudo_inverse(g, g(s_k) + 1).
Nat step_point(const MonotoneSource& g, std::uint64_t k);

// The pairing function generated by g:
//   phi(x, y) = y * pseudo_inverse(g, y) + x   if y > g(x)
//             = x * (g(x) + 1) + y             otherwise.
Nat phi(const MonotoneSource& g, const Nat& x, const Nat& y);

// Total inverse of phi.
std::pair<Nat, Nat> psi(const MonotoneSource& g, const Nat& z);

// Smallest k with x < s_{k+1} and y <= g(s_k): the index of the shell
// containing (x, y). phi maps shell k onto [0, s_{k+1} * (g(s_k) + 1)) minus
// the union of earlier shells' images.
std::uint64_t shell_index(const MonotoneSource& g, const Nat& x, const Nat& y);

// Snapshot of one shell: its step-point bracket, the value of g there, and
// the exclusive code bound b_bound = step_hi * (g_at_step + 1). phi maps the
// box { x < step_hi, y <= g_at_step } bijectively onto [0, b_bound).
struct ShellDescriptor {
  std::uint64_t index = 0;
  Nat step_lo;    // s_k
  Nat step_hi;    // s_{k+1}
  Nat g_at_step;  // g(s_k)
  Nat b_bound;

  bool operator==(const ShellDescriptor& other) const = default;
};

ShellDescriptor describe_shell(const MonotoneSource& g, std::uint64_t k);

// Opt-in contract spot check: returns the first x <= limit with
// g(x) > g(x + 1), if any.
std::optional<Nat> find_monotonicity_break(const MonotoneSource& g,
                                           const Nat& limit);

}  // namespace pairkit
