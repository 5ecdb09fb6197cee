#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pairkit/nat.hpp"
#include "pairkit/proportional.hpp"

namespace pairkit {

// Thrown by PackPlan::unpack when a decoded field exceeds its declared
// width: the value cannot have been produced by pack under this plan.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compiles per-field bit widths into a left fold of pairing steps whose
// output is guaranteed to fit in the sum of the widths. With k the gcd of
// the widths, the step joining an accumulated W bits with the next w-bit
// field uses constants (W/k, w/k) reduced to lowest terms; the digit-length
// guarantee of each step keeps the running total at W + w bits.
class PackPlan {
 public:
  // Requires a non-empty width list with no zero entries.
  static PackPlan plan(std::span<const std::uint64_t> widths);

  // JSON document {"k", "widths", "steps": [{"a", "b"}...], "total_bits"}.
  // The loader re-derives the plan from "widths" and rejects any field that
  // disagrees, naming it.
  static PackPlan from_json_text(std::string_view text);
  std::string to_json_text() const;

  std::uint64_t unit() const { return unit_; }
  const std::vector<std::uint64_t>& widths() const { return widths_; }
  const std::vector<Proportions>& steps() const { return steps_; }
  std::uint64_t total_bits() const { return total_bits_; }

  // Folds the fields together; len_base(2, result) <= total_bits(). A value
  // wider than its field throws std::domain_error naming the field index;
  // a wrong value count throws std::invalid_argument.
  Nat pack(std::span<const Nat> values) const;

  // Recovers the original fields; defined only on outputs of pack.
  std::vector<Nat> unpack(const Nat& packed) const;

 private:
  PackPlan() = default;

  std::uint64_t unit_ = 0;
  std::vector<std::uint64_t> widths_;
  std::vector<Proportions> steps_;
  std::uint64_t total_bits_ = 0;
};

}  // namespace pairkit
