#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairkit/nat.hpp"

namespace pairkit {

// A bijection on the symbols 0..size-1, stored as its value table.
class Permutation {
 public:
  // Validates that the table is a bijection; throws std::invalid_argument.
  explicit Permutation(std::vector<std::uint32_t> table);

  static Permutation identity(std::size_t symbol_count);

  std::size_t size() const { return table_.size(); }
  std::uint32_t operator()(std::uint32_t symbol) const;
  const std::vector<std::uint32_t>& table() const { return table_; }

  Permutation inverse() const;

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  // exponent-fold composition, inverse-based for negative exponents; the
  // exponent is reduced modulo order() first, so huge exponents stay cheap.
  Permutation power(std::int64_t exponent) const;

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<std::uint32_t> table_;
};

// f after g: compose(f, g)(i) = f(g(i)). Sizes must match.
Permutation compose(const Permutation& f, const Permutation& g);

// A discrete space-filling curve over the grid N^dim, given by digit
// permutations: tau maps each base^dim digit tuple to an output digit, and
// sigma[j] rewrites the mapping for everything after a digit that came out
// as j. Walking z = 0, 1, 2, ... through decode traces the curve.
class CurveSpec {
 public:
  // Requires base >= 2, dim in {2, 3}, tau and each sigma of size base^dim,
  // tau(0) = 0 and sigma[0](0) = 0 (so leading zeros cannot change a code).
  // Violations throw std::invalid_argument naming the offending field.
  CurveSpec(std::string name, std::uint32_t base, std::uint32_t dim,
            Permutation tau, std::vector<Permutation> sigmas);

  // Built-in curves: hilbert2, peano3, zorder2, gray2, nonisometric2,
  // hilbert3. Throws std::domain_error for anything else.
  static const CurveSpec& builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  // JSON document {"name", "base", "dim", "tau", "sigmas"}; permutation
  // arrays list the images of 0, 1, 2, ... in order.
  static CurveSpec from_json_text(std::string_view text);
  std::string to_json_text() const;

  const std::string& name() const { return name_; }
  std::uint32_t base() const { return base_; }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t symbol_count() const { return symbol_count_; }
  const Permutation& tau() const { return tau_; }
  const std::vector<Permutation>& sigmas() const { return sigmas_; }

  // Position of the point along the curve. Digits are consumed most
  // significant first; coordinate 0 supplies the highest-order digit within
  // each tuple. Output has one base^dim digit per input digit position.
  Nat encode(std::span<const Nat> coords) const;

  // Point of the grid visited at position z; total inverse of encode.
  std::vector<Nat> decode(const Nat& z) const;

 private:
  std::string name_;
  std::uint32_t base_;
  std::uint32_t dim_;
  std::uint32_t symbol_count_;
  Permutation tau_;
  std::vector<Permutation> sigmas_;
};

}  // namespace pairkit
