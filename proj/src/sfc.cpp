#include "pairkit/sfc.hpp"

#include <json.hpp>

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace pairkit {

namespace {

using nlohmann::json;

Permutation perm_from_table(std::initializer_list<std::uint32_t> values) {
  return Permutation(std::vector<std::uint32_t>(values));
}

// p^exponent for an unsigned exponent, reduced modulo the order first.
Permutation perm_power_u64(const Permutation& p, std::uint64_t exponent) {
  const std::uint64_t ord = p.order();
  exponent %= ord;
  Permutation result = Permutation::identity(p.size());
  Permutation base = p;
  while (exponent != 0) {
    if (exponent & 1) result = compose(base, result);
    exponent >>= 1;
    if (exponent != 0) base = compose(base, base);
  }
  return result;
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> table)
    : table_(std::move(table)) {
  if (table_.empty()) throw std::invalid_argument("permutation: empty table");
  std::vector<bool> seen(table_.size(), false);
  for (std::uint32_t v : table_) {
    if (v >= table_.size() || seen[v]) {
      throw std::invalid_argument("permutation: table is not a bijection on 0.." +
                                  std::to_string(table_.size() - 1));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t symbol_count) {
  std::vector<std::uint32_t> table(symbol_count);
  std::iota(table.begin(), table.end(), 0);
  return Permutation(std::move(table));
}

std::uint32_t Permutation::operator()(std::uint32_t symbol) const {
  if (symbol >= table_.size()) {
    throw std::domain_error("permutation: symbol out of range");
  }
  return table_[symbol];
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(table_.size());
  for (std::uint32_t i = 0; i < table_.size(); ++i) inv[table_[i]] = i;
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(table_.size(), false);
  std::uint64_t ord = 1;
  for (std::uint32_t start = 0; start < table_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t i = start; !seen[i]; i = table_[i]) {
      seen[i] = true;
      ++len;
    }
    const std::uint64_t g = std::gcd(ord, len);
    if (ord / g > std::numeric_limits<std::uint64_t>::max() / len) {
      throw std::overflow_error("permutation order exceeds 64 bits");
    }
    ord = ord / g * len;
  }
  return ord;
}

Permutation Permutation::power(std::int64_t exponent) const {
  if (exponent >= 0) return perm_power_u64(*this, static_cast<std::uint64_t>(exponent));
  // p^-e = (p^-1)^e; -INT64_MIN overflows, route through uint64.
  const std::uint64_t magnitude =
      static_cast<std::uint64_t>(-(exponent + 1)) + 1;
  return perm_power_u64(inverse(), magnitude);
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("compose: size mismatch");
  }
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t i = 0; i < table.size(); ++i) table[i] = f(g(i));
  return Permutation(std::move(table));
}

CurveSpec::CurveSpec(std::string name, std::uint32_t base, std::uint32_t dim,
                     Permutation tau, std::vector<Permutation> sigmas)
    : name_(std::move(name)),
      base_(base),
      dim_(dim),
      symbol_count_(0),
      tau_(std::move(tau)),
      sigmas_(std::move(sigmas)) {
  if (base_ < 2) throw std::invalid_argument("base: must be >= 2");
  if (dim_ != 2 && dim_ != 3) throw std::invalid_argument("dim: must be 2 or 3");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    count *= base_;
    if (count > (std::uint64_t{1} << 32)) {
      throw std::invalid_argument("base: base^dim too large");
    }
  }
  symbol_count_ = static_cast<std::uint32_t>(count);
  if (tau_.size() != symbol_count_) {
    throw std::invalid_argument("tau: expected " +
                                std::to_string(symbol_count_) + " entries");
  }
  if (sigmas_.size() != symbol_count_) {
    throw std::invalid_argument("sigmas: expected " +
                                std::to_string(symbol_count_) + " tables");
  }
  for (std::size_t j = 0; j < sigmas_.size(); ++j) {
    if (sigmas_[j].size() != symbol_count_) {
      throw std::invalid_argument("sigmas[" + std::to_string(j) +
                                  "]: expected " +
                                  std::to_string(symbol_count_) + " entries");
    }
  }
  // With these two pinned, prepending zero digits to every coordinate leaves
  // the code unchanged, which is what makes encode well-defined on numbers
  // rather than fixed-width digit strings.
  if (tau_(0) != 0) throw std::invalid_argument("tau: tau(0) must be 0");
  if (sigmas_[0](0) != 0) {
    throw std::invalid_argument("sigmas[0]: sigma_0(0) must be 0");
  }
}

const CurveSpec& CurveSpec::builtin(std::string_view name) {
  static const std::map<std::string, CurveSpec, std::less<>> curves = [] {
    std::map<std::string, CurveSpec, std::less<>> m;
    const Permutation i4 = Permutation::identity(4);
    const Permutation i9 = Permutation::identity(9);

    m.emplace("hilbert2",
              CurveSpec("hilbert2", 2, 2, perm_from_table({0, 1, 3, 2}),
                        {perm_from_table({0, 3, 2, 1}), i4, i4,
                         perm_from_table({2, 1, 0, 3})}));

    const Permutation peano_flip_rows =
        perm_from_table({6, 7, 8, 3, 4, 5, 0, 1, 2});
    const Permutation peano_flip_cols =
        perm_from_table({2, 1, 0, 5, 4, 3, 8, 7, 6});
    m.emplace("peano3",
              CurveSpec("peano3", 3, 2,
                        perm_from_table({0, 1, 2, 5, 4, 3, 6, 7, 8}),
                        {i9, peano_flip_rows, i9, peano_flip_cols,
                         perm_from_table({8, 7, 6, 5, 4, 3, 2, 1, 0}),
                         peano_flip_cols, i9, peano_flip_rows, i9}));

    m.emplace("zorder2", CurveSpec("zorder2", 2, 2, i4, {i4, i4, i4, i4}));

    const Permutation gray_swap = perm_from_table({2, 3, 0, 1});
    m.emplace("gray2", CurveSpec("gray2", 2, 2, perm_from_table({0, 1, 3, 2}),
                                 {i4, gray_swap, gray_swap, i4}));

    m.emplace("nonisometric2",
              CurveSpec("nonisometric2", 2, 2, i4,
                        {perm_from_table({0, 3, 1, 2}),
                         perm_from_table({0, 1, 3, 2}),
                         perm_from_table({1, 0, 2, 3}),
                         perm_from_table({1, 2, 0, 3})}));

    const Permutation h3_mid = perm_from_table({0, 1, 6, 7, 4, 5, 2, 3});
    const Permutation h3_low = perm_from_table({2, 3, 0, 1, 6, 7, 4, 5});
    const Permutation h3_high = perm_from_table({4, 5, 2, 3, 0, 1, 6, 7});
    m.emplace("hilbert3",
              CurveSpec("hilbert3", 2, 3,
                        perm_from_table({0, 1, 3, 2, 7, 6, 4, 5}),
                        {perm_from_table({0, 7, 4, 3, 2, 5, 6, 1}), h3_mid,
                         h3_mid, h3_low, h3_low, h3_high, h3_high,
                         perm_from_table({6, 1, 2, 5, 4, 3, 0, 7})}));
    return m;
  }();
  const auto it = curves.find(name);
  if (it == curves.end()) {
    std::string known;
    for (const std::string& n : builtin_names()) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw std::domain_error("unknown curve '" + std::string(name) +
                            "'; expected one of: " + known);
  }
  return it->second;
}

std::vector<std::string> CurveSpec::builtin_names() {
  return {"gray2", "hilbert2", "hilbert3", "nonisometric2", "peano3",
          "zorder2"};
}

CurveSpec CurveSpec::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("curve spec: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("curve spec: not an object");

  const auto require = [&doc](const char* field) -> const json& {
    if (!doc.contains(field)) {
      throw std::invalid_argument(std::string(field) + ": missing");
    }
    return doc.at(field);
  };
  const auto as_table = [](const json& node,
                           const std::string& field) -> Permutation {
    if (!node.is_array()) throw std::invalid_argument(field + ": not an array");
    std::vector<std::uint32_t> table;
    table.reserve(node.size());
    for (const auto& v : node) {
      if (!v.is_number_unsigned()) {
        throw std::invalid_argument(field + ": entries must be non-negative integers");
      }
      table.push_back(v.get<std::uint32_t>());
    }
    try {
      return Permutation(std::move(table));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(field + ": " + e.what());
    }
  };

  const json& jname = require("name");
  if (!jname.is_string()) throw std::invalid_argument("name: not a string");
  const json& jbase = require("base");
  if (!jbase.is_number_unsigned()) {
    throw std::invalid_argument("base: not a non-negative integer");
  }
  const json& jdim = require("dim");
  if (!jdim.is_number_unsigned()) {
    throw std::invalid_argument("dim: not a non-negative integer");
  }
  const json& jsigmas = require("sigmas");
  if (!jsigmas.is_array()) throw std::invalid_argument("sigmas: not an array");

  Permutation tau = as_table(require("tau"), "tau");
  std::vector<Permutation> sigmas;
  sigmas.reserve(jsigmas.size());
  for (std::size_t j = 0; j < jsigmas.size(); ++j) {
    sigmas.push_back(
        as_table(jsigmas.at(j), "sigmas[" + std::to_string(j) + "]"));
  }
  return CurveSpec(jname.get<std::string>(), jbase.get<std::uint32_t>(),
                   jdim.get<std::uint32_t>(), std::move(tau),
                   std::move(sigmas));
}

std::string CurveSpec::to_json_text() const {
  json doc;
  doc["name"] = name_;
  doc["base"] = base_;
  doc["dim"] = dim_;
  doc["tau"] = tau_.table();
  json sig = json::array();
  for (const Permutation& s : sigmas_) sig.push_back(s.table());
  doc["sigmas"] = std::move(sig);
  return doc.dump();
}

Nat CurveSpec::encode(std::span<const Nat> coords) const {
  if (coords.size() != dim_) {
    throw std::domain_error("encode: expected " + std::to_string(dim_) +
                            " coordinates");
  }
  std::uint64_t m = 0;
  for (const Nat& c : coords) {
    if (c < 0) throw std::domain_error("encode: negative coordinate");
    Nat v = c;
    std::uint64_t len = 0;
    while (v > 0) {
      v /= base_;
      ++len;
    }
    m = std::max(m, len);
  }
  if (m == 0) return Nat(0);

  // digits[i] holds coordinate i most significant digit first.
  std::vector<std::vector<std::uint32_t>> digits(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    digits[i].assign(m, 0);
    Nat v = coords[i];
    for (std::uint64_t j = 0; v > 0; ++j) {
      digits[i][m - 1 - j] = static_cast<std::uint32_t>(v % base_);
      v /= base_;
    }
  }

  // The most significant position sees tau adjusted for depth; every later
  // position additionally sees the sigma of each digit already emitted,
  // newest applied last.
  Permutation current =
      compose(perm_power_u64(sigmas_[0].inverse(), m - 1), tau_);
  Nat z = 0;
  for (std::uint64_t j = 0; j < m; ++j) {
    std::uint32_t tuple_symbol = 0;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      tuple_symbol = tuple_symbol * base_ + digits[i][j];
    }
    const std::uint32_t out = current(tuple_symbol);
    z = z * symbol_count_ + out;
    if (j + 1 < m) current = compose(sigmas_[out], current);
  }
  return z;
}

std::vector<Nat> CurveSpec::decode(const Nat& z) const {
  if (z < 0) throw std::domain_error("decode: negative input");
  std::vector<std::uint32_t> zdigits;  // most significant first
  {
    Nat v = z;
    while (v > 0) {
      zdigits.push_back(static_cast<std::uint32_t>(v % symbol_count_));
      v /= symbol_count_;
    }
    std::reverse(zdigits.begin(), zdigits.end());
  }
  std::vector<Nat> coords(dim_, Nat(0));
  if (zdigits.empty()) return coords;
  const std::uint64_t m = zdigits.size();

  // Inverse of the encode-side mapping; each consumed digit appends its
  // sigma-inverse on the input side.
  Permutation current = compose(tau_.inverse(), perm_power_u64(sigmas_[0], m - 1));
  for (std::uint64_t j = 0; j < m; ++j) {
    std::uint32_t tuple_symbol = current(zdigits[j]);
    std::vector<std::uint32_t> parts(dim_);
    for (std::uint32_t i = dim_; i-- > 0;) {
      parts[i] = tuple_symbol % base_;
      tuple_symbol /= base_;
    }
    for (std::uint32_t i = 0; i < dim_; ++i) {
      coords[i] = coords[i] * base_ + parts[i];
    }
    if (j + 1 < m) current = compose(current, sigmas_[zdigits[j]].inverse());
  }
  return coords;
}

}  // namespace pairkit
