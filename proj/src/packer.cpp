#include "pairkit/packer.hpp"

#include <json.hpp>

#include <limits>
#include <numeric>

#include "pairkit/intmath.hpp"

namespace pairkit {

namespace {

using nlohmann::ordered_json;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw std::domain_error("plan: total width overflows");
  }
  return a + b;
}

}  // namespace

PackPlan PackPlan::plan(std::span<const std::uint64_t> widths) {
  if (widths.empty()) throw std::domain_error("plan: no fields");
  PackPlan p;
  p.widths_.assign(widths.begin(), widths.end());
  p.unit_ = 0;
  p.total_bits_ = 0;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (widths[i] == 0) {
      throw std::domain_error("plan: field " + std::to_string(i) +
                              " has zero width");
    }
    p.unit_ = std::gcd(p.unit_, widths[i]);
    p.total_bits_ = checked_add(p.total_bits_, widths[i]);
  }
  std::uint64_t accumulated = widths[0];
  p.steps_.reserve(widths.size() - 1);
  for (std::size_t i = 1; i < widths.size(); ++i) {
    p.steps_.push_back(
        Proportions(accumulated / p.unit_, widths[i] / p.unit_).reduced());
    accumulated = checked_add(accumulated, widths[i]);
  }
  return p;
}

PackPlan PackPlan::from_json_text(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("pack plan: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("pack plan: not an object");
  for (const char* field : {"k", "widths", "steps", "total_bits"}) {
    if (!doc.contains(field)) {
      throw std::invalid_argument(std::string(field) + ": missing");
    }
  }
  if (!doc["widths"].is_array() || doc["widths"].empty()) {
    throw std::invalid_argument("widths: must be a non-empty array");
  }
  std::vector<std::uint64_t> widths;
  for (const auto& w : doc["widths"]) {
    if (!w.is_number_unsigned()) {
      throw std::invalid_argument("widths: entries must be positive integers");
    }
    widths.push_back(w.get<std::uint64_t>());
  }

  // The widths determine everything else; the remaining fields must agree.
  PackPlan p = plan(widths);
  if (!doc["k"].is_number_unsigned() ||
      doc["k"].get<std::uint64_t>() != p.unit_) {
    throw std::invalid_argument("k: disagrees with widths (expected " +
                                std::to_string(p.unit_) + ")");
  }
  if (!doc["total_bits"].is_number_unsigned() ||
      doc["total_bits"].get<std::uint64_t>() != p.total_bits_) {
    throw std::invalid_argument("total_bits: disagrees with widths (expected " +
                                std::to_string(p.total_bits_) + ")");
  }
  const auto& steps = doc["steps"];
  if (!steps.is_array() || steps.size() != p.steps_.size()) {
    throw std::invalid_argument("steps: expected " +
                                std::to_string(p.steps_.size()) + " entries");
  }
  for (std::size_t i = 0; i < p.steps_.size(); ++i) {
    const auto& s = steps.at(i);
    const std::string field = "steps[" + std::to_string(i) + "]";
    if (!s.is_object() || !s.contains("a") || !s.contains("b") ||
        !s["a"].is_number_unsigned() || !s["b"].is_number_unsigned()) {
      throw std::invalid_argument(field + ": expected {\"a\", \"b\"}");
    }
    if (s["a"].get<std::uint64_t>() != p.steps_[i].a() ||
        s["b"].get<std::uint64_t>() != p.steps_[i].b()) {
      throw std::invalid_argument(
          field + ": disagrees with widths (expected {" +
          std::to_string(p.steps_[i].a()) + ", " +
          std::to_string(p.steps_[i].b()) + "})");
    }
  }
  return p;
}

std::string PackPlan::to_json_text() const {
  ordered_json doc;
  doc["k"] = unit_;
  doc["widths"] = widths_;
  ordered_json steps = ordered_json::array();
  for (const Proportions& s : steps_) {
    steps.push_back(ordered_json{{"a", s.a()}, {"b", s.b()}});
  }
  doc["steps"] = std::move(steps);
  doc["total_bits"] = total_bits_;
  return doc.dump();
}

Nat PackPlan::pack(std::span<const Nat> values) const {
  if (values.size() != widths_.size()) {
    throw std::invalid_argument("pack: expected " +
                                std::to_string(widths_.size()) + " values");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || len_base(2, values[i]) > widths_[i]) {
      throw std::domain_error("pack: field " + std::to_string(i) +
                              " does not fit in " +
                              std::to_string(widths_[i]) + " bits");
    }
  }
  Nat acc = values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    acc = steps_[i - 1].pair(acc, values[i]);
  }
  return acc;
}

std::vector<Nat> PackPlan::unpack(const Nat& packed) const {
  if (packed < 0) throw std::domain_error("unpack: negative input");
  std::vector<Nat> values(widths_.size());
  Nat rest = packed;
  for (std::size_t i = widths_.size(); i-- > 1;) {
    auto [left, field] = steps_[i - 1].unpair(rest);
    values[i] = std::move(field);
    rest = std::move(left);
  }
  values[0] = std::move(rest);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (len_base(2, values[i]) > widths_[i]) {
      throw IntegrityError("unpack: field " + std::to_string(i) +
                           " decodes to " + to_string(values[i]) +
                           ", wider than " + std::to_string(widths_[i]) +
                           " bits; not a packed value for this layout");
    }
  }
  return values;
}

}  // namespace pairkit
