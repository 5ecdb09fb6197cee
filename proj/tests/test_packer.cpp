#include <doctest.h>

#include <json.hpp>

#include <numeric>
#include <string>
#include <vector>

#include "pairkit/intmath.hpp"
#include "pairkit/packer.hpp"

using pairkit::IntegrityError;
using pairkit::ipow;
using pairkit::len_base;
using pairkit::Nat;
using pairkit::PackPlan;
using pairkit::Proportions;

namespace {

PackPlan make_plan(std::vector<std::uint64_t> widths) {
  return PackPlan::plan(widths);
}

}  // namespace

TEST_SUITE("packer") {

TEST_CASE("plan examples") {
  const PackPlan p = make_plan({32, 48, 64});
  CHECK(p.unit() == 16);
  CHECK(p.total_bits() == 144);
  REQUIRE(p.steps().size() == 2);
  CHECK(p.steps()[0] == Proportions(2, 3));
  CHECK(p.steps()[1] == Proportions(5, 4));

  const PackPlan single = make_plan({8});
  CHECK(single.unit() == 8);
  CHECK(single.total_bits() == 8);
  CHECK(single.steps().empty());

  const PackPlan coprime = make_plan({3, 5});
  CHECK(coprime.unit() == 1);
  CHECK(coprime.total_bits() == 8);
  REQUIRE(coprime.steps().size() == 1);
  CHECK(coprime.steps()[0] == Proportions(3, 5));

  const PackPlan bytes = make_plan({8, 8});
  CHECK(bytes.unit() == 8);
  REQUIRE(bytes.steps().size() == 1);
  CHECK(bytes.steps()[0] == Proportions(1, 1));
}

TEST_CASE("plan constants follow the accumulated widths") {
  for (const std::vector<std::uint64_t>& widths :
       {std::vector<std::uint64_t>{6, 10, 4, 12},
        std::vector<std::uint64_t>{5, 5, 5},
        std::vector<std::uint64_t>{7, 3},
        std::vector<std::uint64_t>{1, 2, 3, 4, 5}}) {
    const PackPlan p = PackPlan::plan(widths);
    const std::uint64_t k =
        std::accumulate(widths.begin(), widths.end(), std::uint64_t{0},
                        [](std::uint64_t acc, std::uint64_t w) {
                          return std::gcd(acc, w);
                        });
    REQUIRE(p.unit() == k);
    std::uint64_t accumulated = widths[0];
    for (std::size_t i = 1; i < widths.size(); ++i) {
      const std::uint64_t g = std::gcd(accumulated / k, widths[i] / k);
      REQUIRE(p.steps()[i - 1] ==
              Proportions(accumulated / k / g, widths[i] / k / g));
      accumulated += widths[i];
    }
  }
}

TEST_CASE("plan errors") {
  CHECK_THROWS_AS(make_plan({}), std::domain_error);
  CHECK_THROWS_AS(make_plan({8, 0, 4}), std::domain_error);
}

TEST_CASE("pack examples") {
  const PackPlan p = make_plan({32, 48, 64});
  const std::vector<Nat> zeros{0, 0, 0};
  CHECK(p.pack(zeros) == 0);
  CHECK(p.unpack(0) == zeros);

  const PackPlan bytes = make_plan({8, 8});
  const std::vector<Nat> maxed{255, 255};
  CHECK(bytes.pack(maxed) == 65535);
  CHECK(bytes.unpack(65535) == maxed);
}

TEST_CASE("full-width values stay inside the bit budget") {
  const PackPlan p = make_plan({32, 48, 64});
  const std::vector<Nat> maxed{ipow(2, 32) - 1, ipow(2, 48) - 1,
                               ipow(2, 64) - 1};
  const Nat packed = p.pack(maxed);
  CHECK(len_base(2, packed) <= 144);
  CHECK(p.unpack(packed) == maxed);

  const std::vector<Nat> mixed{1, 2, 3};
  CHECK(p.unpack(p.pack(mixed)) == mixed);
}

TEST_CASE("round trip and budget, exhaustively on small plans") {
  for (const std::vector<std::uint64_t>& widths :
       {std::vector<std::uint64_t>{2, 3}, std::vector<std::uint64_t>{4, 4},
        std::vector<std::uint64_t>{1, 1, 1}}) {
    const PackPlan p = PackPlan::plan(widths);
    std::vector<Nat> value(widths.size(), Nat(0));
    while (true) {
      const Nat packed = p.pack(value);
      REQUIRE(len_base(2, packed) <= p.total_bits());
      REQUIRE(p.unpack(packed) == value);
      std::size_t i = widths.size();
      bool done = true;
      while (i-- > 0) {
        if (++value[i] < ipow(2, widths[i])) {
          done = false;
          break;
        }
        value[i] = 0;
      }
      if (done) break;
    }
  }
}

TEST_CASE("byte pair covers all 16-bit patterns") {
  // Both fields full: 65536 distinct packed values, each within 16 bits.
  const PackPlan p = make_plan({8, 8});
  std::vector<bool> seen(1 << 16, false);
  for (std::uint32_t x = 0; x < 256; ++x) {
    for (std::uint32_t y = 0; y < 256; ++y) {
      const std::vector<Nat> value{x, y};
      const Nat packed = p.pack(value);
      REQUIRE(packed < (1 << 16));
      const auto index = static_cast<std::size_t>(packed);
      REQUIRE(!seen[index]);
      seen[index] = true;
      REQUIRE(p.unpack(packed) == value);
    }
  }
}

TEST_CASE("pack argument validation") {
  const PackPlan p = make_plan({8, 8});
  const std::vector<Nat> third{1, 2, 3};
  CHECK_THROWS_AS(p.pack(third), std::invalid_argument);
  const std::vector<Nat> wide{256, 0};
  CHECK_THROWS_WITH_AS(p.pack(wide), doctest::Contains("field 0"),
                       std::domain_error);
  const std::vector<Nat> wide2{0, 256};
  CHECK_THROWS_WITH_AS(p.pack(wide2), doctest::Contains("field 1"),
                       std::domain_error);
}

TEST_CASE("unpack rejects values outside the image") {
  const PackPlan p = make_plan({8, 8});
  // 65536 decodes to a 9-bit field under the (1,1) step.
  CHECK_THROWS_AS(p.unpack(65536), IntegrityError);
  const PackPlan q = make_plan({2, 2});
  CHECK_THROWS_AS(q.unpack(16), IntegrityError);
  CHECK_THROWS_AS(p.unpack(Nat(-1)), std::domain_error);
}

TEST_CASE("json round trip") {
  const PackPlan p = make_plan({32, 48, 64});
  const std::string text = p.to_json_text();
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("k") == 16);
  CHECK(doc.at("total_bits") == 144);
  CHECK(doc.at("widths") == nlohmann::json({32, 48, 64}));
  CHECK(doc.at("steps").size() == 2);
  CHECK(doc.at("steps").at(0).at("a") == 2);
  CHECK(doc.at("steps").at(1).at("b") == 4);

  const PackPlan loaded = PackPlan::from_json_text(text);
  CHECK(loaded.unit() == p.unit());
  CHECK(loaded.widths() == p.widths());
  CHECK(loaded.total_bits() == p.total_bits());
  const std::vector<Nat> value{10, 20, 30};
  CHECK(loaded.unpack(loaded.pack(value)) == value);
}

TEST_CASE("json loader re-validates against the widths") {
  CHECK_THROWS_WITH_AS(
      PackPlan::from_json_text(
          R"({"k":8,"widths":[32,48,64],"steps":[{"a":2,"b":3},{"a":5,"b":4}],"total_bits":144})"),
      doctest::Contains("k"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      PackPlan::from_json_text(
          R"({"k":16,"widths":[32,48,64],"steps":[{"a":2,"b":3},{"a":5,"b":4}],"total_bits":100})"),
      doctest::Contains("total_bits"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      PackPlan::from_json_text(
          R"({"k":16,"widths":[32,48,64],"steps":[{"a":2,"b":3}],"total_bits":144})"),
      doctest::Contains("steps"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      PackPlan::from_json_text(
          R"({"k":16,"widths":[32,48,64],"steps":[{"a":2,"b":3},{"a":4,"b":5}],"total_bits":144})"),
      doctest::Contains("steps[1]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      PackPlan::from_json_text(
          R"({"widths":[32,48,64],"steps":[{"a":2,"b":3},{"a":5,"b":4}],"total_bits":144})"),
      doctest::Contains("k"), std::invalid_argument);
  CHECK_THROWS_AS(PackPlan::from_json_text("{ not json"),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      PackPlan::from_json_text(
          R"({"k":0,"widths":[],"steps":[],"total_bits":0})"),
      doctest::Contains("widths"), std::invalid_argument);
}

}  // TEST_SUITE
