#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pairkit/monotone_pairing.hpp"
#include "pairkit/nat.hpp"
#include "pairkit/packer.hpp"
#include "pairkit/proportional.hpp"
#include "pairkit/rosenberg_strong.hpp"
#include "pairkit/sfc.hpp"
#include "pairkit/verify.hpp"

namespace {

using pairkit::Nat;

// Wrong request shape (bad mode word, wrong value count, missing flags):
// reported on stderr with exit code 1, like a flag-level parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<Nat> parse_values(const std::vector<std::string>& words) {
  std::vector<Nat> out;
  out.reserve(words.size());
  for (const std::string& word : words) out.push_back(pairkit::parse_nat(word));
  return out;
}

std::vector<std::uint64_t> parse_widths(const std::string& text) {
  std::vector<std::uint64_t> widths;
  for (const std::string& part : split_commas(text)) {
    const Nat value = pairkit::parse_nat(part);
    if (value > std::numeric_limits<std::uint64_t>::max())
      throw std::domain_error("width out of range: " + part);
    widths.push_back(value.convert_to<std::uint64_t>());
  }
  if (widths.empty()) throw UsageError("--widths needs at least one entry");
  return widths;
}

std::vector<Nat> parse_box(const std::string& text, std::size_t arity) {
  if (text.empty()) throw UsageError("shells needs --box");
  std::vector<Nat> bounds;
  for (const std::string& part : split_commas(text))
    bounds.push_back(pairkit::parse_nat(part));
  if (bounds.size() == 1 && arity > 1) bounds.assign(arity, bounds[0]);
  return bounds;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit_values(bool json, const std::string& command,
                 const std::vector<Nat>& values) {
  if (json) {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    auto result = nlohmann::ordered_json::array();
    for (const Nat& value : values) result.push_back(pairkit::to_string(value));
    doc["result"] = std::move(result);
    std::cout << doc.dump() << "\n";
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << pairkit::to_string(values[i]);
  }
  std::cout << "\n";
}

std::string svg_polyline(const std::vector<std::vector<Nat>>& points) {
  // Unit grid spacing with the origin at the bottom-left corner, so the
  // page shows the curve the way the coordinates read.
  std::uint64_t max_x = 0;
  std::uint64_t max_y = 0;
  for (const auto& point : points) {
    max_x = std::max(max_x, point[0].convert_to<std::uint64_t>());
    max_y = std::max(max_y, point[1].convert_to<std::uint64_t>());
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 -0.5 "
      << (max_x + 1) << ' ' << (max_y + 1) << "\">\n"
      << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.08\""
      << " points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ' ';
    out << points[i][0].convert_to<std::uint64_t>() << ','
        << (max_y - points[i][1].convert_to<std::uint64_t>());
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

void emit_trace(bool json, const std::string& format,
                const std::vector<std::vector<Nat>>& points) {
  if (json || format == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = "curve trace";
    auto list = nlohmann::ordered_json::array();
    for (const auto& point : points) {
      auto tuple = nlohmann::ordered_json::array();
      for (const Nat& c : point) tuple.push_back(c.convert_to<std::uint64_t>());
      list.push_back(std::move(tuple));
    }
    doc["points"] = std::move(list);
    std::cout << doc.dump() << "\n";
  } else if (format == "csv") {
    for (const auto& point : points) {
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << pairkit::to_string(point[i]);
      }
      std::cout << "\n";
    }
  } else if (format == "svg") {
    if (!points.empty() && points.front().size() != 2)
      throw UsageError("svg output needs a 2-D curve");
    std::cout << svg_polyline(points);
  } else {
    throw UsageError("format must be csv, json, or svg");
  }
}

nlohmann::ordered_json witness_json(const pairkit::Counterexample& cex) {
  nlohmann::ordered_json doc;
  doc["predicate"] = cex.predicate;
  auto inputs = nlohmann::ordered_json::array();
  for (const auto& tuple : cex.inputs) {
    auto rendered = nlohmann::ordered_json::array();
    for (const Nat& value : tuple) rendered.push_back(pairkit::to_string(value));
    inputs.push_back(std::move(rendered));
  }
  doc["inputs"] = std::move(inputs);
  auto observed = nlohmann::ordered_json::array();
  for (const Nat& value : cex.observed)
    observed.push_back(pairkit::to_string(value));
  doc["observed"] = std::move(observed);
  doc["detail"] = cex.detail;
  return doc;
}

int emit_check(bool json, const std::string& command,
               const pairkit::CheckResult& result) {
  if (json) {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["pass"] = !result.has_value();
    if (result) doc["witness"] = witness_json(*result);
    std::cout << doc.dump() << "\n";
  } else if (!result) {
    std::cout << "ok\n";
  } else {
    std::cout << "counterexample: " << result->predicate << "\n";
    for (std::size_t i = 0; i < result->inputs.size(); ++i) {
      std::cout << "input " << i << ":";
      for (const Nat& value : result->inputs[i])
        std::cout << ' ' << pairkit::to_string(value);
      std::cout << "\n";
    }
    std::cout << "observed:";
    for (const Nat& value : result->observed)
      std::cout << ' ' << pairkit::to_string(value);
    std::cout << "\n";
    std::cout << "detail: " << result->detail << "\n";
  }
  return result ? 3 : 0;
}

pairkit::CurveSpec resolve_curve(const std::string& name,
                                 const std::string& file) {
  if (name.empty() == file.empty())
    throw UsageError("give exactly one of --curve and --spec");
  if (!name.empty()) return pairkit::CurveSpec::builtin(name);
  return pairkit::CurveSpec::from_json_text(read_file(file));
}

pairkit::TuplerHandle resolve_target(const std::string& target,
                                     std::uint64_t a, std::uint64_t b) {
  if (target == "pab")
    return pairkit::TuplerHandle::from(pairkit::Proportions(a, b));
  if (target.size() > 2 && target.compare(0, 2, "rs") == 0 &&
      target.find_first_not_of("0123456789", 2) == std::string::npos)
    return pairkit::TuplerHandle::rs(std::stoul(target.substr(2)));
  return pairkit::TuplerHandle::from(pairkit::CurveSpec::builtin(target));
}

Nat max_coordinate(std::span<const Nat> point) {
  Nat top = 0;
  for (const Nat& c : point)
    if (c > top) top = c;
  return top;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "integer bijection toolkit: pairing functions, d-tuplers, discrete "
      "space-filling curves, property checkers, and a bit-width key packer"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "emit one JSON object instead of plain text");

  std::uint64_t pair_a = 1;
  std::uint64_t pair_b = 1;
  std::vector<std::string> pair_values;
  CLI::App* cmd_pair = app.add_subcommand("pair", "combine two numbers into one");
  cmd_pair->add_option("--a", pair_a, "left width constant (>= 1)")
      ->capture_default_str();
  cmd_pair->add_option("--b", pair_b, "right width constant (>= 1)")
      ->capture_default_str();
  cmd_pair->add_option("values", pair_values, "x y (decimal or 0x hex)");

  std::uint64_t unpair_a = 1;
  std::uint64_t unpair_b = 1;
  std::vector<std::string> unpair_values;
  CLI::App* cmd_unpair =
      app.add_subcommand("unpair", "split a paired number back into two");
  cmd_unpair->add_option("--a", unpair_a, "left width constant (>= 1)")
      ->capture_default_str();
  cmd_unpair->add_option("--b", unpair_b, "right width constant (>= 1)")
      ->capture_default_str();
  cmd_unpair->add_option("value", unpair_values, "z (decimal or 0x hex)");

  std::uint64_t rs_d = 2;
  std::string rs_mode;
  std::vector<std::string> rs_values;
  CLI::App* cmd_rs =
      app.add_subcommand("rs", "d-dimensional tupling with cubic shells");
  CLI::Option* rs_d_opt =
      cmd_rs->add_option("--d", rs_d, "dimension")->capture_default_str();
  cmd_rs->add_option("mode", rs_mode, "pair|unpair")->required();
  cmd_rs->add_option("values", rs_values,
                     "coordinates (pair) or the code (unpair)");

  std::string curve_mode;
  std::string curve_name;
  std::string curve_file;
  std::string trace_format = "csv";
  std::uint64_t trace_count = 0;
  std::vector<std::string> curve_values;
  CLI::App* cmd_curve =
      app.add_subcommand("curve", "space-filling-curve encode, decode, trace");
  cmd_curve->add_option("mode", curve_mode, "encode|decode|trace")->required();
  cmd_curve->add_option("--curve", curve_name, "built-in curve name");
  cmd_curve->add_option("--spec", curve_file, "curve description JSON file");
  CLI::Option* count_opt =
      cmd_curve->add_option("--count", trace_count, "number of trace points");
  cmd_curve->add_option("--format", trace_format, "csv|json|svg")
      ->capture_default_str();
  cmd_curve->add_option("values", curve_values,
                        "coordinates (encode) or the code (decode)");

  std::string verify_mode;
  std::string verify_target;
  std::string verify_s = "max";
  std::string verify_box;
  std::string verify_zmax = "1000";
  std::uint64_t verify_a = 1;
  std::uint64_t verify_b = 1;
  std::uint64_t verify_n = 2;
  std::uint64_t verify_kmax = 2;
  std::uint64_t verify_budget = 1000000;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run a property check; exit 3 with a witness on failure");
  cmd_verify->add_option("mode", verify_mode,
                         "bijection|perfect|proportional|shells")
      ->required();
  cmd_verify
      ->add_option("--target", verify_target,
                   "pab | rs<d> | built-in curve name")
      ->required();
  cmd_verify->add_option("--a", verify_a,
                         "left constant (pab target, proportional check)")
      ->capture_default_str();
  cmd_verify->add_option("--b", verify_b, "right constant")
      ->capture_default_str();
  cmd_verify->add_option("--n", verify_n, "digit base")->capture_default_str();
  cmd_verify->add_option("--kmax", verify_kmax, "largest digit count checked")
      ->capture_default_str();
  cmd_verify
      ->add_option("--budget", verify_budget,
                   "sampled points when a box is too large to enumerate")
      ->capture_default_str();
  cmd_verify->add_option("--s", verify_s, "shell function: max | len")
      ->capture_default_str();
  cmd_verify->add_option(
      "--box", verify_box,
      "comma-separated exclusive bounds; a single value covers every axis");
  cmd_verify->add_option("--zmax", verify_zmax,
                         "largest code checked by bijection")
      ->capture_default_str();

  std::string pack_mode;
  std::string pack_widths;
  std::string pack_plan_file;
  std::vector<std::string> pack_values;
  CLI::App* cmd_pack =
      app.add_subcommand("pack", "bit-width key packing and unpacking");
  cmd_pack->add_option("mode", pack_mode, "plan|encode|decode")->required();
  cmd_pack->add_option("--widths", pack_widths,
                       "comma-separated field bit widths");
  cmd_pack->add_option("--plan", pack_plan_file, "plan JSON file");
  cmd_pack->add_option("values", pack_values,
                       "field values (encode) or the packed value (decode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_pair->parsed()) {
      if (pair_values.size() != 2)
        throw UsageError("pair needs exactly two values");
      const pairkit::Proportions p(pair_a, pair_b);
      emit_values(json_out, "pair",
                  {p.pair(pairkit::parse_nat(pair_values[0]),
                          pairkit::parse_nat(pair_values[1]))});
      return 0;
    }

    if (cmd_unpair->parsed()) {
      if (unpair_values.size() != 1)
        throw UsageError("unpair needs exactly one value");
      const pairkit::Proportions p(unpair_a, unpair_b);
      const auto [x, y] = p.unpair_fast(pairkit::parse_nat(unpair_values[0]));
      emit_values(json_out, "unpair", {x, y});
      return 0;
    }

    if (cmd_rs->parsed()) {
      if (rs_mode == "pair") {
        if (rs_values.empty()) throw UsageError("rs pair needs values");
        if (rs_d_opt->count() == 0) rs_d = rs_values.size();
        if (rs_values.size() != rs_d)
          throw UsageError("rs pair with --d " + std::to_string(rs_d) +
                           " needs " + std::to_string(rs_d) + " values");
        const std::vector<Nat> coords = parse_values(rs_values);
        emit_values(json_out, "rs pair", {pairkit::rs_pair(coords)});
      } else if (rs_mode == "unpair") {
        if (rs_values.size() != 1)
          throw UsageError("rs unpair needs exactly one value");
        emit_values(
            json_out, "rs unpair",
            pairkit::rs_unpair(rs_d, pairkit::parse_nat(rs_values[0])));
      } else {
        throw UsageError("rs mode must be pair or unpair");
      }
      return 0;
    }

    if (cmd_curve->parsed()) {
      const pairkit::CurveSpec spec = resolve_curve(curve_name, curve_file);
      if (curve_mode == "encode") {
        if (curve_values.size() != spec.dim())
          throw UsageError("encode for " + spec.name() + " needs " +
                           std::to_string(spec.dim()) + " coordinates");
        const std::vector<Nat> coords = parse_values(curve_values);
        emit_values(json_out, "curve encode", {spec.encode(coords)});
      } else if (curve_mode == "decode") {
        if (curve_values.size() != 1)
          throw UsageError("decode needs exactly one value");
        emit_values(json_out, "curve decode",
                    spec.decode(pairkit::parse_nat(curve_values[0])));
      } else if (curve_mode == "trace") {
        if (count_opt->count() == 0) throw UsageError("trace needs --count");
        std::vector<std::vector<Nat>> points;
        points.reserve(trace_count);
        for (std::uint64_t z = 0; z < trace_count; ++z)
          points.push_back(spec.decode(z));
        emit_trace(json_out, trace_format, points);
      } else {
        throw UsageError("curve mode must be encode, decode, or trace");
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      const pairkit::TuplerHandle target =
          resolve_target(verify_target, verify_a, verify_b);
      const std::string command = "verify " + verify_mode;
      pairkit::CheckResult result;
      if (verify_mode == "bijection") {
        result =
            pairkit::check_bijection(target, pairkit::parse_nat(verify_zmax));
      } else if (verify_mode == "perfect") {
        result = pairkit::check_base_n_perfect(target, verify_n, verify_kmax,
                                               verify_budget);
      } else if (verify_mode == "proportional") {
        result = pairkit::check_proportional(
            target, verify_n, pairkit::Proportions(verify_a, verify_b),
            verify_kmax, verify_budget);
      } else if (verify_mode == "shells") {
        const std::vector<Nat> box = parse_box(verify_box, target.arity);
        if (verify_s == "len") {
          result = pairkit::check_base_n_shells(target, verify_n, box);
        } else if (verify_s == "max") {
          result = pairkit::check_shell_numbering(target, max_coordinate, box);
        } else {
          throw UsageError("--s must be max or len");
        }
      } else {
        throw UsageError(
            "verify mode must be bijection, perfect, proportional, or shells");
      }
      return emit_check(json_out, command, result);
    }

    if (cmd_pack->parsed()) {
      if (pack_widths.empty() == pack_plan_file.empty())
        throw UsageError("give exactly one of --widths and --plan");
      const pairkit::PackPlan plan =
          pack_widths.empty()
              ? pairkit::PackPlan::from_json_text(read_file(pack_plan_file))
              : pairkit::PackPlan::plan(parse_widths(pack_widths));
      if (pack_mode == "plan") {
        if (json_out) {
          nlohmann::ordered_json doc;
          doc["command"] = "pack plan";
          doc["plan"] = nlohmann::ordered_json::parse(plan.to_json_text());
          std::cout << doc.dump() << "\n";
        } else {
          std::cout << plan.to_json_text() << "\n";
        }
      } else if (pack_mode == "encode") {
        if (pack_values.size() != plan.widths().size())
          throw UsageError("encode needs one value per field (" +
                           std::to_string(plan.widths().size()) + ")");
        const std::vector<Nat> fields = parse_values(pack_values);
        emit_values(json_out, "pack encode", {plan.pack(fields)});
      } else if (pack_mode == "decode") {
        if (pack_values.size() != 1)
          throw UsageError("decode needs exactly one value");
        emit_values(json_out, "pack decode",
                    plan.unpack(pairkit::parse_nat(pack_values[0])));
      } else {
        throw UsageError("pack mode must be plan, encode, or decode");
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
