#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pairkit/nat.hpp"
#include "pairkit/packer.hpp"
#include "pairkit/proportional.hpp"
#include "pairkit/sfc.hpp"

using pairkit::Nat;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string shell_quote(const std::string& raw) {
  std::string quoted = "'";
  for (char c : raw) {
    if (c == '\'')
      quoted += "'\\''";
    else
      quoted += c;
  }
  quoted += '\'';
  return quoted;
}

// Runs a full /bin/sh command line, capturing stdout and the exit status.
RunResult run_shell(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

RunResult run_cli(const std::vector<std::string>& args) {
  std::string command = shell_quote(PAIRKIT_CLI_PATH);
  for (const std::string& arg : args) command += ' ' + shell_quote(arg);
  return run_shell(command);
}

std::string cli_path() { return shell_quote(PAIRKIT_CLI_PATH); }

std::string write_temp(const std::string& stem, const std::string& text) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / stem;
  std::ofstream out(path);
  out << text;
  out.close();
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pair prints the combined value") {
  RunResult r = run_cli({"pair", "--a", "3", "--b", "2", "8", "4"});
  CHECK(r.status == 0);
  CHECK(r.out == "76\n");

  r = run_cli({"pair", "--a", "1", "--b", "4", "1", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "16\n");

  r = run_cli({"pair", "3", "5"});
  CHECK(r.status == 0);
  CHECK(r.out == "28\n");
}

TEST_CASE("unpair prints both halves on one line") {
  RunResult r = run_cli({"unpair", "--a", "1", "--b", "1", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 0\n");

  r = run_cli({"unpair", "--a", "3", "--b", "2", "76"});
  CHECK(r.status == 0);
  CHECK(r.out == "8 4\n");
}

TEST_CASE("rs pair and unpair") {
  RunResult r = run_cli({"rs", "--d", "2", "pair", "2", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "7\n");

  r = run_cli({"rs", "pair", "2", "1"});  // dimension inferred from the values
  CHECK(r.status == 0);
  CHECK(r.out == "7\n");

  r = run_cli({"rs", "--d", "3", "unpair", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 0 0\n");

  r = run_cli({"rs", "--d", "3", "unpair", "4"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 0 1\n");
}

TEST_CASE("curve encode, decode, and csv trace") {
  RunResult r = run_cli({"curve", "encode", "--curve", "hilbert2", "1", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");

  r = run_cli({"curve", "decode", "--curve", "zorder2", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 0\n");

  r = run_cli({"curve", "trace", "--curve", "peano3", "--count", "3",
               "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "0,0\n0,1\n0,2\n");
}

TEST_CASE("svg trace is a single flipped-axis polyline") {
  const RunResult r = run_cli(
      {"curve", "trace", "--curve", "hilbert2", "--count", "4", "--format",
       "svg"});
  CHECK(r.status == 0);
  CHECK(r.out.find("<svg ") != std::string::npos);
  CHECK(r.out.find("viewBox=\"-0.5 -0.5 2 2\"") != std::string::npos);
  CHECK(r.out.find("<polyline") != std::string::npos);
  // decode order (0,0)(0,1)(1,1)(1,0), drawn with y growing upward.
  CHECK(r.out.find("points=\"0,1 0,0 1,0 1,1\"") != std::string::npos);
}

TEST_CASE("curve spec file") {
  const std::string path =
      write_temp("pairkit_cli_curve_spec.json",
                 pairkit::CurveSpec::builtin("hilbert2").to_json_text());
  const RunResult r = run_cli({"curve", "encode", "--spec", path, "1", "1"});
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("hex input is accepted") {
  RunResult r = run_cli({"unpair", "--a", "3", "--b", "2", "0x4c"});
  CHECK(r.status == 0);
  CHECK(r.out == "8 4\n");

  r = run_cli({"rs", "pair", "0x2", "0x1"});
  CHECK(r.status == 0);
  CHECK(r.out == "7\n");
}

TEST_CASE("values beyond 64 bits round-trip through the tool") {
  const Nat x = Nat(1) << 80;
  const Nat y = (Nat(1) << 79) + 12345;
  const pairkit::Proportions p(3, 2);
  const Nat z = p.pair(x, y);
  RunResult r = run_cli({"pair", "--a", "3", "--b", "2", pairkit::to_string(x),
                         pairkit::to_string(y)});
  CHECK(r.status == 0);
  CHECK(r.out == pairkit::to_string(z) + "\n");

  r = run_cli({"unpair", "--a", "3", "--b", "2", pairkit::to_string(z)});
  CHECK(r.status == 0);
  CHECK(r.out == pairkit::to_string(x) + " " + pairkit::to_string(y) + "\n");
}

TEST_CASE("encode output pipes into the matching decode") {
  RunResult r = run_shell(cli_path() + " unpair --a 3 --b 2 $(" + cli_path() +
                          " pair --a 3 --b 2 8 4)");
  CHECK(r.status == 0);
  CHECK(r.out == "8 4\n");

  r = run_shell(cli_path() + " pack decode --widths 8,8 $(" + cli_path() +
                " pack encode --widths 8,8 255 255)");
  CHECK(r.status == 0);
  CHECK(r.out == "255 255\n");

  r = run_shell(cli_path() + " curve decode --curve hilbert3 $(" + cli_path() +
                " curve encode --curve hilbert3 1 1 1)");
  CHECK(r.status == 0);
  CHECK(r.out == "1 1 1\n");
}

TEST_CASE("json output carries the same values") {
  RunResult r = run_cli({"--json", "pair", "--a", "3", "--b", "2", "8", "4"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("command") == "pair");
  CHECK(doc.at("result") == nlohmann::json({"76"}));

  r = run_cli({"--json", "unpair", "--a", "3", "--b", "2", "76"});
  CHECK(r.status == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("result") == nlohmann::json({"8", "4"}));

  r = run_cli({"--json", "curve", "trace", "--curve", "peano3", "--count",
               "3"});
  CHECK(r.status == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("command") == "curve trace");
  CHECK(doc.at("points") ==
        nlohmann::json({{0, 0}, {0, 1}, {0, 2}}));
}

TEST_CASE("verify passes exit 0 and print ok") {
  RunResult r =
      run_cli({"verify", "perfect", "--target", "rs2", "--n", "2", "--kmax",
               "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "ok\n");

  r = run_cli({"verify", "proportional", "--target", "pab", "--a", "3", "--b",
               "2", "--n", "2", "--kmax", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "ok\n");

  r = run_cli({"verify", "bijection", "--target", "gray2", "--zmax", "512"});
  CHECK(r.status == 0);
  CHECK(r.out == "ok\n");
}

TEST_CASE("verify failures exit 3 with a witness") {
  RunResult r = run_cli({"verify", "shells", "--target", "hilbert2", "--s",
                         "max", "--box", "8"});
  CHECK(r.status == 3);
  CHECK(r.out.find("counterexample: shell_numbering") != std::string::npos);
  CHECK(r.out.find("observed:") != std::string::npos);

  r = run_cli({"verify", "shells", "--target", "hilbert2", "--s", "len",
               "--n", "3", "--box", "9"});
  CHECK(r.status == 3);

  r = run_cli({"--json", "verify", "shells", "--target", "hilbert2", "--s",
               "max", "--box", "8"});
  CHECK(r.status == 3);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("pass") == false);
  CHECK(doc.at("witness").at("predicate") == "shell_numbering");
  CHECK(doc.at("witness").at("inputs").size() == 2);
}

TEST_CASE("pack plan, encode, decode") {
  RunResult r = run_cli({"pack", "plan", "--widths", "32,48,64"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("k") == 16);
  CHECK(doc.at("total_bits") == 144);
  CHECK(doc.at("steps").at(0).at("a") == 2);
  CHECK(doc.at("steps").at(0).at("b") == 3);
  CHECK(doc.at("steps").at(1).at("a") == 5);
  CHECK(doc.at("steps").at(1).at("b") == 4);

  r = run_cli({"pack", "encode", "--widths", "8,8", "255", "255"});
  CHECK(r.status == 0);
  CHECK(r.out == "65535\n");

  r = run_cli({"pack", "decode", "--widths", "8,8", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0 0\n");
}

TEST_CASE("pack plan file") {
  const std::vector<std::uint64_t> widths{32, 48, 64};
  const pairkit::PackPlan plan = pairkit::PackPlan::plan(widths);
  const std::string path =
      write_temp("pairkit_cli_pack_plan.json", plan.to_json_text());
  const std::vector<Nat> fields{7, 11, 13};
  const Nat packed = plan.pack(fields);
  const RunResult r =
      run_cli({"pack", "encode", "--plan", path, "7", "11", "13"});
  CHECK(r.status == 0);
  CHECK(r.out == pairkit::to_string(packed) + "\n");
}

TEST_CASE("usage problems exit 1") {
  CHECK(run_cli({}).status == 1);
  CHECK(run_cli({"frobnicate"}).status == 1);
  CHECK(run_cli({"pair", "1"}).status == 1);
  CHECK(run_cli({"rs", "twirl", "1"}).status == 1);
  CHECK(run_cli({"curve", "trace", "--curve", "hilbert2"}).status == 1);
  CHECK(run_cli({"curve", "encode", "1", "1"}).status == 1);
  CHECK(run_cli({"pack", "encode", "1", "2"}).status == 1);
}

TEST_CASE("domain problems exit 2") {
  CHECK(run_cli({"pair", "--a", "0", "--b", "1", "1", "2"}).status == 2);
  CHECK(run_cli({"curve", "encode", "--curve", "bogus", "0", "0"}).status == 2);
  CHECK(run_cli({"pair", "abc", "3"}).status == 2);
  CHECK(run_cli({"pack", "decode", "--widths", "8,8", "65536"}).status == 2);
  CHECK(run_cli({"curve", "encode", "--spec", "/no/such/file.json", "1", "1"})
            .status == 2);
}

TEST_CASE("help exits 0") {
  const RunResult r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("pair") != std::string::npos);
}

}  // TEST_SUITE
