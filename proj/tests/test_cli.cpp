#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Drives the installed binary end to end through popen; the path comes from
// the build system.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "stripstar/json_io.hpp"

using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + (env_prefix.empty() ? "" : " ") +
                              std::string(STRIPSTAR_CLI_PATH) + " " + args +
                              " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("table1 reproduces the reference radii") {
  const RunResult result = run("table1");
  REQUIRE(result.exit_code == 0);
  const Json j = Json::parse(result.output);
  REQUIRE(j["rows"].size() == 3);

  const double expected[] = {0.493918, 0.421547, 0.304506};
  const char* kinds[] = {"ss", "ps", "sl"};
  for (int i = 0; i < 3; ++i) {
    const Json& row = j["rows"][i];
    CHECK(row["kind"] == kinds[i]);
    CHECK(row["matches_paper"] == true);
    CHECK(std::abs(row["radius"].get<double>() - expected[i]) <= 1e-4);
  }
  CHECK(j["rows"][2]["roots"].contains("upper_corner"));
}

TEST_CASE("identical flags produce byte-identical output") {
  const RunResult a = run("table1");
  const RunResult b = run("table1");
  CHECK(a.output == b.output);

  const RunResult c = run("boundary --alpha pi/2 --r 0.5 --samples 32 --format csv");
  const RunResult d = run("boundary --alpha pi/2 --r 0.5 --samples 32 --format csv");
  CHECK(c.output == d.output);
}

TEST_CASE("radius subcommand") {
  const RunResult ss = run("radius --alpha pi/2 --class ss --gamma 0.5");
  REQUIRE(ss.exit_code == 0);
  CHECK(std::abs(Json::parse(ss.output)["radius"].get<double>() - 0.493918) <=
        1e-4);

  const RunResult angle = run("radius --alpha 2pi/3 --class ps");
  REQUIRE(angle.exit_code == 0);
  CHECK(Json::parse(angle.output)["alpha"].get<double>() ==
        doctest::Approx(2.0943951).epsilon(1e-6));

  CHECK(run("radius --alpha pi/2 --class sl --gamma 0.5").exit_code == 2);
  CHECK(run("radius --alpha 0.3 --class ss").exit_code == 2);
  CHECK(run("radius --alpha pi/2 --class xx").exit_code == 2);
  CHECK(run("radius --alpha pi/2 --class ss --gamma 1.5").exit_code == 2);
}

TEST_CASE("coeffs subcommand lists the extremal expansion") {
  const RunResult result = run("coeffs --alpha pi/2 --order 4");
  REQUIRE(result.exit_code == 0);
  const Json j = Json::parse(result.output);
  CHECK(j["kind"] == "normalized");
  CHECK(j["order"] == 4);
  REQUIRE(j["coeffs"].size() == 5);
  CHECK(j["coeffs"][1][0] == 1.0);
  CHECK(j["coeffs"][2][0] == 1.0);
  CHECK(j["coeffs"][3][0] == 0.5);
  CHECK(j["coeffs"][4][0] == doctest::Approx(1.0 / 18.0).epsilon(1e-9));
  for (const Json& flag : j["within_unit_bound"]) CHECK(flag == true);
}

TEST_CASE("coeffs reads a Schwarz polynomial file") {
  const auto path = write_temp(
      "w_squared.json", R"({"order": 2, "coeffs": [[0,0],[0,0],[1,0]]})");
  const RunResult result =
      run("coeffs --alpha pi/2 --order 6 --schwarz " + path.string());
  REQUIRE(result.exit_code == 0);
  const Json j = Json::parse(result.output);
  CHECK(j["coeffs"][2][0] == 0.0);
  CHECK(j["coeffs"][3][0] == 0.5);
}

TEST_CASE("membership subcommand on a written member file") {
  // The Koebe function, exactly representable coefficients.
  Json koebe;
  koebe["order"] = 48;
  koebe["kind"] = "normalized";
  Json coeffs = Json::array();
  for (int n = 0; n <= 48; ++n) {
    coeffs.push_back(Json::array({static_cast<double>(n), 0.0}));
  }
  koebe["coeffs"] = coeffs;
  const auto path = write_temp("koebe.json", koebe.dump());

  const RunResult fail = run("membership --input " + path.string() +
                             " --predicate strip:pi/2 --r 0.9");
  REQUIRE(fail.exit_code == 0);
  const Json report = Json::parse(fail.output);
  CHECK(report["worst_margin"].get<double>() <= -0.1);
  CHECK(report["samples"] == 720);
  CHECK(report["predicate"]["tag"] == "strip");

  const RunResult pass = run("membership --input " + path.string() +
                             " --predicate starlike:0.0 --r 0.5 --samples 64");
  REQUIRE(pass.exit_code == 0);
  CHECK(Json::parse(pass.output)["worst_margin"].get<double>() > 0.0);

  CHECK(run("membership --input /nonexistent.json --predicate parabolic --r 0.5")
            .exit_code == 2);
  CHECK(run("membership --input " + path.string() +
            " --predicate unknown:1 --r 0.5")
            .exit_code == 2);
}

TEST_CASE("bounds subcommand collapses at r = 0") {
  const RunResult result = run("bounds --alpha pi/2 --r 0");
  REQUIRE(result.exit_code == 0);
  const Json j = Json::parse(result.output);
  CHECK(j["re_lower"] == 1.0);
  CHECK(j["re_upper"] == 1.0);
  CHECK(j["im_bound"] == 0.0);
  CHECK(j["max_modulus"] == 1.0);
  CHECK_FALSE(j.contains("disk"));

  const RunResult mid = run("bounds --alpha 2.2 --r 0.7");
  const Json k = Json::parse(mid.output);
  CHECK(k["re_lower"].get<double>() < 1.0);
  CHECK(k["re_upper"].get<double>() > 1.0);
  CHECK(k.contains("disk"));
}

TEST_CASE("boundary emits a closed curve") {
  const RunResult csv =
      run("boundary --alpha pi/2 --r 0.5 --samples 64 --format csv");
  REQUIRE(csv.exit_code == 0);
  std::istringstream lines(csv.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "theta,re_q,im_q");
  int rows = 0;
  std::string first_values, last_values;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (rows == 0) first_values = line.substr(comma);
    last_values = line.substr(line.find(','));
    ++rows;
  }
  CHECK(rows == 65);
  CHECK(first_values == last_values);  // closed curve

  const RunResult json_run =
      run("boundary --alpha pi/2 --r 0.5 --samples 64");
  const Json j = Json::parse(json_run.output);
  CHECK(j["rows"].size() == 65);

  const auto out_path =
      std::filesystem::temp_directory_path() / "boundary_out.csv";
  std::filesystem::remove(out_path);
  const RunResult to_file =
      run("boundary --alpha pi/2 --r 0.5 --samples 16 --format csv --out " +
          out_path.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(std::filesystem::exists(out_path));
}

TEST_CASE("validation failures exit with code 2") {
  CHECK(run("bounds --alpha 1.0 --r 0.5").exit_code == 2);
  CHECK(run("bounds --alpha notanangle --r 0.5").exit_code == 2);
  CHECK(run("boundary --alpha pi/2 --r 1.5 --samples 64").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("order environment override is honored") {
  const RunResult result = run("coeffs --alpha pi/2", "STRIP_STARLIKE_ORDER=8");
  REQUIRE(result.exit_code == 0);
  CHECK(Json::parse(result.output)["order"] == 8);

  const RunResult fallback = run("coeffs --alpha pi/2");
  REQUIRE(fallback.exit_code == 0);
  CHECK(Json::parse(fallback.output)["order"] == 64);

  const RunResult bad = run("coeffs --alpha pi/2", "STRIP_STARLIKE_ORDER=1");
  CHECK(bad.exit_code == 2);
}
