#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stripstar/json_io.hpp"
#include "test_support.hpp"

using namespace stripstar;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("series documents round-trip exactly") {
  std::mt19937 rng(0x10aded);
  for (int trial = 0; trial < 50; ++trial) {
    const TruncatedSeries s = testutil::random_series(rng, 24);
    const Json j = series_to_json(s);
    CHECK(j["order"] == 24);
    CHECK(j["coeffs"].size() == 25);
    const TruncatedSeries back = series_from_json(j);
    CHECK(back == s);

    // Dump/parse keeps every double bit-exact.
    const TruncatedSeries reparsed = series_from_json(Json::parse(j.dump()));
    CHECK(reparsed == s);
  }
}

TEST_CASE("series documents are validated") {
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"coeffs": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(R"({"order": 1, "coeffs": [[0,0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(R"({"order": 0, "coeffs": [[0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(R"({"order": 0, "coeffs": [["a", 0]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(R"({"order": 0.5, "coeffs": [[0, 0]]})")),
      std::invalid_argument);
}

TEST_CASE("normalized documents carry and demand the kind tag") {
  const NormalizedFunction f = extremal(Alpha(kPi / 2.0), 8);
  const Json j = normalized_to_json(f);
  CHECK(j["kind"] == "normalized");
  CHECK_NOTHROW(normalized_from_json(j));

  Json wrong = j;
  wrong["kind"] = "schwarz";
  CHECK_THROWS_AS(normalized_from_json(wrong), std::invalid_argument);

  Json not_normalized = series_to_json(TruncatedSeries({0.5, 1.0}));
  CHECK_THROWS_AS(normalized_from_json(not_normalized), std::invalid_argument);
}

TEST_CASE("schwarz documents reuse the series schema with its checks") {
  const Json ok = Json::parse(R"({"order": 2, "coeffs": [[0,0],[0.5,0],[0.2,0]]})");
  CHECK_NOTHROW(schwarz_from_json(ok));

  const Json nonzero = Json::parse(R"({"order": 1, "coeffs": [[0.1,0],[0.5,0]]})");
  CHECK_THROWS_AS(schwarz_from_json(nonzero), std::invalid_argument);

  const Json too_big = Json::parse(R"({"order": 1, "coeffs": [[0,0],[1.5,0]]})");
  CHECK_THROWS_AS(schwarz_from_json(too_big), std::invalid_argument);
}

TEST_CASE("membership report serialization shape") {
  const Alpha alpha(kPi / 2.0);
  const NormalizedFunction f = extremal(alpha, 32);
  const MembershipReport report =
      test_membership(f, StripRegion{alpha}, 0.5, 64);
  const Json j = membership_report_to_json(report);
  CHECK(j["predicate"]["tag"] == "strip");
  CHECK(j["r"] == 0.5);
  CHECK(j["samples"] == 64);
  CHECK(j["worst_margin"].is_number());
  CHECK(j["witness"].is_array());
  CHECK(j["witness"].size() == 2);
}

TEST_CASE("predicate serialization covers every region") {
  CHECK(predicate_to_json(StarlikeRegion{0.25}) ==
        Json({{"tag", "starlike"}, {"beta", 0.25}}));
  CHECK(predicate_to_json(StronglyStarlikeRegion{0.5})["tag"] ==
        "strongly_starlike");
  CHECK(predicate_to_json(ParabolicRegion{}) == Json({{"tag", "parabolic"}}));
  CHECK(predicate_to_json(LemniscateRegion{}) ==
        Json({{"tag", "lemniscate"}}));
  CHECK(predicate_to_json(StripRegion{Alpha(2.0)})["alpha"] == 2.0);
}

TEST_CASE("radius result serialization shape") {
  const Alpha alpha(kPi / 2.0);
  const Json ss = radius_result_to_json(solve(strongly_starlike_problem(alpha, 0.5)));
  CHECK(ss["kind"] == "ss");
  CHECK(ss["gamma"] == 0.5);
  CHECK(ss["roots"].contains("ss"));
  CHECK(ss["iterations"].is_number_integer());

  const Json sl = radius_result_to_json(solve(lemniscate_problem(alpha)));
  CHECK(sl["kind"] == "sl");
  CHECK(sl["gamma"].is_null());
  CHECK(sl["roots"].contains("upper_corner"));
  CHECK(sl["roots"].contains("lower_corner"));
  CHECK(sl["radius"] ==
        std::min(sl["roots"]["upper_corner"].get<double>(),
                 sl["roots"]["lower_corner"].get<double>()));
}

TEST_CASE("significant rounding") {
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(1.0) == 1.0);
  CHECK(round_significant(kPi) == 3.14159265359);
  CHECK(format_significant(kPi) == "3.14159265359");
  CHECK(format_significant(0.5) == "0.5");

  Json j{{"a", kPi}, {"b", Json::array({1.0 / 3.0, 7})}};
  round_numbers(j);
  CHECK(j["a"] == 3.14159265359);
  CHECK(j["b"][0] == 0.333333333333);
  CHECK(j["b"][1] == 7);
}
