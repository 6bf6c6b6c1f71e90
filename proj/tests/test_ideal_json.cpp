#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "decayideal/errors.hpp"
#include "decayideal/ideal_json.hpp"
#include "oracle.hpp"

using namespace decayideal;

TEST(IdealJson, Format) {
  Ring r({"x", "y"});
  auto ideal = MonomialIdeal::parse(r, "x^2, x*y, y^3");
  EXPECT_EQ(ideal_to_json(ideal), R"({"variables":["x","y"],"generators":[[0,3],[1,1],[2,0]]})");
  EXPECT_EQ(ideal_to_json(MonomialIdeal::zero(r)), R"({"variables":["x","y"],"generators":[]})");
  EXPECT_EQ(ideal_to_json(MonomialIdeal::unit(r)), R"({"variables":["x","y"],"generators":[[0,0]]})");
}

TEST(IdealJson, ParsesNonCanonicalInput) {
  auto ideal = ideal_from_json(R"({"variables":["x","y"],"generators":[[3,0],[2,0],[2,1],[0,1]]})");
  EXPECT_EQ(ideal.to_string(), "(y, x^2)");
}

TEST(IdealJson, RoundTripIsExact) {
  std::mt19937_64 rng(7);
  for (std::size_t nvars = 1; nvars <= 5; ++nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("v" + std::to_string(i));
    Ring r(names);
    for (int trial = 0; trial < 40; ++trial) {
      auto ideal = oracle::random_ideal(rng, r, 6, 6, true);
      auto text = ideal_to_json(ideal);
      auto back = ideal_from_json(text);
      EXPECT_EQ(back, ideal);
      EXPECT_EQ(ideal_to_json(back), text);
    }
  }
}

TEST(IdealJson, RejectsMalformedInput) {
  for (const char* bad : {
           "",
           "[]",
           "{\"variables\":[\"x\"]}",
           "{\"variables\":\"x\",\"generators\":[]}",
           "{\"variables\":[1],\"generators\":[]}",
           "{\"variables\":[\"x\"],\"generators\":[[1,2]]}",
           "{\"variables\":[\"x\"],\"generators\":[[-1]]}",
           "{\"variables\":[\"x\"],\"generators\":[[1.5]]}",
           "{\"variables\":[\"x\"],\"generators\":[1]}",
       }) {
    EXPECT_THROW(ideal_from_json(bad), Error) << bad;
  }
}

TEST(IdealJson, ConstructionMeta) {
  auto d = build(DecaySequence::parse("6,5,5,4,2,1"), 6);
  auto doc = nlohmann::json::parse(construction_to_json(d));
  EXPECT_EQ(doc["meta"]["q"], nlohmann::json({6, 5, 5, 4, 2, 1}));
  EXPECT_EQ(doc["meta"]["n"], 6);
  EXPECT_EQ(doc["meta"]["m"], 6);
  EXPECT_EQ(doc["meta"]["t"], nlohmann::json({0, -1, 0, 1, 0, 0}));
  EXPECT_EQ(doc["meta"]["J"], nlohmann::json({1, 3, 4, 5}));
  EXPECT_EQ(doc["meta"]["K"], nlohmann::json({4}));
  doc.erase("meta");
  EXPECT_EQ(ideal_from_json(doc.dump()), d.ideal);
}
