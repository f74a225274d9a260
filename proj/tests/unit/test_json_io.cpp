#include <doctest.h>

#include "ceresa/errors.hpp"
#include "ceresa/json_io.hpp"
#include "oracles.hpp"

using namespace ceresa;

TEST_CASE("rationals") {
  CHECK(to_json(Rat(-3, 6)) == "-1/2");
  CHECK(rat_from_json(json("7/14")) == Rat(1, 2));
  CHECK(rat_from_json(json(-4)) == Rat(-4));
  CHECK_THROWS_AS(rat_from_json(json(0.5)), DomainError);
  CHECK_THROWS_AS(rat_from_json(json("1/0")), DomainError);
}

TEST_CASE("quartics and points round-trip") {
  oracle::RatGen gen(71);
  for (int i = 0; i < 100; ++i) {
    const DepressedQuartic q{gen.rat(), gen.rat(), gen.rat()};
    CHECK(quartic_from_json(json::parse(to_json(q).dump())) == q);
    const ECPoint P(gen.rat(), gen.rat());
    CHECK(point_from_json(json::parse(to_json(P).dump())) == P);
  }
  CHECK(to_json(ECPoint::infinity()) == "infinity");
  CHECK(point_from_json(json("infinity")) == ECPoint::infinity());
  CHECK_THROWS_AS(point_from_json(json(3)), DomainError);
  CHECK_THROWS_AS(quartic_from_json(json::array()), DomainError);
}

TEST_CASE("verdict_to_json") {
  const DepressedQuartic q{Rat(-12), Rat(1), Rat(-12)};
  const json j = verdict_to_json(q, decide(PicardCurve(q)));
  CHECK(j["chow"]["torsion"] == true);
  CHECK(j["chow"]["point_order"] == 3);
  CHECK(j["griffiths"] == "torsion");
  CHECK(j["I"] == "0");
  CHECK(j["J"] == "13797");
  CHECK(j["disc"] == "-7050267");
  CHECK(j["P"] == json({{"x", "0"}, {"y", "13797"}}));

  const DepressedQuartic r{Rat(1), Rat(0), Rat(1)};
  const json k = verdict_to_json(r, decide(PicardCurve(r)));
  CHECK(k["chow"]["torsion"] == false);
  CHECK_FALSE(k["chow"].contains("point_order"));
  CHECK(k["P_short"] == json({{"x", "52"}, {"y", "280"}}));
}

TEST_CASE("profiles round-trip") {
  for (const char* name : {"picard_c3", "c9_x4px", "klein_c7", "dihedral:15,3,5"}) {
    const auto p = preset_profile(name);
    CHECK(profile_from_json(json::parse(to_json(p).dump())) == p);
  }
  CHECK_THROWS_AS(profile_from_json(json::object()), MalformedProfile);
  CHECK_THROWS_AS(profile_from_json(json::parse(R"({"group_order": 1, "level": 1, "classes": [{"size": "x"}]})")),
                  MalformedProfile);
}

TEST_CASE("strata records") {
  const json j = to_json(stratum_info("G48"));
  CHECK(j["label"] == "G48");
  CHECK(j["dim"] == 0);
  CHECK(j["in_vrat"] == true);
  CHECK(j["in_valg"] == true);
}
