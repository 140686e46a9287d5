#include <doctest.h>

#include "apolar/io.hpp"
#include "support.hpp"

using namespace apolar;
using namespace testing;
using apolar::io::json;

TEST_SUITE("io") {
  TEST_CASE("polynomials round trip") {
    std::mt19937_64 rng(61);
    VarAlphabet a{2, 2, 0};
    for (int k = 0; k < 20; ++k) {
      Polynomial f = rand_homogeneous(rng, a, 3, Side::kForm);
      json j = io::to_json(f);
      CHECK(io::polynomial_from_json(j) == f);
      CHECK(io::polynomial_from_json(json::parse(j.dump())) == f);
    }
  }

  TEST_CASE("ideals round trip") {
    Ideal i = construct_minimal_apolar(FamilySpec::m2(3));
    json j = io::to_json(i);
    CHECK(j["generators"].size() == i.generators.size());
    CHECK(ideal_equal(io::ideal_from_json(j), i));
    VarAlphabet a = i.alphabet;
    CHECK(ideal_equal(io::ideal_from_json(j["generators"], &a), i));
    CHECK_THROWS_AS(io::ideal_from_json(j["generators"]), Error);

    json o = io::to_json(i, MonomialOrder::lex(a.size()));
    CHECK(o["order"]["order"] == "lex");
    CHECK(o["order"]["vars"][0] == "X1");
  }

  TEST_CASE("hilbert function layout") {
    json j = io::to_json(hilbert_function_auto(construct_minimal_apolar(FamilySpec::m2(3))));
    CHECK(j["values"] == json::array({1, 5, 10, 12}));
    CHECK(j["stable"] == 12);
  }

  TEST_CASE("points round trip") {
    Extraction exact = family_points(FamilySpec::m1(2), PointMode::kExact);
    json j = io::to_json(exact.points);
    CHECK(j["mode"] == "exact");
    PointSet back = io::pointset_from_json(j, exact.points.alphabet());
    REQUIRE(back.size() == exact.points.size());
    for (const auto& p : exact.points.points()) CHECK(back.contains(p));

    Extraction approx = family_points(FamilySpec::m1(3), PointMode::kApprox);
    json ja = io::to_json(approx.points);
    CHECK(ja["mode"] == "approx");
    PointSet backa = io::pointset_from_json(json::parse(ja.dump()), approx.points.alphabet());
    for (const auto& p : approx.points.points()) CHECK(backa.contains(p));

    CHECK_THROWS_AS(io::pointset_from_json(j, VarAlphabet{2, 2, 0}), Error);
  }

  TEST_CASE("reports serialize") {
    RankReport r = rank_bounds(FamilySpec::general(3, 3));
    json j = io::to_json(r);
    CHECK(j["lower"] == 16);
    CHECK(j["upper"] == 18);
    CHECK(j["lower_strict_over"] == 15);
    CHECK(j.contains("certificates"));
    json w = io::to_json(waring_witness(pt({1, 1, 0}), FamilySpec::m1(2)));
    CHECK(w["contains_point"] == true);
  }
}
