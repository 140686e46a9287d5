#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "apolar/io.hpp"
#include "apolar/repro.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace apolar;
using apolar::io::json;
using cli::dispatch;

namespace {

json run_json(const std::vector<std::string>& args) {
  cli::CommandResult r = dispatch(args);
  INFO(r.err);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented invocations") {
    json a = run_json({"annihilator", "--form", "x1^2*(y1^2+y2^2)", "--m", "1", "--n", "2"});
    CHECK(a["generators"] == json::array({"X1^3", "Y1^2-Y2^2", "Y1*Y2"}));

    json r = run_json({"rank-bounds", "--family", "general", "--m", "3", "--n", "3"});
    CHECK(r["lower"] == 16);
    CHECK(r["upper"] == 18);

    json h = run_json({"hilbert", "--family", "m2", "--n", "3"});
    CHECK(h["values"] == json::array({1, 5, 10, 12}));
    CHECK(h["stable"] == 12);
  }

  TEST_CASE("commands are thin adapters") {
    FamilySpec s = FamilySpec::m1(3);
    CHECK(run_json({"extract", "--family", "m1", "--n", "3", "--mode", "approx"}) ==
          io::to_json(extract_points(construct_minimal_apolar(s), s, PointMode::kApprox)));
    CHECK(run_json({"ecomp-bound", "--family", "mps", "--a", "1,1", "--b", "2", "--n", "2"}) ==
          io::to_json(ecomp_lower_bound(FamilySpec::monomial_powersum({1, 1}, 2, 2))));
    FamilySpec m2 = FamilySpec::m2(3, {Scalar(1), Scalar(2)}, {Scalar(3), Scalar(-1)});
    CHECK(run_json({"census", "--family", "m2", "--n", "3", "--alpha", "1,2", "--beta", "3,-1"}) ==
          io::to_json(second_projection_census(m2)));
    CHECK(run_json({"verify-structure", "--family", "m2", "--n", "2"}) ==
          io::to_json(incidence_structure(family_points(FamilySpec::m2(2), PointMode::kExact).points, FamilySpec::m2(2))));
  }

  TEST_CASE("remaining subcommands") {
    CHECK(run_json({"apolar-check", "--family", "m1", "--n", "2"})["apolar"] == true);
    CHECK(run_json({"apolar-check", "--m", "1", "--n", "2", "--form", "x^2*(y1^2+y2^2)", "--ideal", "Y1*Y2,X1^3+X1*(Y1^2-Y2^2)"})["apolar"] == true);
    cli::CommandResult no = dispatch({"apolar-check", "--m", "1", "--n", "2", "--form", "x^2*(y1^2+y2^2)", "--ideal", "X1^2"});
    CHECK(no.exit_code == 1);

    json c = run_json({"construct", "--family", "m3", "--n", "2"});
    CHECK(c["degree"] == 12);
    CHECK(c["claimed"] == 12);

    json d = run_json({"decompose", "--family", "m1", "--n", "2"});
    CHECK(d["exact"] == true);
    CHECK(d["verification"]["residual"] == 0.0);

    CHECK(run_json({"forbidden", "--family", "m1", "--n", "2", "--point", "1,1,i"})["forbidden"] == true);
    CHECK(run_json({"forbidden", "--family", "m1", "--n", "2", "--point", "1,1,0"})["forbidden"] == false);

    json w = run_json({"witness", "--family", "m1", "--n", "2", "--point", "1,3/5,4/5"});
    CHECK(w["contains_point"] == true);
    CHECK(w["apolar"] == true);

    json p = run_json({"project", "--family", "m1", "--n", "3", "--drop", "X"});
    CHECK(p["count"] == 3);
    CHECK(p["hilbert"] == json::array({1, 3, 3, 3}));
  }

  TEST_CASE("files as inputs") {
    std::string ideal_path = temp_file("apolar_ideal.json", io::to_json(construct_minimal_apolar(FamilySpec::m2(3))).dump());
    CHECK(run_json({"hilbert", "--file", ideal_path})["values"] == json::array({1, 5, 10, 12}));

    std::string pts = temp_file("apolar_points.json", io::to_json(family_points(FamilySpec::m1(2), PointMode::kExact).points).dump());
    json d = run_json({"decompose", "--file", pts, "--m", "1", "--n", "2", "--form", "x^2*(y1^2+y2^2)"});
    CHECK(d["verification"]["passed"] == true);
  }

  TEST_CASE("text format") {
    cli::CommandResult r = dispatch({"hilbert", "--family", "m2", "--n", "3", "--format", "text"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("values: 1 5 10 12") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(dispatch({}).exit_code == 2);
    CHECK(dispatch({"frobnicate"}).exit_code == 2);
    CHECK(dispatch({"hilbert", "--bogus"}).exit_code == 2);
    CHECK(dispatch({"hilbert", "--family", "m2", "--n", "3", "--format", "xml"}).exit_code == 2);
    CHECK(dispatch({"annihilator", "--form", "x1^2+", "--m", "1", "--n", "2"}).exit_code == 2);
    CHECK(dispatch({"rank-bounds", "--family", "m1", "--n", "1"}).exit_code == 2);
    CHECK(dispatch({"witness", "--family", "m1", "--n", "2", "--point", "1,1,i"}).exit_code == 1);
    cli::CommandResult cap = dispatch({"construct", "--family", "m2", "--n", "3", "--order", "lex", "--max-deg", "2"});
    CHECK(cap.exit_code == 3);
    CHECK(cap.err.find("degree-cap") != std::string::npos);
    CHECK(dispatch({"--help"}).exit_code == 0);
  }

  TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"extract", "--family", "m1", "--n", "4", "--mode", "approx"},
             {"decompose", "--family", "m3", "--n", "2"},
             {"witness", "--family", "m2", "--n", "3", "--point", "2,1,1,2,2"},
             {"repro", "--only", "13"}}) {
      cli::CommandResult a = dispatch(args), b = dispatch(args);
      CHECK(a.out == b.out);
      CHECK(a.exit_code == b.exit_code);
    }
  }

  TEST_CASE("seed only moves generic choices") {
    json a = run_json({"repro", "--only", "7,11", "--seed", "0"});
    json b = run_json({"repro", "--only", "7,11", "--seed", "12345"});
    CHECK(a["passed"] == b["passed"]);
    for (std::size_t k = 0; k < a["checks"].size(); ++k) CHECK(a["checks"][k]["passed"] == b["checks"][k]["passed"]);
  }

  TEST_CASE("golden diffs") {
    json golden = repro::load_json_file(APOLAR_GOLDEN_FILE);
    json subset = {{"13", golden["13"]}};
    std::string good = temp_file("apolar_golden_good.json", subset.dump());
    cli::CommandResult ok = dispatch({"repro", "--only", "13", "--golden", good});
    CHECK(ok.exit_code == 0);
    CHECK(ok.err.find("check 13 took") != std::string::npos);

    subset["13"]["degree"][0] = 7;
    std::string bad = temp_file("apolar_golden_bad.json", subset.dump());
    cli::CommandResult r = dispatch({"repro", "--only", "13", "--golden", bad, "--format", "text"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("DIFF check 13 /degree/0: expected 7, got 6") != std::string::npos);

    std::string garbage = temp_file("apolar_golden_garbage.json", "{not json");
    CHECK(dispatch({"repro", "--only", "13", "--golden", garbage}).exit_code == 2);
  }
}
