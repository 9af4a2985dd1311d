#include <cmath>

#include "doctest.h"
#include "wam/report.hpp"

using namespace wam;

TEST_CASE("check modes") {
  CHECK(make_check("a", 1.01, 1.0, Provenance::paper, 0.02, CheckMode::rel).pass);
  CHECK_FALSE(make_check("a", 1.03, 1.0, Provenance::paper, 0.02, CheckMode::rel).pass);
  CHECK(make_check("a", -0.98, -1.0, Provenance::paper, 0.05, CheckMode::abs).pass);
  CHECK(make_check("a", 5.0, 5.0, Provenance::derived, 0.0, CheckMode::at_most).pass);
  CHECK_FALSE(make_check("a", 5.1, 5.0, Provenance::derived, 0.0, CheckMode::at_most).pass);
  CHECK(make_check("a", 0.3, 0.25, Provenance::derived, 0.0, CheckMode::at_least).pass);
  CHECK(make_check("a", 3.0, 0.0, Provenance::derived, 0.0, CheckMode::finite).pass);
  CHECK_FALSE(make_check("a", HUGE_VAL, 0.0, Provenance::derived, 0.0, CheckMode::finite).pass);
  CHECK_FALSE(make_check("a", NAN, 0.0, Provenance::derived, 1.0, CheckMode::abs).pass);
}

TEST_CASE("json layout") {
  ExperimentReport r;
  r.name = "demo";
  r.params["n"] = 4;
  r.add(make_check("x", 1.0, 1.0, Provenance::trivial, 0.0, CheckMode::abs));
  r.add(make_check("y", HUGE_VAL, 0.0, Provenance::derived, 0.0, CheckMode::finite));
  const auto j = to_json(r);
  CHECK(j["name"] == "demo");
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["provenance"] == "TRIVIAL");
  CHECK(j["checks"][1]["computed"] == "inf");
  CHECK(j["pass"] == false);
  CHECK(r.find("y") != nullptr);
  CHECK(r.find("z") == nullptr);
}

TEST_CASE("csv layout") {
  ExperimentReport r;
  r.name = "demo";
  r.add(make_check("norm_a=0.5", 0.1, 0.1, Provenance::paper, 0.02, CheckMode::rel));
  r.add(make_check("has,comma", 1.0, 1.0, Provenance::derived, 0.0, CheckMode::abs));
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("experiment,id,computed,reference,provenance,tol,mode,pass\r\n", 0) == 0);
  CHECK(csv.find("demo,norm_a=0.5,0.10000000000000001,0.10000000000000001,PAPER,0.02,rel,true\r\n") !=
        std::string::npos);
  CHECK(csv.find("\"has,comma\"") != std::string::npos);
  CHECK(to_csv(r) == csv);
}

TEST_CASE("verdict lines") {
  ExperimentReport r;
  r.add(make_check("x", 2.0, 1.0, Provenance::paper, 0.1, CheckMode::abs));
  const std::string v = verdict_lines(r);
  CHECK(v.rfind("FAIL x computed=2", 0) == 0);
  CHECK(v.find("[PAPER]") != std::string::npos);
}
