#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "finring/harness.hpp"

using namespace finring;

namespace {

const std::vector<std::string>& small_catalog() {
  static const std::vector<std::string> exprs = {
      "Z2", "Z3", "Z4", "Z6", "M2(Z2)", "T2(Z2)", "GR(Z2,C2)", "GR(Z2,C3)", "K(Z2,1)"};
  return exprs;
}

SubjectPtr subject_for(const std::string& expr) {
  auto subjects = make_subjects({expr});
  return subjects.front();
}

// Z4 with one corrupted multiplication entry, validation bypassed.
SubjectPtr corrupted_z4() {
  std::vector<elem> add(16), mul(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      add[i * 4 + j] = static_cast<elem>((i + j) % 4);
      mul[i * 4 + j] = static_cast<elem>((i * j) % 4);
    }
  mul[2 * 4 + 2] = 1;
  auto ring = std::make_shared<const FiniteRing>(FiniteRing::make_unchecked(
      4, std::move(add), std::move(mul), 0, 1, "Z4-corrupt"));
  BuiltRing built{ring, std::make_shared<ZnCodec>(4)};
  return std::make_shared<Subject>("Z4-corrupt", built);
}

}  // namespace

TEST_CASE("the check registry covers the named results") {
  auto checks = list_checks();
  CHECK(checks.size() >= 40);
  for (const char* id :
       {"CHK-axioms", "CHK-closeprod-1", "CHK-closeprod-2", "CHK-closeprod-3",
        "CHK-closeprod-4", "CHK-product", "CHK-quotient", "CHK-unit-decomp",
        "CHK-U-eq-1-plus-Jsharp", "CHK-two-in-J", "CHK-corner-Jsharp",
        "CHK-annihilator", "CHK-corner-element", "CHK-matrix-negative", "CHK-dedekind",
        "CHK-x-characterization", "CHK-reverse", "CHK-clean-equiv",
        "CHK-strongly-clean", "CHK-iff-split", "CHK-UU-quotient",
        "CHK-boolean-quotient", "CHK-J-eq", "CHK-nil-eq", "CHK-unique",
        "CHK-local-family", "CHK-local-idem", "CHK-grouplemma",
        "CHK-groupring-necessity", "CHK-groupring-abelian", "CHK-odd-group",
        "CHK-Ks-radical", "CHK-Ks-conjugation", "CHK-Ks-idempotents",
        "CHK-Ks-diagonal", "CHK-locstr", "CHK-deltanu", "CHK-main-equiv", "CHK-cor8",
        "CHK-six-equiv", "CHK-theorem-j"}) {
    CHECK_MESSAGE(std::any_of(checks.begin(), checks.end(),
                              [&](const CheckInfo& c) { return c.id == id; }),
                  id);
  }
}

TEST_CASE("small catalog: no failures") {
  SuiteReport report = run_suite(small_catalog());
  for (const auto& r : report.results) {
    CHECK_MESSAGE(r.status != CheckStatus::fail,
                  r.check_id << " on " << r.subject << ": " << r.note);
  }
  CHECK(report.count(CheckStatus::pass) > 0);
  CHECK(report.all_passed());
}

TEST_CASE("hypothesis-gated checks skip with a reason") {
  auto z3 = subject_for("Z3");
  CheckResult r = run_check("CHK-two-in-J", *z3);
  CHECK(r.status == CheckStatus::skipped);
  CHECK(r.reason == "not strongly J#-clean");
  // the contrapositive is noted: 2 is not in J(Z3)
  CHECK(r.note.find("2 outside J") != std::string::npos);

  auto z4 = subject_for("Z4");
  CHECK(run_check("CHK-two-in-J", *z4).status == CheckStatus::pass);
  CHECK(run_check("CHK-theorem-j", *z4).status == CheckStatus::pass);
}

TEST_CASE("matrix-negative verifies the displayed unit sum") {
  auto z2 = subject_for("Z2");
  CheckResult r = run_check("CHK-matrix-negative", *z2);
  CHECK(r.status == CheckStatus::pass);
  auto z1 = subject_for("Z1");
  CHECK(run_check("CHK-matrix-negative", *z1).status == CheckStatus::skipped);
}

TEST_CASE("facet checks skip subjects without the facet") {
  auto z4 = subject_for("Z4");
  CheckResult r = run_check("CHK-grouplemma", *z4);
  CHECK(r.status == CheckStatus::skipped);
  CHECK(r.reason.find("facet") != std::string::npos);
}

TEST_CASE("unknown check ids are rejected") {
  auto z4 = subject_for("Z4");
  CHECK_THROWS_AS(run_check("CHK-nope", *z4), Error);
  SuiteOptions options;
  options.only_checks = {"CHK-nope"};
  CHECK_THROWS_AS(run_suite({"Z2"}, options), Error);
}

TEST_CASE("empty catalog is an error") {
  CHECK_THROWS_AS(run_suite({}), EmptyCatalog);
}

TEST_CASE("catalog without group or matrix entries synthesizes derived subjects") {
  SuiteReport report = run_suite({"Z2"});
  bool saw_group = false, saw_ks = false;
  for (const auto& r : report.results) {
    if (r.check_id == "CHK-groupring-abelian" && r.subject == "GR(Z2,C2)") {
      saw_group = true;
    }
    if (r.check_id == "CHK-locstr" && r.subject.rfind("K(Z2,", 0) == 0) saw_ks = true;
    CHECK(r.status != CheckStatus::fail);
  }
  CHECK(saw_group);
  CHECK(saw_ks);
}

TEST_CASE("deterministic reports modulo timing") {
  SuiteOptions options;
  options.only_checks = {"CHK-theorem-j", "CHK-closeprod-1", "CHK-unit-decomp"};
  SuiteReport a = run_suite(small_catalog(), options);
  SuiteReport b = run_suite(small_catalog(), options);
  REQUIRE(a.results.size() == b.results.size());
  auto strip_timing = [](CheckResult r) {
    r.elapsed_ms = 0.0;
    return to_json_line(r);
  };
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(strip_timing(a.results[i]) == strip_timing(b.results[i]));
  }
}

TEST_CASE("parallel run matches the serial run") {
  SuiteOptions serial, parallel;
  serial.only_checks = parallel.only_checks = {"CHK-theorem-j", "CHK-main-equiv",
                                               "CHK-reverse"};
  parallel.jobs = 4;
  SuiteReport a = run_suite(small_catalog(), serial);
  SuiteReport b = run_suite(small_catalog(), parallel);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].check_id == b.results[i].check_id);
    CHECK(a.results[i].subject == b.results[i].subject);
    CHECK(a.results[i].status == b.results[i].status);
  }
}

TEST_CASE("mutation sensitivity: the validator catches the corrupted table") {
  auto bad = corrupted_z4();
  CheckResult r = run_check("CHK-axioms", *bad);
  CHECK(r.status == CheckStatus::fail);
  REQUIRE(r.witness.has_value());
  CHECK(replay_witness(r, *bad));
}

TEST_CASE("mutation sensitivity: checks notice the corruption too") {
  auto bad = corrupted_z4();
  std::size_t failures = 0;
  for (const auto& info : list_checks()) {
    if (info.sort != CheckSort::ring) continue;
    CheckResult r = run_check(info.id, *bad);
    if (r.status == CheckStatus::fail) {
      ++failures;
      CHECK_MESSAGE(replay_witness(r, *bad), info.id << ": " << r.note);
    }
  }
  CHECK(failures >= 1);
}

TEST_CASE("witness replay on genuine passes is trivially true") {
  auto z4 = subject_for("Z4");
  CheckResult r = run_check("CHK-theorem-j", *z4);
  CHECK(r.status == CheckStatus::pass);
  CHECK(replay_witness(r, *z4));
}

TEST_CASE("json lines carry the documented fields") {
  auto z3 = subject_for("Z3");
  CheckResult r = run_check("CHK-two-in-J", *z3);
  std::string line = to_json_line(r);
  CHECK(line.find("\"check\":\"CHK-two-in-J\"") != std::string::npos);
  CHECK(line.find("\"subject\":\"Z3\"") != std::string::npos);
  CHECK(line.find("\"status\":\"skipped\"") != std::string::npos);
  CHECK(line.find("\"reason\":") != std::string::npos);

  SuiteOptions options;
  options.only_checks = {"CHK-dedekind"};
  SuiteReport report = run_suite({"Z2"}, options);
  std::string summary = summary_json(report);
  CHECK(summary.find("\"summary\"") != std::string::npos);
  CHECK(summary.find("\"pass\"") != std::string::npos);
}

TEST_CASE("suite results enumerate each applicable pair exactly once") {
  SuiteReport report = run_suite(small_catalog());
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : report.results) {
    auto key = std::make_pair(r.check_id, r.subject);
    CHECK_MESSAGE(!seen.count(key), r.check_id << " " << r.subject);
    seen.insert(key);
  }
}
