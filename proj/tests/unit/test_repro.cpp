#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "weylkit/repro.hpp"

using namespace weylkit;
using weylkit::testing::error_kind;

TEST_CASE("full report has no failures and the known discrepancies") {
  const ReproReport r = reproduce("all");
  CHECK(r.ok());
  CHECK(r.count(CaseStatus::Fail) == 0);
  std::set<std::string> ids, discrepancies;
  for (const auto& c : r.cases) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.reference.empty());
    if (c.status == CaseStatus::Discrepancy) {
      discrepancies.insert(c.id);
      CHECK_FALSE(c.notes.empty());
    }
  }
  const std::set<std::string> expected{
      "takenawa.t_eta1.simple_images", "takenawa.T2.word", "secondvar.normalizer.beta.exchange",
      "os.T2.geb_images",              "os.T2.vector",     "os.T1.word",
      "os.T2.word",                    "os.T3.word",       "examples.a3.t2.word",
  };
  CHECK(discrepancies == expected);
}

TEST_CASE("suites partition the report") {
  std::size_t total = 0;
  for (const auto& s : repro_suites()) {
    const ReproReport r = reproduce(s);
    CHECK_FALSE(r.cases.empty());
    for (const auto& c : r.cases) CHECK(c.id.rfind(s + ".", 0) == 0);
    total += r.cases.size();
  }
  CHECK(total == reproduce("all").cases.size());
}

TEST_CASE("report is deterministic") {
  const ReproReport a = reproduce("geb");
  const ReproReport b = reproduce("geb");
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].id == b.cases[i].id);
    CHECK(a.cases[i].computed == b.cases[i].computed);
  }
}

TEST_CASE("status names and unknown suites") {
  CHECK(to_string(CaseStatus::Pass) == "pass");
  CHECK(to_string(CaseStatus::Fail) == "fail");
  CHECK(to_string(CaseStatus::Discrepancy) == "discrepancy");
  CHECK(error_kind([] { reproduce("nope"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("the os suite reports T1 = h1 - h2") {
  const ReproReport r = reproduce("os");
  bool seen = false;
  for (const auto& c : r.cases)
    if (c.id == "os.T1.vector") {
      seen = true;
      CHECK(c.status == CaseStatus::Pass);
      CHECK(c.computed == "h1 - h2");
    }
  CHECK(seen);
}
