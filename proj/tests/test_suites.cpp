#include <doctest.h>

#include <atomic>

#include "strang/serialize.hpp"
#include "strang/suites.hpp"

using namespace strang;

namespace {

SuiteParams params(int i, int c, const Field& f) {
  SuiteParams p;
  p.family = i;
  p.c = c;
  p.d = 3;
  p.field = f;
  p.maxlen = 6;
  return p;
}

}  // namespace

TEST_CASE("every suite runs and passes at d = 3") {
  const Field f4 = Field::gf(2);
  for (int i : {1, 2})
    for (int c : {0, 1})
      for (const auto& name : suite_names()) {
        const auto r = run_suite(name, params(i, c, name == "mod2_and_ses" || name == "krause" ? Field::gf(1) : f4));
        REQUIRE_FALSE(r.checks.empty());
        for (const auto& ch : r.checks) {
          REQUIRE_FALSE(ch.anchor.empty());
          REQUIRE((ch.kind == "claim" || ch.kind == "oracle" || ch.kind == "structural"));
        }
        CHECK_MESSAGE(r.pass(), report_text(r));
      }
}

TEST_CASE("suites are deterministic") {
  const auto p = params(2, 1, Field::gf(2));
  for (const char* name : {"stablend", "omega", "ar"}) {
    CHECK(to_json(run_suite(name, p)).dump() == to_json(run_suite(name, p)).dump());
  }
}

TEST_CASE("flipping c makes the stable End and omega suites fail") {
  for (int i : {1, 2})
    for (int c : {0, 1}) {
      auto p = params(i, c, Field::gf(2));
      p.corrupt = true;
      CHECK_FALSE(suite_stablend(p).pass());
      CHECK_FALSE(suite_omega(p).pass());
    }
}

TEST_CASE("empty report fails") {
  CheckReport r;
  r.suite = "x";
  CHECK_FALSE(r.pass());
  r.checks.push_back({"a", "claim:a", CheckStatus::skip, "", "", "claim", ""});
  CHECK(r.pass());
  r.checks.push_back({"b", "claim:b", CheckStatus::fail, "", "", "claim", ""});
  CHECK_FALSE(r.pass());
  CHECK(r.count(CheckStatus::fail) == 1);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", SuiteParams{}), Error); }

TEST_CASE("parallel runner keeps job order and rethrows") {
  std::vector<std::function<int()>> jobs;
  for (int k = 0; k < 50; ++k) jobs.push_back([k] { return k * k; });
  const auto out = run_parallel(jobs, 4);
  for (int k = 0; k < 50; ++k) CHECK(out[static_cast<std::size_t>(k)] == k * k);
  jobs.push_back([]() -> int { throw Error("boom", "x"); });
  CHECK_THROWS_AS(run_parallel(jobs, 3), Error);
}

TEST_CASE("pd suite") {
  const auto r = suite_pd(12);
  CHECK(r.pass());
  CHECK(r.checks.size() > 40);
}
