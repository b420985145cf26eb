#include "catpart/error.hpp"
#include "catpart/verify.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace catpart;

namespace {

const SuiteResult& suite(const VerifyReport& report, const std::string& name) {
  for (const auto& s : report.suites) {
    if (s.name == name) return s;
  }
  throw std::runtime_error("no suite " + name);
}

}  // namespace

TEST_CASE("every suite passes at the default scale") {
  const auto report = run_verify(VerifyOptions{});
  CHECK(report.passed());
  CHECK(report.suites.size() == verify_suite_names().size());
  for (const auto& s : report.suites) {
    CHECK_MESSAGE(s.status == SuiteStatus::pass, s.name << ": " << s.counterexample);
    CHECK(s.examined > 0);
  }
}

TEST_CASE("suites are reported in declaration order") {
  VerifyOptions options;
  options.max_parts = 3;
  const auto report = run_verify(options);
  const auto names = verify_suite_names();
  REQUIRE(report.suites.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(report.suites[i].name == names[i]);
}

TEST_CASE("max_m = 0 skips the Omega suites but still names them") {
  VerifyOptions options;
  options.max_parts = 4;
  options.max_m = 0;
  const auto report = run_verify(options);
  CHECK(report.passed());
  CHECK(suite(report, "omega-cardinality").status == SuiteStatus::skipped);
  CHECK(suite(report, "forest-bijection").status == SuiteStatus::skipped);
  CHECK(suite(report, "closed-form-square").status == SuiteStatus::pass);
  CHECK(report.to_text().find("SKIP  omega-cardinality") != std::string::npos);
}

TEST_CASE("covering detail at ell = 4") {
  VerifyOptions options;
  options.max_parts = 4;
  const auto report = run_verify(options);
  CHECK(suite(report, "covering-disjointness").detail.find("P^4: 35 = 14+5+(2+4)+(2+8)") != std::string::npos);
}

TEST_CASE("an injected fault is caught with a counterexample") {
  VerifyOptions options;
  options.max_parts = 4;
  options.max_m = 2;
  options.mutation = "flip-omega-inequality";
  const auto report = run_verify(options);
  CHECK_FALSE(report.passed());
  const auto& broken = suite(report, "closed-form-omega");
  CHECK(broken.status == SuiteStatus::fail);
  CHECK_FALSE(broken.counterexample.empty());
  CHECK(report.to_text().find("counterexample:") != std::string::npos);
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j.at("passed") == false);
}

TEST_CASE("bad options") {
  VerifyOptions options;
  options.mutation = "nonsense";
  CHECK_THROWS_AS(run_verify(options), Error);
  options.mutation.reset();
  options.max_parts = 0;
  CHECK_THROWS_AS(run_verify(options), Error);
  options.max_parts = 9;
  options.cap = 100;
  try {
    run_verify(options);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}

TEST_CASE("text output is reproducible; JSON carries wall times") {
  VerifyOptions options;
  options.max_parts = 4;
  CHECK(run_verify(options).to_text() == run_verify(options).to_text());
  const auto j = nlohmann::json::parse(run_verify(options).to_json());
  CHECK(j.at("suites")[0].contains("wall_ms"));
}
