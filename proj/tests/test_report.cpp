#include <doctest.h>

#include "tcfw/errors.hpp"
#include "tcfw/report.hpp"

using namespace tcfw;

namespace {

VerificationReport odd_even(Execution exec) {
  return run_sampled("numbers", 100, {"even", "below_90", "never"}, 100, exec, [](std::size_t i, SampleLog& log) {
    if (i % 2 == 0) log.record(0, true, [] { return std::string(); });
    log.record(1, i < 90, [i] { return "i = " + std::to_string(i); });
    if (i == 77) throw DomainError("sample 77");
  });
}

}  // namespace

TEST_CASE("sampled runs count evaluations and keep the first failure") {
  const auto r = odd_even(Execution::serial);
  CHECK(r.subject == "numbers");
  CHECK(r.samples == 100);
  REQUIRE(r.checks.size() == 4);
  CHECK(r.checks[0].pass);
  CHECK(r.checks[0].evaluated == 50);
  CHECK_FALSE(r.checks[1].pass);
  CHECK(r.checks[1].evaluated == 100);
  CHECK(r.checks[1].witness == "i = 90");
  CHECK(r.checks[2].evaluated == 0);
  CHECK(r.checks[3].name == "evaluates_without_error");
  CHECK_FALSE(r.checks[3].pass);
  CHECK(r.checks[3].witness->find("sample 77") != std::string::npos);
  CHECK(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("never") != std::string::npos);
  CHECK_FALSE(r.passed());
}

TEST_CASE("merge order does not depend on execution") {
  const auto a = odd_even(Execution::serial), b = odd_even(Execution::parallel);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].evaluated == b.checks[i].evaluated);
    CHECK(a.checks[i].witness == b.checks[i].witness);
  }
  CHECK(a.warnings == b.warnings);
}

TEST_CASE("report helpers") {
  VerificationReport r;
  record(r.add("a"), true, "unused");
  record(r.add("b"), false, "first");
  record(r.checks[1], false, "second");
  CHECK(r.find("b")->witness == "first");
  CHECK(r.find("b")->evaluated == 2);
  CHECK(r.find("zzz") == nullptr);
  VerificationReport outer;
  outer.absorb(r, "inner.");
  CHECK(outer.find("inner.a") != nullptr);
  CHECK_FALSE(outer.passed());
}

TEST_CASE("parallel loops rethrow the first failure") {
  std::vector<int> seen(50, 0);
  CHECK_THROWS_AS(for_each_index(50, Execution::parallel,
                                 [&](std::size_t i) {
                                   seen[i] = 1;
                                   if (i == 10) throw DomainError("ten");
                                 }),
                  DomainError);
  std::vector<int> out(1000, 0);
  for_each_index(1000, Execution::parallel, [&](std::size_t i) { out[i] = static_cast<int>(i * i % 97); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i % 97));
}
