#include "tcfw/report.hpp"

#include <algorithm>

#include "tcfw/errors.hpp"

namespace tcfw {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Check& VerificationReport::add(std::string name) {
  checks.push_back(Check{std::move(name), true, 0, std::nullopt});
  return checks.back();
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  for (const auto& w : other.warnings) warnings.push_back(prefix + w);
}

void record(Check& c, bool ok, const std::string& witness) {
  ++c.evaluated;
  if (!ok && c.pass) {
    c.pass = false;
    c.witness = witness;
  }
}

VerificationReport run_sampled(std::string subject, std::size_t samples, const std::vector<std::string>& check_names,
                               std::size_t count, Execution exec,
                               const std::function<void(std::size_t, SampleLog&)>& body) {
  const std::size_t n = check_names.size();
  std::vector<SampleLog> logs(count, SampleLog(n + 1));
  for_each_index(count, exec, [&](std::size_t i) {
    try {
      body(i, logs[i]);
    } catch (const Error& e) {
      logs[i].fail(n, "sample " + std::to_string(i) + ": " + e.what());
    }
  });

  VerificationReport report;
  report.subject = std::move(subject);
  report.samples = samples;
  for (std::size_t c = 0; c <= n; ++c) {
    Check check{c < n ? check_names[c] : "evaluates_without_error", true, 0, std::nullopt};
    for (const auto& log : logs) {
      check.evaluated += log.evaluated()[c];
      if (log.failures()[c] && check.pass) {
        check.pass = false;
        check.witness = log.failures()[c];
      }
    }
    if (c == n) check.evaluated = count;
    if (c < n && check.evaluated == 0) report.warnings.push_back("check " + check.name + " never evaluated");
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace tcfw
