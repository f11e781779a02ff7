#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcfw/parallel.hpp"

namespace tcfw {

struct Check {
  std::string name;
  bool pass = true;
  std::size_t evaluated = 0;
  std::optional<std::string> witness;  // first failing input, when !pass
};

/// Outcome of a sampled verification: one entry per identity, each with the
/// number of inputs it was evaluated on and a witness for the first failure.
struct VerificationReport {
  std::string subject;
  std::size_t samples = 0;
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  bool passed() const;
  const Check* find(const std::string& name) const;
  // Appends a passing check; the reference is invalidated by the next add.
  Check& add(std::string name);
  // Appends every check of `other`, prefixing names with `prefix`.
  void absorb(const VerificationReport& other, const std::string& prefix);
};

// Records one evaluation of an identity; keeps the first failure.
void record(Check& c, bool ok, const std::string& witness);

/// Per-sample scratch log: check index -> evaluation count and first failure.
/// Witness text is built only on failure.
class SampleLog {
 public:
  explicit SampleLog(std::size_t checks) : evaluated_(checks, 0), failure_(checks) {}

  template <class Witness>
  void record(std::size_t check, bool ok, Witness&& witness) {
    ++evaluated_[check];
    if (!ok && !failure_[check]) failure_[check] = witness();
  }
  void fail(std::size_t check, std::string witness) {
    ++evaluated_[check];
    if (!failure_[check]) failure_[check] = std::move(witness);
  }

  const std::vector<std::size_t>& evaluated() const { return evaluated_; }
  const std::vector<std::optional<std::string>>& failures() const { return failure_; }

 private:
  std::vector<std::size_t> evaluated_;
  std::vector<std::optional<std::string>> failure_;
};

/// Runs `body(i, log)` for i in [0, count) and merges the logs in index order,
/// so the report is identical for serial and parallel execution. A
/// tcfw::Error escaping `body` is recorded under the extra check
/// "evaluates_without_error". Checks never evaluated produce a warning.
VerificationReport run_sampled(std::string subject, std::size_t samples, const std::vector<std::string>& check_names,
                               std::size_t count, Execution exec,
                               const std::function<void(std::size_t, SampleLog&)>& body);

}  // namespace tcfw
