#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace homtopo {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  /// `stable` drops the timing fields so repeated runs are byte-identical.
  std::string to_json(bool stable, int indent = 2) const;
  std::string to_text(bool stable) const;
};

enum class Suite { fast, full };

struct VerifyOptions {
  Suite suite = Suite::fast;
  /// Criterion names to run; empty means all.
  std::vector<std::string> only;
  /// Global cap on cells of any single complex, applied on top of each
  /// check's own limits.
  std::size_t budget = std::numeric_limits<std::size_t>::max();
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
};

/// The criterion names in report order.
const std::vector<std::string>& criterion_names();

/// Throws DomainError for an unknown name in `only`.
VerificationReport run_verification(const VerifyOptions& opts);

}  // namespace homtopo
