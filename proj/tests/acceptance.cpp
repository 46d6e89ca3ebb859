// Runs the verification suite and prints one line per acceptance criterion.
// Usage: homtopo_acceptance [fast|full]

#include <cstdio>
#include <cstring>
#include <exception>

#include "homtopo/verify.hpp"

int main(int argc, char** argv) {
  homtopo::VerifyOptions opts;
  if (argc > 1 && std::strcmp(argv[1], "full") == 0) opts.suite = homtopo::Suite::full;
  try {
    const homtopo::VerificationReport report = homtopo::run_verification(opts);
    int failed = 0;
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const auto& c = report.checks[i];
      std::printf("criterion %2zu %-18s %s  expected: %s  computed: %s  (%.1fs)\n", i + 1, c.name.c_str(),
                  c.pass ? "PASS" : "FAIL", c.expected.c_str(), c.computed.c_str(), c.seconds);
      failed += c.pass ? 0 : 1;
    }
    std::printf("%s suite: %zu/%zu criteria pass\n", report.suite.c_str(), report.checks.size() - static_cast<std::size_t>(failed),
                report.checks.size());
    return failed == 0 && report.checks.size() == 12 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 2;
  }
}
