// Acceptance gate: runs the full claim suite and prints one line per
// criterion. Exit status is nonzero iff a claim fails; skips (budget or
// --slow-gated work) are reported but do not fail the gate.

#include <cstring>
#include <iostream>

#include "pgt/claims.hpp"

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;

  auto results = pgt::run_claims({}, slow);
  bool any_fail = false;
  for (const auto& r : results) {
    const char* tag = "PASS";
    if (r.verdict == pgt::Verdict::fail) {
      tag = "FAIL";
      any_fail = true;
    } else if (r.verdict == pgt::Verdict::skipped) {
      tag = "SKIP";
    }
    std::cout << "[" << tag << "] " << r.id << ": " << r.anchor;
    if (!r.detail.empty()) std::cout << " [" << r.detail << "]";
    std::cout << "\n";
  }
  std::cout << (any_fail ? "acceptance: FAIL" : "acceptance: PASS") << "\n";
  return any_fail ? 1 : 0;
}
