// Runs the acceptance criteria and prints one line per criterion.
//
//   acceptance            all criteria
//   acceptance 5 8        selected criteria (number or suite name)
//   acceptance -v ...     also print every sub-check
//
// Exit status is 0 iff every selected criterion passes.

#include "lidstone/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace lidstone;

int main(int argc, char** argv) {
  bool verbose = false;
  std::vector<const verify::Suite*> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "-v") {
      verbose = true;
      continue;
    }
    const verify::Suite* s = verify::find_suite(arg);
    if (!s) {
      std::fprintf(stderr, "unknown criterion '%s'\n", arg.c_str());
      return 2;
    }
    selected.push_back(s);
  }
  if (selected.empty()) {
    for (const auto& s : verify::suites()) selected.push_back(&s);
  }

  unsigned failed = 0;
  for (const verify::Suite* s : selected) {
    const auto start = std::chrono::steady_clock::now();
    const verify::SuiteResult r = verify::run(*s, {});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s AC%02u %-24s %u/%zu checks (%.1fs)\n", r.pass() ? "PASS" : "FAIL", r.criterion, r.title.c_str(),
                static_cast<unsigned>(r.checks.size() - r.failures()), r.checks.size(), secs);
    for (const auto& c : r.checks) {
      if (verbose || !c.pass) {
        std::printf("    %s %s%s%s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.detail.empty() ? "" : ": ", c.detail.c_str());
      }
    }
    std::fflush(stdout);
    failed += r.pass() ? 0 : 1;
  }
  std::printf("%zu criteria, %u passed, %u failed\n", selected.size(), static_cast<unsigned>(selected.size() - failed), failed);
  return failed == 0 ? 0 : 1;
}
