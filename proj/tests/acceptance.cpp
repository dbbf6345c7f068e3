// Prints one PASS/FAIL line per acceptance criterion; exit status 1 on any failure.

#include <cstdio>

#include "goodprime/acceptance.hpp"

int main() {
  using namespace goodprime::acceptance;
  bool ok = true;
  for (const auto& r : run(Options{})) {
    std::printf("%s %2d %-18s %8.3fs  %s%s%s\n", r.passed ? "PASS" : "FAIL", r.id, r.key.c_str(), r.seconds,
                r.title.c_str(), r.detail.empty() ? "" : "  -- ", r.detail.c_str());
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
