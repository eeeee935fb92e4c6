// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "nsz/selftest.hpp"

int main() {
  nsz::selftest::SelftestOutcome out = nsz::selftest::run_selftest();
  for (const auto& c : out.results)
    std::printf("criterion %2d [%s] %s — %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
  std::printf("acceptance: %s\n", out.all_pass ? "ALL PASS" : "FAILURES PRESENT");
  return out.all_pass ? 0 : 1;
}
