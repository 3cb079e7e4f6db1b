// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>

#include "criteria.hpp"

int main() {
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria::all()) {
    ++index;
    auto t0 = std::chrono::steady_clock::now();
    criteria::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failed;
    std::printf("%s %2d %-28s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", index, c.name, s, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
