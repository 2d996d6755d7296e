#include <cstdio>

#include "wb/suites.hpp"

int main() {
  int failed = 0, i = 0;
  for (const auto& name : wb::suite_names()) {
    auto r = wb::run_suite(name);
    ++i;
    std::size_t instances = 0;
    for (const auto& [k, n] : r.counts) instances += n;
    std::printf("[%s] %2d %-14s %-40s instances=%zu (%.2fs)\n", r.pass() ? "PASS" : "FAIL", i, r.name.c_str(),
                r.title.c_str(), instances, r.seconds);
    for (const auto& c : r.cert.checks)
      if (!c.pass) std::printf("       %s: %s\n", c.name.c_str(), c.witness.c_str());
    failed += !r.pass();
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
