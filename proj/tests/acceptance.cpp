// Acceptance gate: one line per criterion, nonzero exit if any fails.
//   acceptance [--extended] [--seed N]

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "lefschetz/verify.hpp"

using namespace lefschetz;

namespace {

struct Criterion {
  int number;
  const char* identity;
  const char* title;
  double budget_seconds;
  bool extended;
};

const Criterion criteria[] = {
    {1, "sphere", "sphere characters collapse to sum t^j", 1, false},
    {2, "derham", "de Rham index counts fixed points", 10, false},
    {3, "multiplicativity", "index of products", 10, false},
    {4, "linearisation", "holomorphic linearisation", 5, false},
    {5, "weyl", "Weyl sums and flag scenarios", 30, false},
    {6, "discrete-series", "SL(2,R) discrete series closed form", 5, false},
    {7, "su2", "SU(2) characters", 5, false},
    {8, "distribution", "distributional pairing on the circle", 5, false},
    {9, "pairing", "index pairing with line bundles", 1, false},
    {10, "relative", "relative index cancellation", 5, false},
    {11, "regularity", "singular elements are refused", 1, false},
    {12, "bott", "Bott element has index 1", 5, true},
};

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::stoull(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--extended] [--seed N]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (c.extended && !extended) continue;
    const CheckResult r = run_identity(c.identity, options);
    const bool in_time = r.seconds <= c.budget_seconds;
    const bool pass = r.pass && in_time;
    failures += !pass;
    std::printf("%s criterion %2d %-40s cases=%-4zu time=%.3fs budget=%gs%s\n", pass ? "PASS" : "FAIL", c.number, c.title,
                r.cases, r.seconds, c.budget_seconds, in_time ? "" : " (over budget)");
    if (!r.pass) std::printf("     counterexample: %s\n", r.counterexample.c_str());
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
