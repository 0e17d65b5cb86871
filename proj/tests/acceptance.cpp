// Reproduction suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "weylkit/acceptance.hpp"

int main(int argc, char **argv)
{
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (int id = 1; id <= weylkit::kCriterionCount; ++id) {
    auto r = weylkit::run_criterion(id);
    std::printf("%s %2d  %-42s %8.2f s (limit %.0f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.limit_seconds);
    for (auto const &f : r.failures)
      std::printf("       failed: %s\n", f.c_str());
    if (verbose || !r.pass)
      for (auto const &n : r.notes)
        std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", weylkit::kCriterionCount - failed, weylkit::kCriterionCount);
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
