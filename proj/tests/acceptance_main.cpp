// Verification suite: runs every acceptance check and prints one pass/fail
// line per check. Exits nonzero if any check fails. The same checks back
// the CLI's `verify` subcommand.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rigidity/accept.hpp"

int main(int argc, char** argv) {
  std::string filter;
  std::uint64_t seed = rigidity::kDefaultSeed;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--filter") == 0 && i + 1 < argc) filter = argv[++i];
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }
  if (const char* env = std::getenv("RIGID_SEED")) seed = std::strtoull(env, nullptr, 10);

  auto results = rigidity::run_acceptance(seed, filter);
  bool all = true;
  double total = 0;
  for (const auto& r : results) {
    std::printf("%s  %-30s %9.1f ms  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.wall_ms,
                r.detail.c_str());
    all = all && r.pass;
    total += r.wall_ms;
  }
  std::printf("%s: %zu checks, %.1f ms total (seed %llu)\n", all ? "OK" : "FAILED", results.size(),
              total, static_cast<unsigned long long>(seed));
  return all ? 0 : 1;
}
