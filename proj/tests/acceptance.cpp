#include <cstdio>
#include <string>

#include "apolar/repro.hpp"

using namespace apolar;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s GOLDEN.json [seed]\n", argv[0]);
    return 2;
  }
  io::json golden = repro::load_json_file(argv[1]);
  repro::ReproOptions opts;
  if (argc > 2) opts.seed = std::stoull(argv[2]);

  int failed = 0;
  double total = 0;
  for (int id = 1; id <= repro::kNumChecks; ++id) {
    repro::CheckResult r = repro::run_check(id, opts);
    total += r.seconds;
    io::json produced = {{std::to_string(id), r.values}};
    std::vector<std::string> diff = repro::golden_diff(produced, golden);
    // Each check must also finish at desk scale.
    bool fast = r.seconds < 30.0;
    bool ok = r.passed && diff.empty() && fast;
    if (!ok) ++failed;
    std::printf("criterion %2d %-4s %-36s %7.3fs\n", id, ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    if (!r.detail.empty()) std::printf("    %s\n", r.detail.c_str());
    for (const auto& line : diff) std::printf("    golden: %s\n", line.c_str());
    if (!fast) std::printf("    exceeded 30 s\n");
  }
  std::printf("%d of %d criteria passed in %.2fs\n", repro::kNumChecks - failed, repro::kNumChecks, total);
  return failed == 0 ? 0 : 1;
}
