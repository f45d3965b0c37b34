// Runs every acceptance criterion once and prints one line per criterion.
// Tolerances live with the criteria: exact equality everywhere except the
// Monte Carlo estimator, which must agree within 3 standard errors.

#include <cstdio>

#include "plcube/acceptance.h"

int main() {
  plcube::AcceptanceOptions opt;
  opt.seed = 20240601;
  opt.phi_samples = 4096;
  opt.grid = 64;
  int failed = 0;
  for (int id = 1; id <= int(plcube::criterion_names().size()); ++id) {
    const auto r = plcube::run_criterion(id, opt);
    std::printf("%s %2d %-18s %7.1fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of %zu criteria passed\n", int(plcube::criterion_names().size()) - failed,
              plcube::criterion_names().size());
  return failed == 0 ? 0 : 1;
}
