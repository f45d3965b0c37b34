#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plcube {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  int jobs = 1;
  std::size_t phi_samples = 4096;  // Monte Carlo samples for criterion 10
  int grid = 64;                   // per-factor quadrature grid for criterion 10
};

// Names accepted by run_criterion: group-axioms, twist, klein-relation,
// suspension, distortion-bounds, undistorted, order-axioms, circular-order,
// braid-cocycle, phi-estimator, witness, serialization.
const std::vector<std::string>& criterion_names();
int criterion_id(const std::string& name);  // 0 when unknown

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

}  // namespace plcube
