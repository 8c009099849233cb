#pragma once

namespace ein {

struct Tolerances {
  double causal = 1e-12;
  double pred = 1e-9;
  double mesh = 1e-9;
  double group = 1e-9;
};

// Process-wide defaults. Read once from EIN3_EPS_CAUSAL, EIN3_EPS_PRED,
// EIN3_EPS_MESH and EIN3_EPS_GROUP if set.
const Tolerances& default_tol();

}  // namespace ein
