#pragma once

// Heat-kernel comparison spot-check: concentrated Gaussian initial data in
// place of the kernel, compared against the matched 1D model at times well
// past the data width.  The resulting report is INDICATIVE only and never
// gates anything.

#include "segray/verify.hpp"

namespace segray {

struct KernelCheckOptions {
  double width = 0.05;     // Gaussian width w; must be >= 3h
  double grid_h = 0.02;
  double dt = 1e-3;
  std::vector<double> t_list = {0.3};
  int model_nodes = 2001;
  VerifyOptions verify{};
};

VerificationReport heat_kernel_spot_check(
    std::shared_ptr<const ConvexDomain> domain, ScalarFieldPtr q,
    const Vec& source, const Potential1D& qbar, const KernelCheckOptions& opt);

} // namespace segray
