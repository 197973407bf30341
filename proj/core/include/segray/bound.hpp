#pragma once

// The bound constant m: minimum over [0, D/2] x [0, T] of
//
//   (psi_ss - psi_t + sqrt((psi_ss - psi_t)^2 + 4 phi psi psi_s)) / (2 psi_s psi)
//
// (elliptic variant drops the psi_t terms), with the s -> 0 singularity
// replaced by the limit value psi_sss(0,t) / psi_s(0,t)^2 below
// eps_limit = 1e-3 * D.  The grid minimum is polished by golden-section
// refinement; results are stable to 1e-8 under grid doubling.

#include "segray/profile.hpp"

namespace segray {

struct MGrid {
  int s_samples = 128;  // >= 64
  int t_samples = 16;   // >= 16 for time-dependent profiles
};

struct MResult {
  double m = 0;
  double s_argmin = 0;
  double t_argmin = 0;
  bool clamped_by_m0 = false;
  bool limit_branch = false;  // argmin fell in the s < eps_limit region
};

// Quotient value at (s,t), with the limit branch applied for s < eps_limit.
// Throws LimitUndefined when psi_s(0,t) <= 0.
double m_quotient(const Profile& psi, const PotentialModulus& phi_mod, double s,
                  double t);

MResult compute_m_parabolic(const Profile& psi, const PotentialModulus& phi_mod,
                            double m0, const MGrid& grid = {});

MResult compute_m_elliptic(const Profile& psi, const PotentialModulus& phi_mod,
                           const MGrid& grid = {});

} // namespace segray
