#pragma once

// The modulus pair: psi(s,t) with derivatives psi_s, psi_ss, psi_sss, psi_t
// driving the bound constant m, and the nonnegative potential modulus.
// Profiles are either analytic or distilled from a 1D model run.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "segray/interval_model.hpp"

namespace segray {

class Profile {
public:
  virtual ~Profile() = default;
  virtual double psi(double s, double t) const = 0;
  virtual double psi_s(double s, double t) const = 0;
  virtual double psi_ss(double s, double t) const = 0;
  virtual double psi_sss(double s, double t) const = 0;
  virtual double psi_t(double s, double t) const = 0;
  virtual double s_max() const = 0;  // D/2
  virtual double t_max() const = 0;  // 0 for elliptic profiles
  virtual bool time_dependent() const = 0;
  virtual std::string source() const = 0;  // "analytic" | "from-1d-model"
};

using ProfilePtr = std::shared_ptr<const Profile>;

// psi given by callables of s alone (elliptic / time-independent).
ProfilePtr make_analytic_profile(std::function<double(double)> psi,
                                 std::function<double(double)> psi_s,
                                 std::function<double(double)> psi_ss,
                                 std::function<double(double)> psi_sss,
                                 double s_max);

// psi(s) = sum_k c_k s^k.
ProfilePtr make_polynomial_profile(const std::vector<double>& coeffs,
                                   double s_max);

// psi = 2 fbar_s from a 1D eigen run.  Higher s-derivatives follow from the
// eigen equation fbar_ss = lambda - qbar + fbar_s^2, so no repeated numerical
// differentiation of node data is needed.
ProfilePtr make_eigen_model_profile(const Interval1DSolution& sol);

// psi = 2 fbar_s(s, t) from a parabolic 1D run; s-derivatives from node
// stencils and the heat identity.  Coarser than the eigen variant.
ProfilePtr make_heat_model_profile(std::shared_ptr<const Interval1DSolution> sol);

struct PotentialModulus {
  std::function<double(double, double)> value = [](double, double) {
    return 0.0;
  };
  std::string source = "analytic";
};

PotentialModulus make_zero_modulus();
// phi_mod(s,t) = 2 qbar_s(s), the comparison-corollary choice.
PotentialModulus make_qbar_slope_modulus(const Potential1D& qbar);

// Profile invariants: psi(0,t) = 0 and psi_ss(0,t) = 0 within 1e-8, psi_s > 0
// on the evaluation grid.  Throws ProfileInvalid on violation.
void validate_profile(const Profile& p, int s_samples = 128, int t_samples = 8);

// Modulus invariants: phi_mod >= 0 on the grid and phi_mod(0, .) = 0 within
// 1e-8 (the s -> 0 limit of the m-quotient requires it).
void validate_modulus(const PotentialModulus& mod, double s_max, double t_max,
                      int s_samples = 128, int t_samples = 8);

} // namespace segray
