#include "segray/kernel_check.hpp"

#include <cmath>

#include "segray/errors.hpp"
#include "segray/interval_model.hpp"

namespace segray {

VerificationReport heat_kernel_spot_check(
    std::shared_ptr<const ConvexDomain> domain, ScalarFieldPtr q,
    const Vec& source, const Potential1D& qbar, const KernelCheckOptions& opt) {
  if (opt.width < 3.0 * opt.grid_h)
    throw WidthTooSmall("kernel spot check: width must be at least 3h");

  const double D =
      domain->diameter_hint ? *domain->diameter_hint : diameter(*domain);
  const double w2 = opt.width * opt.width;

  std::vector<double> usable;
  for (double t : opt.t_list)
    if (t >= 10.0 * w2) usable.push_back(t);

  const double t_end = usable.empty() ? 0.0 : usable.back();
  VerifyOptions vopt = opt.verify;
  vopt.t_list = usable;

  VerificationReport rep;
  if (usable.empty()) {
    rep.indicative = true;
    rep.label = "kernel-spot-check";
    rep.seed = vopt.seed;
    return rep;
  }

  // Concentrated data standing in for the kernel on both sides.
  const Operator2D op = build_operator(domain, *q, opt.grid_h);
  const GridSolution sol2d = solve_heat_2d(
      op,
      [&](const Vec& x) {
        return std::exp(-dot(x - source, x - source) / (2.0 * w2));
      },
      opt.dt, t_end, Scheme::CrankNicolson, usable);

  Model1DOptions mopt;
  mopt.nodes = opt.model_nodes;
  mopt.dt = opt.dt;
  mopt.t_end = t_end;
  mopt.store_times = usable;
  const Interval1DSolution model = solve_1d_model_heat(
      qbar, D / 2.0,
      [&](double s) { return std::exp(-s * s / (2.0 * w2)); }, mopt);

  // Reuse the comparison machinery; hypothesis on q is still checked.
  auto f0 = make_quadratic_radial(2, 1.0 / (2.0 * w2), source);
  rep = verify_comparison_parabolic(sol2d, q, f0, model, *domain, vopt);
  rep.indicative = true;
  rep.label = "kernel-spot-check";
  return rep;
}

} // namespace segray
