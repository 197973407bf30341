#include "segray/grid2d.hpp"

#include <cmath>

#include "segray/errors.hpp"

namespace segray {

namespace {

// Boundary fraction along an arm from an interior node toward an exterior
// one: phi(node + t h dir) = 0, t in (0, 1].
double arm_fraction(const ConvexDomain& dom, const Vec& node, const Vec& dir,
                    double h) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dom.phi(node + (mid * h) * dir) > 0)
      lo = mid;
    else
      hi = mid;
  }
  // Tiny fractions make the diagonal blow up; clamping perturbs the boundary
  // by at most 1e-3 h.
  return std::max(0.5 * (lo + hi), 1e-3);
}

} // namespace

std::shared_ptr<Grid2D> build_grid(std::shared_ptr<const ConvexDomain> domain,
                                   double h) {
  if (domain->dimension != 2)
    throw GridTooCoarse("build_grid: only 2D domains are supported");

  auto grid = std::make_shared<Grid2D>();
  grid->domain = domain;
  grid->h = h;

  // Bounding box from boundary rays through the seed, padded by 2h.
  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  const int rays = 128;
  for (int k = 0; k < rays; ++k) {
    const double a = 2.0 * M_PI * k / rays;
    const Vec dir(std::cos(a), std::sin(a));
    const double s = chord_clip(*domain, domain->interior_seed, dir).second;
    const Vec b = domain->interior_seed + s * dir;
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], b[i]);
      hi[i] = std::max(hi[i], b[i]);
    }
  }
  grid->x0 = lo[0] - 2.0 * h;
  grid->y0 = lo[1] - 2.0 * h;
  grid->nx = static_cast<int>(std::ceil((hi[0] - lo[0] + 4.0 * h) / h)) + 1;
  grid->ny = static_cast<int>(std::ceil((hi[1] - lo[1] + 4.0 * h) / h)) + 1;

  grid->node_index.assign(static_cast<std::size_t>(grid->nx) * grid->ny, -1);
  for (int j = 0; j < grid->ny; ++j) {
    for (int i = 0; i < grid->nx; ++i) {
      const Vec p(grid->x0 + i * h, grid->y0 + j * h);
      if (domain->phi(p) > 0) {
        grid->node_index[static_cast<std::size_t>(j) * grid->nx + i] =
            grid->interior_count();
        grid->coords.push_back({p[0], p[1]});
      }
    }
  }
  if (grid->interior_count() < 200)
    throw GridTooCoarse("build_grid: fewer than 200 interior nodes at h = " +
                        std::to_string(h));

  // E, W, N, S arm data.
  const int di[4] = {1, -1, 0, 0};
  const int dj[4] = {0, 0, 1, -1};
  grid->stencil.resize(grid->interior_count());
  for (int j = 0; j < grid->ny; ++j) {
    for (int i = 0; i < grid->nx; ++i) {
      const int idx = grid->index_at(i, j);
      if (idx < 0) continue;
      const Vec p(grid->x0 + i * h, grid->y0 + j * h);
      for (int a = 0; a < 4; ++a) {
        const int nb = grid->index_at(i + di[a], j + dj[a]);
        if (nb >= 0) {
          grid->stencil[idx].nbr[a] = nb;
          grid->stencil[idx].frac[a] = 1.0;
        } else {
          const Vec dir(static_cast<double>(di[a]), static_cast<double>(dj[a]));
          grid->stencil[idx].nbr[a] = -1;
          grid->stencil[idx].frac[a] = arm_fraction(*domain, p, dir, h);
        }
      }
    }
  }
  return grid;
}

Operator2D build_operator(std::shared_ptr<Grid2D> grid, const ScalarField& q) {
  const int m = grid->interior_count();
  const double inv_h2 = 1.0 / (grid->h * grid->h);

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(m) * 5);
  double q_min = 1e300;
  for (int idx = 0; idx < m; ++idx) {
    const double qv = q.value(grid->point(idx));
    q_min = std::min(q_min, qv);
    double diag = qv;
    for (int a = 0; a < 4; ++a) {
      const int nb = grid->stencil[idx].nbr[a];
      if (nb >= 0) {
        diag += inv_h2;
        trip.emplace_back(idx, nb, -inv_h2);
      } else {
        // Dirichlet 0 at fraction theta of the arm, eliminated by linear
        // extrapolation; contributes 1/(theta h^2) to the diagonal only,
        // preserving symmetry.
        diag += inv_h2 / grid->stencil[idx].frac[a];
      }
    }
    trip.emplace_back(idx, idx, diag);
  }

  Operator2D op;
  op.grid = std::move(grid);
  op.matrix.resize(m, m);
  op.matrix.setFromTriplets(trip.begin(), trip.end());
  op.matrix.makeCompressed();
  op.q_min = q_min;
  return op;
}

Operator2D build_operator(std::shared_ptr<const ConvexDomain> domain,
                          const ScalarField& q, double h) {
  return build_operator(build_grid(std::move(domain), h), q);
}

} // namespace segray
