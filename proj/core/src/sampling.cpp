#include "segray/sampling.hpp"

#include <cmath>

#include "segray/domain.hpp"
#include "segray/errors.hpp"

namespace segray {

PointSampler::PointSampler(const ConvexDomain& domain, double cutoff_distance,
                           std::uint64_t seed)
    : domain_(domain), cutoff_(cutoff_distance), rng_(seed) {
  // Bounding box from boundary rays through the seed.
  const int dim = domain.dimension;
  for (int i = 0; i < dim; ++i) {
    lo_[i] = 1e300;
    hi_[i] = -1e300;
  }
  const int rays = dim == 1 ? 2 : (dim == 2 ? 64 : 256);
  for (int k = 0; k < rays; ++k) {
    Vec dir = Vec::zero(dim);
    if (dim == 1) {
      dir[0] = k == 0 ? 1.0 : -1.0;
    } else if (dim == 2) {
      const double a = 2.0 * M_PI * k / rays;
      dir[0] = std::cos(a);
      dir[1] = std::sin(a);
    } else {
      const double ga = M_PI * (3.0 - std::sqrt(5.0));
      const double z = 1.0 - 2.0 * (k + 0.5) / rays;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      dir[0] = r * std::cos(ga * k);
      dir[1] = r * std::sin(ga * k);
      dir[2] = z;
    }
    const double s = chord_clip(domain, domain.interior_seed, dir).second;
    const Vec b = domain.interior_seed + s * dir;
    for (int i = 0; i < dim; ++i) {
      lo_[i] = std::min(lo_[i], b[i]);
      hi_[i] = std::max(hi_[i], b[i]);
    }
  }
}

Vec PointSampler::draw() {
  const int dim = domain_.dimension;
  // 1000 consecutive rejections = the 99.9% starvation threshold.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec x = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng_.uniform(lo_[i], hi_[i]);
    if (domain_.phi(x) <= 0) continue;
    if (cutoff_ > 0 && domain_.boundary_distance_estimate(x) <= cutoff_) continue;
    return x;
  }
  throw SamplerStarved("rejection rate exceeded 99.9% drawing interior points");
}

std::pair<Vec, Vec> PointSampler::draw_pair(double min_r) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec x = draw();
    Vec y = draw();
    if (norm(y - x) >= min_r) return {x, y};
  }
  throw SamplerStarved("could not draw a pair with the requested separation");
}

} // namespace segray
