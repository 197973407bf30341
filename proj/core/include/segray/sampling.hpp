#pragma once

// Seeded, reproducible samplers.  The uniform generator is hand-rolled on top
// of splitmix64 so that report contents are byte-stable across platforms
// (std:: distributions are implementation-defined).

#include <cstdint>
#include <utility>
#include <vector>

#include "segray/linalg.hpp"

namespace segray {

struct ConvexDomain;

class SplitMix {
public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

// Rejection sampler for interior points with a near-boundary cutoff measured
// by the first-order distance estimate phi/|grad phi|.
class PointSampler {
public:
  PointSampler(const ConvexDomain& domain, double cutoff_distance,
               std::uint64_t seed);

  Vec draw();

  // A pair with separation at least min_r.  Throws SamplerStarved when the
  // rejection rate exceeds 99.9%.
  std::pair<Vec, Vec> draw_pair(double min_r = 1e-8);

private:
  const ConvexDomain& domain_;
  double cutoff_;
  SplitMix rng_;
  double lo_[kMaxDim]{}, hi_[kMaxDim]{};
};

} // namespace segray
