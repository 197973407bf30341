#pragma once

// Segment kinematics: r(x,y), N(x,y), theta(s,x,y) and the orthonormal frame
// e_1..e_n with e_n = N.  Joint displacement directions of the endpoint pair
// are written E_i = (e_i, e_i) and Etilde_i = (e_i, -e_i); a derivative "along
// E_i" moves both endpoints by the same h e_i, "along Etilde_i" moves x by
// +h e_i and y by -h e_i.

#include <string>
#include <vector>

#include "segray/linalg.hpp"

namespace segray {

struct SegmentFrame {
  Vec x, y;
  double r = 0;
  Vec unit;                              // N = (y - x) / r
  std::array<Vec, kMaxDim> frame{};      // e_1..e_n, e_n = N
  int n = 0;

  Vec theta(double s) const { return x + s * unit; }
  const Vec& e(int i) const { return frame[i]; }  // 0-based, e(n-1) = N
};

// Builds the frame.  Completion rule: Gram-Schmidt over the standard basis,
// skipping the axis with the largest |component along N| (ties: lowest index),
// then the sign of e_1 is fixed so that (N, e_1, ..., e_{n-1}) is positively
// oriented.  Throws DegenerateSegment when |y-x| <= 1e-12.
SegmentFrame segment_frame(const Vec& x, const Vec& y);

struct Lemma21Residual {
  int item = 0;             // 1..5, matching the identity group
  std::string quantity;     // "r", "N" or "theta"
  int direction = 0;        // 1-based frame index i
  double s = 0;             // theta checks only (nan otherwise)
  double fd = 0;            // FD value (norm for vector quantities)
  double formula = 0;       // analytic value (norm for vector quantities)
  double abs_err = 0;       // |FD - formula| (vector: norm of difference)
};

struct Lemma21Report {
  double h = 0;
  std::vector<Lemma21Residual> residuals;
  double max_abs_err() const;
  double max_abs_err(int item, const std::string& quantity) const;
};

// Central finite differences of r, N and theta along every E_i / Etilde_i
// against the closed-form first and second derivatives; theta identities are
// checked at 5 equispaced s values.  h must lie in (1e-8, r/10).
Lemma21Report lemma21_check(const SegmentFrame& frame, double h);

} // namespace segray
