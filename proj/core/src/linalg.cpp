#include "segray/linalg.hpp"

#include <algorithm>

namespace segray {

double smallest_eigenvalue(const SymMat& m) {
  const int n = m.n;
  if (n == 1) return m.at(0, 0);

  // Cyclic Jacobi; for n <= 3 a handful of sweeps reaches machine precision.
  std::array<std::array<double, 3>, 3> a{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  for (int sweep = 0; sweep < 32; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  double lo = a[0][0];
  for (int i = 1; i < n; ++i) lo = std::min(lo, a[i][i]);
  return lo;
}

double det_columns(const Vec* cols, int n) {
  if (n == 1) return cols[0][0];
  if (n == 2) return cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1];
  const Vec& a = cols[0];
  const Vec& b = cols[1];
  const Vec& c = cols[2];
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
         c[0] * (a[1] * b[2] - a[2] * b[1]);
}

} // namespace segray
