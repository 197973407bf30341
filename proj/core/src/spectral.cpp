#include "segray/spectral.hpp"

#include <cmath>

#include "segray/errors.hpp"
#include "segray/heat.hpp"

namespace segray {

EigenPair eigen_smallest(const Eigen::SparseMatrix<double>& A,
                         double residual_tol, int max_iterations) {
  const int n = static_cast<int>(A.rows());

  // Gershgorin lower bound; shift so the inner solves see an SPD matrix.
  double lower = 1e300;
  for (int k = 0; k < A.outerSize(); ++k) {
    double diag = 0, off = 0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(A, k); it; ++it) {
      if (it.row() == it.col()) diag = it.value();
      else off += std::fabs(it.value());
    }
    lower = std::min(lower, diag - off);
  }
  double shift = 0.0;
  if (lower < 1e-8) shift = -lower + 1.0;

  Eigen::SparseMatrix<double> B = A;
  if (shift != 0.0) {
    Eigen::SparseMatrix<double> id(n, n);
    id.setIdentity();
    B = A + shift * id;
    B.makeCompressed();
  }

  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  v.normalize();
  Eigen::VectorXd w = v;

  EigenPair out;
  for (int it = 1; it <= max_iterations; ++it) {
    w = solve_spd(B, v, &w, 1e-10);
    v = w / w.norm();
    out.lambda = v.dot(A * v);
    out.residual = (A * v - out.lambda * v).norm();
    out.iterations = it;
    if (out.residual < residual_tol) break;
  }
  if (out.residual >= residual_tol)
    throw NotConverged("inverse power iteration stopped at residual " +
                       std::to_string(out.residual));

  // Normalize to max = 1 with positive sign at the peak.
  int arg = 0;
  for (int i = 1; i < n; ++i)
    if (std::fabs(v[i]) > std::fabs(v[arg])) arg = i;
  out.vec = v / v[arg];
  return out;
}

} // namespace segray
