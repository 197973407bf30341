#pragma once

// Smallest eigenpair of a symmetric operator by inverse power iteration.
// When q pulls the spectrum below zero a diagonal shift (from the Gershgorin
// bound) restores positive definiteness for the inner solves; the reported
// eigenvalue is always that of the unshifted operator.

#include <Eigen/Sparse>

namespace segray {

struct EigenPair {
  double lambda = 0;
  Eigen::VectorXd vec;  // normalized to max = 1, sign-fixed positive
  int iterations = 0;
  double residual = 0;  // |A v - lambda v| / |v|
};

EigenPair eigen_smallest(const Eigen::SparseMatrix<double>& A,
                         double residual_tol = 1e-8, int max_iterations = 400);

} // namespace segray
