#pragma once

// 2D embedded grid over a level-set domain.  Interior nodes are those with
// phi(node) > 0; stencil arms that cross the boundary are shortened to the
// computed intersection fraction and the Dirichlet value 0 is eliminated into
// the diagonal, which keeps the operator symmetric positive definite.

#include <Eigen/Sparse>
#include <memory>
#include <vector>

#include "segray/domain.hpp"
#include "segray/scalar_field.hpp"

namespace segray {

struct Grid2D {
  std::shared_ptr<const ConvexDomain> domain;
  double h = 0;
  double x0 = 0, y0 = 0;  // node (i,j) sits at (x0 + i h, y0 + j h)
  int nx = 0, ny = 0;

  std::vector<int> node_index;  // nx*ny -> interior index or -1
  struct Stencil {
    // E, W, N, S arms: interior neighbour index, or -1 with the boundary
    // intersection fraction in (0, 1].
    std::array<int, 4> nbr{-1, -1, -1, -1};
    std::array<double, 4> frac{1, 1, 1, 1};
  };
  std::vector<Stencil> stencil;                 // per interior node
  std::vector<std::array<double, 2>> coords;    // per interior node
  int interior_count() const { return static_cast<int>(coords.size()); }

  int index_at(int i, int j) const {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
    return node_index[static_cast<std::size_t>(j) * nx + i];
  }
  Vec point(int interior_idx) const {
    return Vec(coords[interior_idx][0], coords[interior_idx][1]);
  }
};

// Builds the grid; throws GridTooCoarse when fewer than 200 interior nodes
// result.
std::shared_ptr<Grid2D> build_grid(std::shared_ptr<const ConvexDomain> domain,
                                   double h);

struct Operator2D {
  std::shared_ptr<Grid2D> grid;
  Eigen::SparseMatrix<double> matrix;  // -Laplacian + q, Dirichlet eliminated
  double q_min = 0;
};

// A ~ -Delta + q with Dirichlet conditions on the level set.
Operator2D build_operator(std::shared_ptr<Grid2D> grid, const ScalarField& q);
Operator2D build_operator(std::shared_ptr<const ConvexDomain> domain,
                          const ScalarField& q, double h);

} // namespace segray
