#ifndef NCWHEEL_ORACLE_HPP
#define NCWHEEL_ORACLE_HPP

#include <vector>

#include "dense_matrix.hpp"

namespace ncwheel {

struct ComparisonReport {
  double max_abs_diff = 0.0;
  double rel_frobenius = 0.0;
  int argmax_row = 0;
  int argmax_col = 0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Gaussian elimination with partial pivoting. Orders are capped at 2000;
/// a pivot below 1e-13 * max|A| raises ErrorKind::Singular.
std::vector<double> solve_dense(const DenseMatrix& a, const std::vector<double>& b);

DenseMatrix dense_inverse(const DenseMatrix& a);

/// Determinant via the LU pivots (0 when elimination hits a zero pivot).
double lu_determinant(const DenseMatrix& a);

/// Group inverse of a symmetric zero-row-sum Laplacian of a connected
/// network, computed by rank completion: (L + J/N)^{-1} - J/N. Preconditions
/// (symmetry, zero row sums, connectivity) are checked explicitly.
DenseMatrix dense_group_inverse(const DenseMatrix& l);

ComparisonReport compare(const DenseMatrix& a, const DenseMatrix& b, double tol);

}  // namespace ncwheel

#endif
