#ifndef NCWHEEL_DENSE_MATRIX_HPP
#define NCWHEEL_DENSE_MATRIX_HPP

#include <vector>

namespace ncwheel {

/// Row-major double-precision matrix. Small desk-scale orders only; all
/// operations are plain O(n^2)/O(n^3) loops.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c, double fill = 0.0);

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static DenseMatrix identity(int n);
  static DenseMatrix constant(int r, int c, double value);
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double s);
std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x);
double dot(const std::vector<double>& x, const std::vector<double>& y);

double max_abs(const DenseMatrix& a);
double max_abs(const std::vector<double>& x);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double frobenius(const DenseMatrix& a);
/// max |a - a^T| over all entry pairs; 0 for exactly symmetric input.
double symmetry_defect(const DenseMatrix& a);
/// max over rows of |sum of row entries|.
double max_abs_row_sum(const DenseMatrix& a);

}  // namespace ncwheel

#endif
