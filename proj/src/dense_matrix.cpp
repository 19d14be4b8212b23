#include "dense_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "error.hpp"

namespace ncwheel {

DenseMatrix::DenseMatrix(int r, int c, double fill)
    : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {
  if (r < 0 || c < 0) fail(ErrorKind::Dimension, "negative matrix dimension");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::constant(int r, int c, double value) {
  return DenseMatrix(r, c, value);
}

static void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(ErrorKind::Dimension, "matrix shape mismatch");
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) fail(ErrorKind::Dimension, "inner dimension mismatch");
  DenseMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix out = a;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
  return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  DenseMatrix out = a;
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

DenseMatrix scale(const DenseMatrix& a, double s) {
  DenseMatrix out = a;
  for (double& v : out.data) v *= s;
  return out;
}

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
  if (static_cast<size_t>(a.cols) != x.size())
    fail(ErrorKind::Dimension, "matrix-vector dimension mismatch");
  std::vector<double> out(a.rows, 0.0);
  for (int i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) fail(ErrorKind::Dimension, "vector length mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double max_abs(const DenseMatrix& a) {
  double worst = 0.0;
  for (double v : a.data) worst = std::max(worst, std::fabs(v));
  return worst;
}

double max_abs(const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, std::fabs(v));
  return worst;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::fabs(a.data[i] - b.data[i]));
  return worst;
}

double frobenius(const DenseMatrix& a) {
  double acc = 0.0;
  for (double v : a.data) acc += v * v;
  return std::sqrt(acc);
}

double symmetry_defect(const DenseMatrix& a) {
  if (a.rows != a.cols) fail(ErrorKind::Dimension, "symmetry defect needs a square matrix");
  double worst = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = i + 1; j < a.cols; ++j)
      worst = std::max(worst, std::fabs(a.at(i, j) - a.at(j, i)));
  return worst;
}

double max_abs_row_sum(const DenseMatrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    double acc = 0.0;
    for (int j = 0; j < a.cols; ++j) acc += a.at(i, j);
    worst = std::max(worst, std::fabs(acc));
  }
  return worst;
}

}  // namespace ncwheel
