#include "oracle.hpp"

#include <cmath>
#include <utility>

#include "error.hpp"

namespace ncwheel {

namespace {

constexpr int kMaxOrder = 2000;
constexpr double kPivotFloor = 1e-13;

struct LuFactors {
  DenseMatrix lu;            // L below the diagonal (unit), U on and above
  std::vector<int> perm;     // row permutation applied to the input
  int swaps = 0;
  bool singular = false;
};

LuFactors lu_factor(const DenseMatrix& a, bool throw_on_singular) {
  if (a.rows != a.cols) fail(ErrorKind::Dimension, "LU needs a square matrix");
  if (a.rows > kMaxOrder) fail(ErrorKind::Precondition, "order exceeds the 2000 desk-scale cap");
  const int n = a.rows;
  LuFactors f{a, std::vector<int>(n), 0, false};
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  const double pivot_tol = kPivotFloor * max_abs(a);

  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double best = std::fabs(f.lu.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::fabs(f.lu.at(r, col));
      if (v > best) {
        best = v;
        pivot_row = r;
      }
    }
    if (best <= pivot_tol) {
      if (throw_on_singular) fail(ErrorKind::Singular, "pivot below 1e-13 * max|A|; matrix is numerically singular");
      f.singular = true;
      return f;
    }
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j) std::swap(f.lu.at(col, j), f.lu.at(pivot_row, j));
      std::swap(f.perm[col], f.perm[pivot_row]);
      ++f.swaps;
    }
    const double pivot = f.lu.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double factor = f.lu.at(r, col) / pivot;
      f.lu.at(r, col) = factor;
      if (factor == 0.0) continue;
      for (int j = col + 1; j < n; ++j) f.lu.at(r, j) -= factor * f.lu.at(col, j);
    }
  }
  return f;
}

std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b) {
  const int n = f.lu.rows;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (int i = 1; i < n; ++i) {
    double acc = x[i];
    for (int j = 0; j < i; ++j) acc -= f.lu.at(i, j) * x[j];
    x[i] = acc;
  }
  for (int i = n - 1; i >= 0; --i) {
    double acc = x[i];
    for (int j = i + 1; j < n; ++j) acc -= f.lu.at(i, j) * x[j];
    x[i] = acc / f.lu.at(i, i);
  }
  return x;
}

/// Connectivity of the graph whose edges are the significant off-diagonal
/// couplings of a Laplacian-like matrix.
bool coupled_graph_connected(const DenseMatrix& l) {
  const int n = l.rows;
  const double edge_tol = 1e-13 * std::max(1.0, max_abs(l));
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (w == v || seen[w]) continue;
      if (std::fabs(l.at(v, w)) > edge_tol) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

}  // namespace

std::vector<double> solve_dense(const DenseMatrix& a, const std::vector<double>& b) {
  if (static_cast<size_t>(a.rows) != b.size())
    fail(ErrorKind::Dimension, "right-hand side length mismatch");
  return lu_solve(lu_factor(a, true), b);
}

DenseMatrix dense_inverse(const DenseMatrix& a) {
  const LuFactors f = lu_factor(a, true);
  const int n = a.rows;
  DenseMatrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (int col = 0; col < n; ++col) {
    e[col] = 1.0;
    const std::vector<double> x = lu_solve(f, e);
    for (int r = 0; r < n; ++r) inv.at(r, col) = x[r];
    e[col] = 0.0;
  }
  return inv;
}

double lu_determinant(const DenseMatrix& a) {
  const LuFactors f = lu_factor(a, false);
  if (f.singular) return 0.0;
  double det = (f.swaps % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < a.rows; ++i) det *= f.lu.at(i, i);
  return det;
}

DenseMatrix dense_group_inverse(const DenseMatrix& l) {
  if (l.rows != l.cols) fail(ErrorKind::Dimension, "group inverse needs a square matrix");
  const int n = l.rows;
  if (symmetry_defect(l) > 1e-10)
    fail(ErrorKind::Precondition, "group inverse input is not symmetric");
  if (max_abs_row_sum(l) > 1e-10)
    fail(ErrorKind::Precondition, "group inverse input does not have zero row sums");
  if (!coupled_graph_connected(l))
    fail(ErrorKind::Precondition, "network is disconnected; the kernel is not one-dimensional");

  const double shift = 1.0 / static_cast<double>(n);
  DenseMatrix completed = l;
  for (double& v : completed.data) v += shift;
  DenseMatrix inv = dense_inverse(completed);
  for (double& v : inv.data) v -= shift;
  return inv;
}

ComparisonReport compare(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(ErrorKind::Dimension, "comparison shape mismatch");
  ComparisonReport rep;
  rep.tolerance = tol;
  double diff_sq = 0.0;
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      const double d = std::fabs(a.at(i, j) - b.at(i, j));
      diff_sq += d * d;
      if (d > rep.max_abs_diff) {
        rep.max_abs_diff = d;
        rep.argmax_row = i;
        rep.argmax_col = j;
      }
    }
  }
  const double ref = frobenius(b);
  rep.rel_frobenius = std::sqrt(diff_sq) / (ref > 0.0 ? ref : 1.0);
  rep.passed = rep.rel_frobenius <= tol;
  return rep;
}

}  // namespace ncwheel
