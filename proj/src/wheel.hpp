#ifndef NCWHEEL_WHEEL_HPP
#define NCWHEEL_WHEEL_HPP

#include <vector>

#include "dense_matrix.hpp"

namespace ncwheel {

/// Parameters of a non-complete wheel: a cycle on n = m*d vertices with
/// constant edge conductance c, plus a hub joined by conductance a to the m
/// equally spaced spoke vertices {0, d, 2d, ...} (0-based, hub = n).
///
/// m = 1 (a pendant hub) is rejected: the reduced circulant the closed form
/// rests on is invertible only for m > 1. n = 2 is allowed and means the
/// two cycle vertices are joined by a doubled edge of total conductance 2c,
/// which is the reading consistent with the circulant Laplacian and its
/// Green formula.
class WheelParams {
 public:
  WheelParams(int m, int d, double a, double c);

  int m() const { return m_; }
  int d() const { return d_; }
  double a() const { return a_; }
  double c() const { return c_; }
  int n() const { return m_ * d_; }
  double alpha() const { return static_cast<double>(m_) * a_; }
  /// Recurrence argument q = a*d/(2c) + 1.
  double q() const;

 private:
  int m_;
  int d_;
  double a_;
  double c_;
};

/// (n+1) x (n+1) Laplacian of the wheel; rows/columns 0..n-1 are the cycle in
/// order, row/column n is the hub. Exact zero row sums by construction.
DenseMatrix build_laplacian(const WheelParams& p);

/// Laplacian of the bare cycle C_n with conductance c.
DenseMatrix cycle_laplacian(int n, double c);

/// Entry (i, j) of the cycle's Green matrix (the group inverse of
/// cycle_laplacian): (n^2 - 1 - 6|i-j|(n - |i-j|)) / (12 c n).
double cycle_green_entry(int n, double c, int i, int j);

DenseMatrix cycle_green_matrix(int n, double c);

/// Ascending spoke vertex ids {0, d, ..., (m-1)d}.
std::vector<int> spoke_vertices(const WheelParams& p);

/// The bordered column s of the wheel Laplacian: -a at every spoke, 0
/// elsewhere; length n.
std::vector<double> hub_border_column(const WheelParams& p);

}  // namespace ncwheel

#endif
