#include "wheel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "chebyshev.hpp"
#include "error.hpp"

namespace ncwheel {

WheelParams::WheelParams(int m, int d, double a, double c)
    : m_(m), d_(d), a_(a), c_(c) {
  if (m < 2)
    fail(ErrorKind::Domain, "m must be > 1 (m = " + std::to_string(m) +
                                "): a single hub attachment has no invertible reduced circulant");
  if (d < 1) fail(ErrorKind::Domain, "spacing d must be at least 1");
  if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorKind::Domain, "conductance a must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorKind::Domain, "conductance c must be positive");
}

double WheelParams::q() const { return cheb_argument(a_, c_, d_).q; }

DenseMatrix build_laplacian(const WheelParams& p) {
  const int n = p.n();
  DenseMatrix l(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    l.at(i, i) = 2.0 * p.c();
    const int next = (i + 1) % n;
    l.at(i, next) -= p.c();
    l.at(next, i) -= p.c();
  }
  for (int s : spoke_vertices(p)) {
    l.at(s, s) += p.a();
    l.at(s, n) = -p.a();
    l.at(n, s) = -p.a();
  }
  l.at(n, n) = p.alpha();
  return l;
}

DenseMatrix cycle_laplacian(int n, double c) {
  if (n < 2) fail(ErrorKind::Domain, "cycle needs at least 2 vertices");
  if (!(c > 0.0)) fail(ErrorKind::Domain, "conductance c must be positive");
  DenseMatrix l(n, n);
  for (int i = 0; i < n; ++i) {
    l.at(i, i) = 2.0 * c;
    const int next = (i + 1) % n;
    l.at(i, next) -= c;
    l.at(next, i) -= c;
  }
  return l;
}

double cycle_green_entry(int n, double c, int i, int j) {
  if (n < 2) fail(ErrorKind::Domain, "cycle needs at least 2 vertices");
  if (!(c > 0.0)) fail(ErrorKind::Domain, "conductance c must be positive");
  if (i < 0 || i >= n || j < 0 || j >= n)
    fail(ErrorKind::Index, "cycle vertex index out of range");
  const double nn = n;
  const double dist = std::abs(i - j);
  return (nn * nn - 1.0 - 6.0 * dist * (nn - dist)) / (12.0 * c * nn);
}

DenseMatrix cycle_green_matrix(int n, double c) {
  DenseMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = cycle_green_entry(n, c, i, j);
  return g;
}

std::vector<int> spoke_vertices(const WheelParams& p) {
  std::vector<int> out(p.m());
  for (int k = 0; k < p.m(); ++k) out[k] = k * p.d();
  return out;
}

std::vector<double> hub_border_column(const WheelParams& p) {
  std::vector<double> s(p.n(), 0.0);
  for (int v : spoke_vertices(p)) s[v] = -p.a();
  return s;
}

}  // namespace ncwheel
