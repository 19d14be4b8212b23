#include "chebyshev.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace ncwheel {

namespace {

void check_finite(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::Domain, "chebyshev argument must be finite");
}

void guard(double v, const char* kind) {
  if (std::fabs(v) > kChebOverflowGuard)
    fail(ErrorKind::Overflow,
         std::string(kind) + " recurrence exceeded the 1e300 magnitude guard");
}

}  // namespace

double cheb_t(int k, double x) {
  if (k < 0) fail(ErrorKind::Domain, "cheb_t requires k >= 0");
  check_finite(x);
  if (k == 0) return 1.0;
  guard(x, "T");
  if (k == 1) return x;
  double prev = 1.0;
  double cur = x;
  for (int i = 2; i <= k; ++i) {
    const double next = 2.0 * x * cur - prev;
    guard(next, "T");
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_u(int k, double x) {
  if (k < -1) fail(ErrorKind::Domain, "cheb_u requires k >= -1");
  check_finite(x);
  if (k == -1) return 0.0;
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  guard(cur, "U");
  for (int i = 2; i <= k; ++i) {
    const double next = 2.0 * x * cur - prev;
    guard(next, "U");
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_v(int k, double x) {
  if (k < 0) fail(ErrorKind::Domain, "cheb_v requires k >= 0");
  return cheb_u(k, x) - cheb_u(k - 1, x);
}

ChebArg cheb_argument(double a, double c, int d) {
  if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorKind::Domain, "conductance a must be positive");
  if (!(c > 0.0) || !std::isfinite(c)) fail(ErrorKind::Domain, "conductance c must be positive");
  if (d < 1) fail(ErrorKind::Domain, "spacing d must be at least 1");
  return ChebArg{a * static_cast<double>(d) / (2.0 * c) + 1.0};
}

}  // namespace ncwheel
