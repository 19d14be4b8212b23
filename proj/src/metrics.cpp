#include "metrics.hpp"

#include <cmath>
#include <utility>

#include "chebyshev.hpp"
#include "error.hpp"

namespace ncwheel {

namespace {

double resistance_cycle_pair(const WheelParams& p, int u, int v,
                             const CycleResistanceChoices& ch) {
  const int m = p.m(), di = p.d();
  int k1 = u / di + 1, h1i = u % di;
  int k2 = v / di + 1, h2i = v % di;
  if (k1 > k2 || (k1 == k2 && h1i > h2i)) {
    std::swap(k1, k2);
    std::swap(h1i, h2i);
  }
  const int kp = k2 - k1 + 1;
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const double h1 = h1i, h2 = h2i;
  const double tm1 = cheb_t(m, q) - 1.0;

  const double cheb =
      (1.0 / c) * (h2 - h1) * (cheb_v(kp - 1, q) - cheb_v(m - kp, q)) +
      ch.u_product_sign * ((a / (c * c)) * h1 * (h2 - d) - d / c) *
          (cheb_u(kp - 2, q) + cheb_u(m - kp, q)) +
      ((a / (2.0 * c * c)) * (h1 * h1 + h2 * h2 - (h1 + h2) * d) - d / c) * cheb_u(m - 1, q);
  double r = -cheb / tm1;

  const double offset = ch.printed_block_offset ? kp * (d - 1.0) : (kp - 1.0) * d;
  const double delta = std::fabs(h1 - h2 - offset);
  const double linear = ch.printed_linear_coeff ? (3.0 * h1 - 2.0 * h2) * d
                                                : 2.0 * (h1 - h2) * d;
  const double poly = delta * (n - delta) - (2.0 * kp * d + 2.0 * h2) * h1 -
                      kp * d * (n - 2.0 * h2) + d * d * (kp - 1.0) * (kp - 1.0) +
                      h1 * h1 + h2 * h2 + linear + n * (h1 - h2 + d);
  r += poly / (c * n);

  if (ch.keep_printed_tail)
    r -= (n - 1.0) * (n - 1.0) * (d * d - 1.0) / (6.0 * c * (n + 1.0) * (n + 1.0));
  return r;
}

double resistance_hub_pair(const WheelParams& p, int u, const HubResistanceChoices& ch) {
  const int m = p.m();
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const double h1 = u % p.d();
  const double tm1 = cheb_t(m, q) - 1.0;

  const double cheb =
      (d / (a * n)) * (cheb_v(m - 1, q) - 1.0) +
      ch.u_product_sign * (1.0 / (2.0 * c * n)) *
          ((a * n / c) * (h1 * h1 - h1 * d) - n * d + d * d) * cheb_u(m - 1, q);
  double r = -cheb / tm1;

  if (!ch.keep_printed_tail) {
    r += d / (a * n);
  } else {
    r += (h1 * h1 - h1 * d) / (c * (n + 1.0) * (n + 1.0)) +
         (12.0 * c * d * (n * n + 1.0) + a * n * n * (d * d - 1.0)) /
             (12.0 * a * c * n * (n + 1.0) * (n + 1.0)) +
         ch.printed_tail_sign * ((6.0 * h1 * h1 - 6.0 * h1 * d - 1.0) / (6.0 * c * (n + 1.0) * (n + 1.0))) *
             (a * (d * d - 1.0) / (12.0 * c * d) + n + 2.0);
  }
  return r;
}

}  // namespace

double effective_resistance(const DenseMatrix& ginv, int i, int j) {
  if (ginv.rows != ginv.cols) fail(ErrorKind::Dimension, "group inverse must be square");
  if (i < 0 || i >= ginv.rows || j < 0 || j >= ginv.rows)
    fail(ErrorKind::Index, "vertex index out of range");
  if (i == j) return 0.0;
  return ginv.at(i, i) + ginv.at(j, j) - 2.0 * ginv.at(i, j);
}

double kirchhoff_green(const DenseMatrix& ginv) {
  if (ginv.rows != ginv.cols) fail(ErrorKind::Dimension, "group inverse must be square");
  double trace = 0.0;
  for (int i = 0; i < ginv.rows; ++i) trace += ginv.at(i, i);
  return static_cast<double>(ginv.rows) * trace;
}

DenseMatrix resistance_table(const DenseMatrix& ginv) {
  if (ginv.rows != ginv.cols) fail(ErrorKind::Dimension, "group inverse must be square");
  const int nv = ginv.rows;
  DenseMatrix out(nv, nv);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      const double r = ginv.at(i, i) + ginv.at(j, j) - 2.0 * ginv.at(i, j);
      out.at(i, j) = r;
      out.at(j, i) = r;
    }
  return out;
}

double resistance_closed(const WheelParams& p, int i, int j) {
  return resistance_closed(p, i, j, CycleResistanceChoices{}, HubResistanceChoices{});
}

double resistance_closed(const WheelParams& p, int i, int j,
                         const CycleResistanceChoices& cycle_choices,
                         const HubResistanceChoices& hub_choices) {
  const int n = p.n();
  if (i < 0 || i > n || j < 0 || j > n) fail(ErrorKind::Index, "vertex index out of range");
  if (i == j) return 0.0;
  if (i == n) return resistance_hub_pair(p, j, hub_choices);
  if (j == n) return resistance_hub_pair(p, i, hub_choices);
  return resistance_cycle_pair(p, i, j, cycle_choices);
}

double kirchhoff_closed(const WheelParams& p) { return kirchhoff_closed(p, KirchhoffChoices{}); }

double kirchhoff_closed(const WheelParams& p, const KirchhoffChoices& ch) {
  const int m = p.m();
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const double tm1 = cheb_t(m, q) - 1.0;
  const double bracket =
      (a * n / (6.0 * c) - d * n + d * d) * cheb_u(m - 1, q) +
      (2.0 * c * d / a + d * n / 3.0) * (cheb_v(m - 1, q) - 1.0);
  const double last = ch.printed_last_term ? (d - 1.0) * (d - 1.0) * n / (12.0 * c)
                                           : n * (d * d - 1.0) / (12.0 * c);
  return -(n + 1.0) * bracket / (2.0 * c * tm1) + d / a + d * n * (n + 1.0) / (6.0 * c) - last;
}

double kirchhoff_wheel(const WheelParams& p) {
  return kirchhoff_wheel(p, WheelKirchhoffChoices{});
}

double kirchhoff_wheel(const WheelParams& p, const WheelKirchhoffChoices& ch) {
  if (p.d() != 1) fail(ErrorKind::Domain, "complete-wheel form requires d = 1");
  const int m = p.m();
  const double n = p.n(), a = p.a(), c = p.c(), q = p.q();
  const double tm1 = cheb_t(m, q) - 1.0;
  const double bracket = (a * n / (6.0 * c) - n + 1.0) * cheb_u(m - 1, q) +
                         (2.0 * c / a + n / 3.0) * (cheb_v(m - 1, q) - 1.0);
  return -(n + 1.0) * bracket / (2.0 * c * tm1) +
         ch.inverse_conductance_sign * (1.0 / a) + n * (n + 1.0) / (6.0 * c);
}

}  // namespace ncwheel
