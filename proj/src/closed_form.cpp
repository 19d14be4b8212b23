#include "closed_form.hpp"

#include <cmath>

#include "chebyshev.hpp"
#include "error.hpp"
#include "pipeline.hpp"

namespace ncwheel {

double theorem_corner(const WheelParams& p) {
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c();
  return (12.0 * c * d * n + a * n * (d * d - 1.0)) / (12.0 * a * c * (n + 1.0) * (n + 1.0));
}

double theorem_border_entry(const WheelParams& p, int i) {
  if (i < 1 || i > p.d()) fail(ErrorKind::Index, "border row position out of range 1..d");
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c();
  const double nu = gs_vector(p)[i - 1];
  return -(d / (a * (n + 1.0) * (n + 1.0))) *
         (a * (d * d - 1.0) / (12.0 * c * d) + 1.0 + (n + 1.0) * nu);
}

double theorem_border_entry_printed(const WheelParams& p, int i) {
  if (i < 1 || i > p.d()) fail(ErrorKind::Index, "border row position out of range 1..d");
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c();
  const double nu = gs_vector(p)[i - 1];
  return -(d / (a * (n + 1.0) * (n + 1.0))) *
         (a * (d * d - 1.0) / (12.0 * c * d) + n + 2.0) * nu;
}

double theorem_block_entry(const WheelParams& p, int k, int i, int h) {
  return theorem_block_entry(p, k, i, h, TheoremChoices{});
}

double theorem_block_entry(const WheelParams& p, int k, int i, int h,
                           const TheoremChoices& ch) {
  if (k < 1 || k > p.m()) fail(ErrorKind::Index, "block index k out of range 1..m");
  if (i < 1 || i > p.d()) fail(ErrorKind::Index, "row-in-block index i out of range 1..d");
  if (h < 0 || h >= p.d()) fail(ErrorKind::Index, "column offset h out of range 0..d-1");

  const int m = p.m();
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const double tm1 = cheb_t(m, q) - 1.0;

  const double offset = ch.printed_block_offset ? k * (d - 1.0) : (k - 1.0) * d;
  const double delta = std::fabs((i - 1.0) - offset - h);

  const double cheb =
      n * (h - i + 1.0) * (cheb_v(k - 1, q) - cheb_v(m - k, q)) +
      ch.u_product_sign * ((a * n / c) * (i - 1.0) * (h - d) - n * d) *
          (cheb_u(k - 2, q) + cheb_u(m - k, q)) -
      (2.0 * c * d / a) * (cheb_v(m - 1, q) - 1.0) - d * d * cheb_u(m - 1, q);

  const double poly = d * h + n * h - n * d +
                      ch.linear_term_sign * (2.0 * k * d - 3.0 * d + 2.0 * h - n) * (i - 1.0) +
                      k * d * (n - 2.0 * h) - d * d * (k - 1.0) * (k - 1.0);

  const double border =
      (1.0 / (n + 1.0)) *
          ((n - 1.0) * (d * d - 1.0) / 6.0 - (i - 2.0 - d) * i - h * h + d * h - d - 1.0) +
      ch.border_term_sign * (a * (d * d - 1.0) + 12.0 * c * d) /
          (6.0 * a * (n + 1.0) * (n + 1.0));

  return (-delta * (n - delta) + cheb / tm1 + poly + border) / (2.0 * c * n);
}

DenseMatrix theorem_matrix(const WheelParams& p) {
  const int m = p.m(), d = p.d(), n = p.n();
  DenseMatrix out(n + 1, n + 1);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      const int k = ((s - r) % m + m) % m + 1;
      for (int i = 1; i <= d; ++i)
        for (int h = 0; h < d; ++h)
          out.at(r * d + i - 1, s * d + h) = theorem_block_entry(p, k, i, h);
    }
  for (int u = 0; u < n; ++u) {
    const double border = theorem_border_entry(p, u % d + 1);
    out.at(u, n) = border;
    out.at(n, u) = border;
  }
  out.at(n, n) = theorem_corner(p);
  return out;
}

}  // namespace ncwheel
