#include "pipeline.hpp"

#include <cmath>
#include <string>

#include "chebyshev.hpp"
#include "error.hpp"

namespace ncwheel {

namespace {

void check_block_indices(const WheelParams& p, int k, int i, int h) {
  if (k < 1 || k > p.m()) fail(ErrorKind::Index, "block index k out of range 1..m");
  if (i < 1 || i > p.d()) fail(ErrorKind::Index, "row-in-block index i out of range 1..d");
  if (h < 0 || h >= p.d()) fail(ErrorKind::Index, "column offset h out of range 0..d-1");
}

/// Shared Chebyshev bracket of the K/M block entries:
///   n(h-i+1)(V_{k-1} - V_{m-k}) - ((an/c)(i-1)(h-d) - nd)(U_{k-2} + U_{m-k})
///   - (2cd/a)(V_{m-1} - 1) - d^2 U_{m-1}
double block_cheb_bracket(const WheelParams& p, int k, int i, int h) {
  const double n = p.n(), d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const int m = p.m();
  return n * (h - i + 1) * (cheb_v(k - 1, q) - cheb_v(m - k, q)) -
         ((a * n / c) * (i - 1) * (h - d) - n * d) * (cheb_u(k - 2, q) + cheb_u(m - k, q)) -
         (2.0 * c * d / a) * (cheb_v(m - 1, q) - 1.0) - d * d * cheb_u(m - 1, q);
}

/// Shared polynomial tail: dh + nh - nd + (2kd - 3d + 2h - n)(i-1)
///   + kd(n - 2h) - d^2 (k-1)^2
double block_poly_tail(const WheelParams& p, int k, int i, int h) {
  const double n = p.n(), d = p.d();
  return d * h + n * h - n * d + (2.0 * k * d - 3.0 * d + 2.0 * h - n) * (i - 1) +
         k * d * (n - 2.0 * h) - d * d * (k - 1.0) * (k - 1.0);
}

}  // namespace

CirculantVec reduced_green(const WheelParams& p) {
  const int m = p.m();
  CirculantVec g{m, std::vector<double>(m, 0.0)};
  const double factor = -static_cast<double>(p.d()) / (2.0 * p.c() * m);
  for (int j = 1; j < m; ++j) g.row[j] = factor * j * (m - j);
  return g;
}

CirculantVec reduced_green_inverse(const WheelParams& p) {
  const int m = p.m();
  const double n = p.n();
  const double c = p.c();
  CirculantVec inv{m, std::vector<double>(m, 0.0)};
  if (m == 2) {
    inv.row[1] = -4.0 * c / p.d();
  } else {
    const double mm = m;
    const double b0 = (mm * mm * mm - mm - 6.0) / 6.0;
    const double b1 = (mm * mm * mm - mm + 12.0) / 12.0;
    const double factor = 12.0 * c / (n * (mm * mm - 1.0));
    inv.row[0] = factor * b0;
    inv.row[1] = -factor * b1;
    inv.row[m - 1] = -factor * b1;
    for (int j = 2; j <= m - 2; ++j) inv.row[j] = -factor;
  }
  const double defect = circ_identity_defect(reduced_green(p), inv);
  if (defect > 1e-8)
    fail(ErrorKind::Singular,
         "reduced Green inverse residual " + std::to_string(defect) + " exceeds 1e-8");
  return inv;
}

CirculantVec mr_matrix(const WheelParams& p) {
  const int m = p.m();
  const double d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const double tm1 = cheb_t(m, q) - 1.0;
  const double affine = (12.0 * c + a * d * (static_cast<double>(m) * m - 1.0)) / (12.0 * a * c * m);
  CirculantVec mr{m, std::vector<double>(m, 0.0)};
  for (int j = 1; j <= m; ++j)
    mr.row[j - 1] = (cheb_u(j - 2, q) + cheb_u(m - j, q)) * d / (2.0 * c * tm1) - affine;
  return mr;
}

std::vector<double> f_coeffs(const WheelParams& p) {
  const int m = p.m();
  const double d = p.d(), a = p.a(), c = p.c(), q = p.q();
  const double tm1 = cheb_t(m, q) - 1.0;
  std::vector<double> f(m);
  for (int i = 1; i <= m; ++i) {
    f[i - 1] = (i == 1 ? a : 0.0) -
               (a * a * d / (2.0 * c)) * (cheb_u(i - 2, q) + cheb_u(m - i, q)) / tm1;
  }
  return f;
}

std::vector<std::vector<double>> h_first_columns(const WheelParams& p) {
  const int m = p.m(), d = p.d();
  const double n = p.n(), a = p.a(), c = p.c(), q = p.q();
  const double tm1 = cheb_t(m, q) - 1.0;
  const double dd = d;
  std::vector<std::vector<double>> cols(m, std::vector<double>(d, 0.0));
  for (int i = 1; i <= d; ++i) {
    cols[0][i - 1] = -dd / n - (a / (2.0 * c)) *
                                   ((i - 1) * (cheb_v(m - 1, q) - 1.0) - dd * cheb_u(m - 1, q)) / tm1;
  }
  for (int k = 2; k <= m; ++k) {
    const double vdiff = cheb_v(k - 1, q) - cheb_v(m - k, q);
    const double usum = cheb_u(k - 2, q) + cheb_u(m - k, q);
    for (int i = 1; i <= d; ++i) {
      cols[k - 1][i - 1] =
          -dd / n -
          (a / (2.0 * c)) * ((i - 1) * vdiff - (dd / c) * (a * (i - 1) + c) * usum) / tm1;
    }
  }
  return cols;
}

double k_block_entry(const WheelParams& p, int k, int i, int h) {
  check_block_indices(p, k, i, h);
  const double n = p.n(), d = p.d(), c = p.c();
  const double tm1 = cheb_t(p.m(), p.q()) - 1.0;
  const double poly = block_poly_tail(p, k, i, h) - n * n / 6.0 + d * d / 6.0;
  return -(block_cheb_bracket(p, k, i, h) / tm1 + poly) / (2.0 * c * n);
}

double m_block_entry(const WheelParams& p, int k, int i, int h) {
  check_block_indices(p, k, i, h);
  const double n = p.n(), d = p.d(), c = p.c();
  const double tm1 = cheb_t(p.m(), p.q()) - 1.0;
  const double delta = std::fabs((i - 1) - (k - 1) * p.d() - h);
  return (-delta * (n - delta) + block_cheb_bracket(p, k, i, h) / tm1 +
          block_poly_tail(p, k, i, h)) /
             (2.0 * c * n) +
         (d * d - 1.0) / (12.0 * c * n);
}

std::vector<double> gs_vector(const WheelParams& p) {
  const int d = p.d();
  const double n = p.n(), a = p.a(), c = p.c(), m = p.m();
  std::vector<double> nu(d);
  for (int i = 1; i <= d; ++i) {
    nu[i - 1] = -(a / (12.0 * c * n)) *
                (n * (6.0 + d) + 5.0 * m + 6.0 * m * i * (i - static_cast<double>(d) - 2.0));
  }
  return nu;
}

DenseMatrix induced_f(const WheelParams& p) {
  const int m = p.m(), d = p.d(), n = p.n();
  const std::vector<double> f = f_coeffs(p);
  DenseMatrix out(n, n);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) out.at(r * d, s * d) = f[((s - r) % m + m) % m];
  return out;
}

DenseMatrix induced_h(const WheelParams& p) {
  const int m = p.m(), d = p.d(), n = p.n();
  const std::vector<std::vector<double>> cols = h_first_columns(p);
  DenseMatrix out(n, n);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      const std::vector<double>& col = cols[((s - r) % m + m) % m];
      for (int i = 0; i < d; ++i) out.at(r * d + i, s * d) = col[i];
    }
  return out;
}

DenseMatrix induced_k(const WheelParams& p) {
  const int m = p.m(), d = p.d(), n = p.n();
  DenseMatrix out(n, n);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      const int k = ((s - r) % m + m) % m + 1;
      for (int i = 1; i <= d; ++i)
        for (int h = 0; h < d; ++h) out.at(r * d + i - 1, s * d + h) = k_block_entry(p, k, i, h);
    }
  return out;
}

DenseMatrix induced_m(const WheelParams& p) {
  const int m = p.m(), d = p.d(), n = p.n();
  DenseMatrix out(n, n);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      const int k = ((s - r) % m + m) % m + 1;
      for (int i = 1; i <= d; ++i)
        for (int h = 0; h < d; ++h) out.at(r * d + i - 1, s * d + h) = m_block_entry(p, k, i, h);
    }
  return out;
}

DenseMatrix assemble_group_inverse(const WheelParams& p) {
  const int n = p.n();
  const double alpha = p.alpha();
  const double nn = n;

  const DenseMatrix m_mat = induced_m(p);
  const std::vector<double> s = hub_border_column(p);

  DenseMatrix c_mat(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = s[j] / nn;
      if (i == j) v += alpha * (nn + 1.0) / nn;
      c_mat.at(i, j) = v;
    }
  }

  const DenseMatrix cm = multiply(c_mat, m_mat);
  const DenseMatrix top = multiply(cm, transpose(c_mat));
  const std::vector<double> cms = matvec(cm, s);
  const std::vector<double> ms = matvec(m_mat, s);
  const double sms = dot(s, ms);

  const double prefactor = nn * nn / (alpha * alpha * (1.0 + nn) * (1.0 + nn));
  DenseMatrix a(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      a.at(i, j) = prefactor * (top.at(i, j) + alpha / (nn * nn));
    const double border = prefactor * (-alpha / nn - cms[i]);
    a.at(i, n) = border;
    a.at(n, i) = border;
  }
  a.at(n, n) = prefactor * (alpha + sms);

  // Group-inverse self-check against the Laplacian; a failure here means an
  // implementation fault, not a tolerance issue.
  const DenseMatrix lap = build_laplacian(p);
  const DenseMatrix al = multiply(a, lap);
  const DenseMatrix la = multiply(lap, a);
  const double res_commute = max_abs_diff(al, la);
  const double res_ala = max_abs_diff(multiply(al, a), a);
  const double res_lal = max_abs_diff(multiply(la, lap), lap);
  const double worst = std::max({res_commute, res_ala, res_lal});
  if (worst > 1e-6)
    fail(ErrorKind::AxiomViolation,
         "assembled group inverse violates an axiom (residual " + std::to_string(worst) + ")");
  return a;
}

}  // namespace ncwheel
