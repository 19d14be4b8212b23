#include <doctest.h>

#include <cmath>
#include <vector>

#include "circulant.hpp"
#include "dense_matrix.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "test_support.hpp"
#include "wheel.hpp"

using namespace ncwheel;
using testsupport::small_sweep;

namespace {

std::vector<double> periodic_gs(const WheelParams& p) {
  const std::vector<double> nu = gs_vector(p);
  std::vector<double> out(p.n());
  for (int u = 0; u < p.n(); ++u) out[u] = nu[u % p.d()];
  return out;
}

DenseMatrix shift_stable_block(const DenseMatrix& a, int m, int d) {
  // max |block(r,s) - block(r+1, s+1)| over all cyclic block positions
  DenseMatrix defect(1, 1);
  double worst = 0.0;
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      const int r2 = (r + 1) % m, s2 = (s + 1) % m;
      for (int i = 0; i < d; ++i)
        for (int h = 0; h < d; ++h)
          worst = std::max(worst, std::fabs(a.at(r * d + i, s * d + h) -
                                            a.at(r2 * d + i, s2 * d + h)));
    }
  defect.at(0, 0) = worst;
  return defect;
}

}  // namespace

TEST_CASE("reduced Green circulant: frozen rows and symmetry") {
  const CirculantVec g3 = reduced_green(WheelParams(3, 1, 1.0, 1.0));
  REQUIRE(g3.row.size() == 3);
  CHECK(g3.row[0] == 0.0);
  CHECK(g3.row[1] == doctest::Approx(-1.0 / 3).epsilon(1e-15));
  CHECK(g3.row[2] == doctest::Approx(-1.0 / 3).epsilon(1e-15));

  const CirculantVec g2 = reduced_green(WheelParams(2, 2, 1.0, 1.0));
  CHECK(g2.row[0] == 0.0);
  CHECK(g2.row[1] == doctest::Approx(-0.5).epsilon(1e-15));

  for (const WheelParams& p : small_sweep()) {
    const CirculantVec g = reduced_green(p);
    for (int j = 1; j < p.m(); ++j)
      CHECK(g.row[j] == doctest::Approx(g.row[p.m() - j]).epsilon(1e-15));
  }
}

TEST_CASE("reduced Green equals the recentered spoke submatrix of the cycle Green matrix") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix gr = to_dense(reduced_green(p));
    const DenseMatrix g = cycle_green_matrix(p.n(), p.c());
    const double center = (static_cast<double>(p.n()) * p.n() - 1.0) / (12.0 * p.c() * p.n());
    const std::vector<int> spokes = spoke_vertices(p);
    for (int r = 0; r < p.m(); ++r)
      for (int s = 0; s < p.m(); ++s)
        CHECK(std::fabs(gr.at(r, s) - (g.at(spokes[r], spokes[s]) - center)) <= 1e-12);
  }
}

TEST_CASE("reduced Green inverse: frozen row and product identity") {
  const CirculantVec inv3 = reduced_green_inverse(WheelParams(3, 1, 1.0, 1.0));
  CHECK(inv3.row[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(inv3.row[1] == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(inv3.row[2] == doctest::Approx(-1.5).epsilon(1e-15));

  const WheelParams p42(4, 2, 1.0, 1.0);
  CHECK(circ_identity_defect(reduced_green(p42), reduced_green_inverse(p42)) <= 1e-12);

  for (const WheelParams& p : small_sweep())
    CHECK(circ_identity_defect(reduced_green(p), reduced_green_inverse(p)) <= 1e-10);
}

TEST_CASE("reduced Green inverse handles the m = 2 special case") {
  const CirculantVec inv = reduced_green_inverse(WheelParams(2, 2, 1.0, 1.0));
  CHECK(inv.row[0] == 0.0);
  CHECK(inv.row[1] == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("M_R circulant: frozen values, row-sum identity, inverse identity") {
  const WheelParams k4(3, 1, 1.0, 1.0);
  const CirculantVec mr = mr_matrix(k4);
  CHECK(mr.row[0] == doctest::Approx(-1.0 / 18).epsilon(1e-13));
  CHECK(mr.row[1] == doctest::Approx(-11.0 / 36).epsilon(1e-13));
  CHECK(mr.row[2] == doctest::Approx(-11.0 / 36).epsilon(1e-13));

  for (const WheelParams& p : small_sweep()) {
    const int m = p.m();
    double sum = 0.0;
    for (double v : mr_matrix(p).row) sum += v;
    const double expected = -p.d() * (static_cast<double>(m) * m - 1.0) / (12.0 * p.c());
    CHECK(std::fabs(sum - expected) <= 1e-10);

    // M_R * (G_R^{-1} + (a/m)(m I - J)) = I, with the sum formed densely
    DenseMatrix target = to_dense(reduced_green_inverse(p));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) target.at(i, j) += p.a() / m * (i == j ? m - 1.0 : -1.0);
    const DenseMatrix prod = multiply(to_dense(mr_matrix(p)), target);
    CHECK(max_abs_diff(prod, DenseMatrix::identity(m)) <= 1e-10);
  }
}

TEST_CASE("spoke coupling coefficients") {
  const std::vector<double> f = f_coeffs(WheelParams(3, 1, 1.0, 1.0));
  CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(f[1] == doctest::Approx(-0.25).epsilon(1e-13));
  CHECK(f[2] == doctest::Approx(-0.25).epsilon(1e-13));

  for (const WheelParams& p : small_sweep()) {
    double sum = 0.0;
    for (double v : f_coeffs(p)) sum += v;
    CHECK(std::fabs(sum) <= 1e-10);

    std::vector<double> ones(static_cast<size_t>(p.n()), 1.0);
    CHECK(max_abs(matvec(induced_f(p), ones)) <= 1e-10);
  }
}

TEST_CASE("H blocks equal the dense product G F") {
  const std::vector<std::vector<double>> cols = h_first_columns(WheelParams(3, 1, 1.0, 1.0));
  CHECK(cols[0][0] == doctest::Approx(1.0 / 6).epsilon(1e-13));

  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix g = cycle_green_matrix(p.n(), p.c());
    const DenseMatrix gf = multiply(g, induced_f(p));
    CHECK(max_abs_diff(induced_h(p), gf) <= 1e-10);

    std::vector<double> ones(static_cast<size_t>(p.n()), 1.0);
    CHECK(max_abs(matvec(induced_h(p), ones)) <= 1e-10);
  }
}

TEST_CASE("K blocks equal the dense products H G and G F G") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix g = cycle_green_matrix(p.n(), p.c());
    const DenseMatrix gfg = multiply(multiply(g, induced_f(p)), g);
    const DenseMatrix hg = multiply(induced_h(p), g);
    const DenseMatrix k = induced_k(p);
    CHECK(max_abs_diff(k, gfg) <= 1e-10);
    CHECK(max_abs_diff(k, hg) <= 1e-10);
    CHECK(symmetry_defect(k) <= 1e-10);
  }

  const WheelParams p22(2, 2, 1.0, 1.0);
  const DenseMatrix g = cycle_green_matrix(4, 1.0);
  const DenseMatrix gfg = multiply(multiply(g, induced_f(p22)), g);
  for (int k = 1; k <= 2; ++k)
    for (int i = 1; i <= 2; ++i)
      for (int h = 0; h <= 1; ++h)
        CHECK(std::fabs(k_block_entry(p22, k, i, h) - gfg.at(i - 1, (k - 1) * 2 + h)) <= 1e-12);
}

TEST_CASE("M blocks equal G - K with zero row sums") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix g = cycle_green_matrix(p.n(), p.c());
    const DenseMatrix m = induced_m(p);
    CHECK(max_abs_diff(m, subtract(g, induced_k(p))) <= 1e-10);
    CHECK(symmetry_defect(m) <= 1e-10);
    std::vector<double> ones(static_cast<size_t>(p.n()), 1.0);
    CHECK(max_abs(matvec(m, ones)) <= 1e-10);
  }

  const WheelParams p22(2, 2, 1.0, 1.0);
  const DenseMatrix g = cycle_green_matrix(4, 1.0);
  const DenseMatrix expected = subtract(g, multiply(multiply(g, induced_f(p22)), g));
  CHECK(std::fabs(m_block_entry(p22, 1, 1, 0) - expected.at(0, 0)) <= 1e-12);
}

TEST_CASE("block index validation") {
  const WheelParams p(3, 2, 1.0, 1.0);
  CHECK_THROWS_AS(m_block_entry(p, 0, 1, 0), Error);
  CHECK_THROWS_AS(m_block_entry(p, 4, 1, 0), Error);
  CHECK_THROWS_AS(m_block_entry(p, 1, 0, 0), Error);
  CHECK_THROWS_AS(m_block_entry(p, 1, 3, 0), Error);
  CHECK_THROWS_AS(k_block_entry(p, 1, 1, 2), Error);
}

TEST_CASE("gs period vector against the dense product G s") {
  CHECK(gs_vector(WheelParams(3, 1, 1.0, 1.0))[0] == doctest::Approx(0.0).epsilon(1e-15));

  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix g = cycle_green_matrix(p.n(), p.c());
    const std::vector<double> dense = matvec(g, hub_border_column(p));
    const std::vector<double> period = periodic_gs(p);
    for (int u = 0; u < p.n(); ++u) CHECK(std::fabs(period[u] - dense[u]) <= 1e-10);

    CHECK(max_abs(matvec(induced_f(p), period)) <= 1e-10);

    std::vector<double> ms = matvec(induced_m(p), hub_border_column(p));
    for (int u = 0; u < p.n(); ++u) ms[u] -= period[u];
    CHECK(max_abs(ms) <= 1e-10);
  }
}

TEST_CASE("block Toeplitz closure of the dense products") {
  for (const WheelParams& p : small_sweep()) {
    const int m = p.m(), d = p.d();
    const DenseMatrix g = cycle_green_matrix(p.n(), p.c());
    const DenseMatrix f = induced_f(p);
    CHECK(shift_stable_block(f, m, d).at(0, 0) <= 1e-10);
    CHECK(shift_stable_block(multiply(g, f), m, d).at(0, 0) <= 1e-10);
    CHECK(shift_stable_block(multiply(multiply(g, f), g), m, d).at(0, 0) <= 1e-10);
    CHECK(shift_stable_block(subtract(g, multiply(multiply(g, f), g)), m, d).at(0, 0) <= 1e-10);
  }
}

TEST_CASE("assembled group inverse reproduces the complete-graph values") {
  const DenseMatrix a = assemble_group_inverse(WheelParams(3, 1, 1.0, 1.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::fabs(a.at(i, j) - (i == j ? 3.0 / 16 : -1.0 / 16)) <= 1e-12);
}

TEST_CASE("assembled group inverse hub diagonal for the two-spoke wheel") {
  const DenseMatrix a = assemble_group_inverse(WheelParams(2, 2, 1.0, 1.0));
  CHECK(std::fabs(a.at(4, 4) - 0.36) <= 1e-12);
}

TEST_CASE("assembled group inverse: axioms and oracle agreement across the sweep") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix a = assemble_group_inverse(p);
    const DenseMatrix l = build_laplacian(p);

    CHECK(symmetry_defect(a) <= 1e-12);
    std::vector<double> ones(static_cast<size_t>(a.rows), 1.0);
    CHECK(max_abs(matvec(a, ones)) <= 1e-9);

    const DenseMatrix al = multiply(a, l);
    const DenseMatrix la = multiply(l, a);
    CHECK(max_abs_diff(al, la) <= 1e-9);
    CHECK(max_abs_diff(multiply(al, a), a) <= 1e-9);
    CHECK(max_abs_diff(multiply(la, l), l) <= 1e-9);

    const DenseMatrix x = dense_group_inverse(l);
    CHECK(compare(a, x, 1e-9).passed);
  }
}
