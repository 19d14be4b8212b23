#include <doctest.h>

#include <cmath>
#include <random>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "test_support.hpp"
#include "wheel.hpp"

using namespace ncwheel;

TEST_CASE("solve: identity and diagonal systems") {
  const DenseMatrix eye = DenseMatrix::identity(3);
  const std::vector<double> b{3.0, -1.0, 2.5};
  CHECK(solve_dense(eye, b) == b);

  DenseMatrix diag(2, 2);
  diag.at(0, 0) = 2.0;
  diag.at(1, 1) = 4.0;
  const std::vector<double> x = solve_dense(diag, {2.0, 8.0});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("solve: random well-conditioned 50x50 has tiny residual") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int n = 50;
  DenseMatrix a(n, n);
  for (double& v : a.data) v = unit(rng);
  for (int i = 0; i < n; ++i) a.at(i, i) += 60.0;  // diagonally dominant
  std::vector<double> b(n);
  for (double& v : b) v = unit(rng);

  const std::vector<double> x = solve_dense(a, b);
  std::vector<double> r = matvec(a, x);
  for (int i = 0; i < n; ++i) r[i] -= b[i];
  CHECK(max_abs(r) <= 1e-9 * std::max(1.0, max_abs(b)));
}

TEST_CASE("solve: exactly singular matrix raises a singularity error") {
  DenseMatrix a(2, 2, 1.0);
  try {
    (void)solve_dense(a, {1.0, 1.0});
    FAIL("expected singularity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("solve: desk-scale order cap") {
  const DenseMatrix big = DenseMatrix::identity(2001);
  CHECK_THROWS_AS(solve_dense(big, std::vector<double>(2001, 1.0)), Error);
}

TEST_CASE("determinants from the LU pivots") {
  DenseMatrix a(2, 2);
  a.at(0, 0) = 3.0;
  a.at(0, 1) = 1.0;
  a.at(1, 0) = 4.0;
  a.at(1, 1) = 2.0;
  CHECK(lu_determinant(a) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lu_determinant(DenseMatrix(3, 3, 1.0)) == 0.0);
  CHECK(lu_determinant(DenseMatrix::identity(5)) == doctest::Approx(1.0));
}

TEST_CASE("group inverse of the complete graph on 4 vertices") {
  const DenseMatrix g = dense_group_inverse(build_laplacian(WheelParams(3, 1, 1.0, 1.0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(g.at(i, j) == doctest::Approx(i == j ? 3.0 / 16 : -1.0 / 16).epsilon(1e-12));
}

TEST_CASE("group inverse of the 4-cycle matches the closed Green entries") {
  const DenseMatrix g = dense_group_inverse(cycle_laplacian(4, 1.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(std::fabs(g.at(i, j) - cycle_green_entry(4, 1.0, i, j)) <= 1e-12);
}

TEST_CASE("group inverse hub diagonal of the two-spoke wheel") {
  const DenseMatrix g = dense_group_inverse(build_laplacian(WheelParams(2, 2, 1.0, 1.0)));
  CHECK(g.at(4, 4) == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("group inverse axioms across the sweep") {
  for (const WheelParams& p : testsupport::small_sweep()) {
    const DenseMatrix l = build_laplacian(p);
    const DenseMatrix x = dense_group_inverse(l);
    CHECK(symmetry_defect(x) <= 1e-10);
    CHECK(max_abs_diff(multiply(multiply(x, l), x), x) <= 1e-9);
    CHECK(max_abs_diff(multiply(multiply(l, x), l), l) <= 1e-9);
    CHECK(max_abs_diff(multiply(x, l), multiply(l, x)) <= 1e-9);
    std::vector<double> ones(static_cast<size_t>(l.rows), 1.0);
    CHECK(max_abs(matvec(x, ones)) <= 1e-9);
  }
}

TEST_CASE("group inverse preconditions") {
  DenseMatrix asym(2, 2);
  asym.at(0, 1) = 1.0;
  CHECK_THROWS_AS(dense_group_inverse(asym), Error);

  CHECK_THROWS_AS(dense_group_inverse(DenseMatrix::identity(3)), Error);  // row sums

  // two disjoint edges: symmetric, zero row sums, but disconnected
  DenseMatrix split(4, 4);
  split.at(0, 0) = split.at(1, 1) = split.at(2, 2) = split.at(3, 3) = 1.0;
  split.at(0, 1) = split.at(1, 0) = -1.0;
  split.at(2, 3) = split.at(3, 2) = -1.0;
  try {
    (void)dense_group_inverse(split);
    FAIL("expected precondition failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
  }
}

TEST_CASE("comparison reports") {
  const DenseMatrix a = cycle_green_matrix(5, 1.0);
  const ComparisonReport same = compare(a, a, 1e-9);
  CHECK(same.passed);
  CHECK(same.max_abs_diff == 0.0);

  DenseMatrix b = a;
  b.at(1, 2) += 1e-3;
  const ComparisonReport diff = compare(b, a, 1e-6);
  CHECK_FALSE(diff.passed);
  CHECK(diff.argmax_row == 1);
  CHECK(diff.argmax_col == 2);
  CHECK(diff.max_abs_diff == doctest::Approx(1e-3).epsilon(1e-9));

  CHECK_THROWS_AS(compare(a, DenseMatrix::identity(4), 1e-9), Error);
}
