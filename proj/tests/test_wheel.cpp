#include <doctest.h>

#include <cmath>

#include "dense_matrix.hpp"
#include "error.hpp"
#include "test_support.hpp"
#include "wheel.hpp"

using namespace ncwheel;
using testsupport::small_sweep;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(WheelParams(1, 4, 1.0, 1.0), Error);
  CHECK_THROWS_AS(WheelParams(3, 0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(WheelParams(3, 1, 0.0, 1.0), Error);
  CHECK_THROWS_AS(WheelParams(3, 1, 1.0, -2.0), Error);
  const WheelParams p(4, 3, 2.0, 0.5);
  CHECK(p.n() == 12);
  CHECK(p.alpha() == doctest::Approx(8.0));
  CHECK(p.q() == doctest::Approx(7.0));
}

TEST_CASE("complete wheel on 3+1 vertices is the complete-graph Laplacian") {
  const DenseMatrix l = build_laplacian(WheelParams(3, 1, 1.0, 1.0));
  REQUIRE(l.rows == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(l.at(i, j) == (i == j ? 3.0 : -1.0));
}

TEST_CASE("two-spoke wheel with spacing 2") {
  const DenseMatrix l = build_laplacian(WheelParams(2, 2, 1.0, 1.0));
  REQUIRE(l.rows == 5);
  const double expected[5][5] = {{3, -1, 0, -1, -1},
                                 {-1, 2, -1, 0, 0},
                                 {0, -1, 3, -1, -1},
                                 {-1, 0, -1, 2, 0},
                                 {-1, 0, -1, 0, 2}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(l.at(i, j) == expected[i][j]);
}

TEST_CASE("laplacian invariants across the sweep") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix l = build_laplacian(p);
    CHECK(symmetry_defect(l) == 0.0);
    CHECK(max_abs_row_sum(l) <= 1e-12);
    // Gershgorin certificate of positive semi-definiteness: each diagonal
    // entry dominates the absolute off-diagonal row sum.
    for (int i = 0; i < l.rows; ++i) {
      double off = 0.0;
      for (int j = 0; j < l.cols; ++j)
        if (j != i) off += std::fabs(l.at(i, j));
      CHECK(l.at(i, i) >= off - 1e-12);
    }
  }
}

TEST_CASE("cycle Green entries for the 4-cycle") {
  CHECK(cycle_green_entry(4, 1.0, 0, 0) == doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(cycle_green_entry(4, 1.0, 0, 1) == doctest::Approx(-0.0625).epsilon(1e-15));
  CHECK(cycle_green_entry(4, 1.0, 0, 2) == doctest::Approx(-0.1875).epsilon(1e-15));
  CHECK(0.3125 - 2 * 0.0625 - 0.1875 == 0.0);
  const DenseMatrix g = cycle_green_matrix(4, 1.0);
  CHECK(max_abs_row_sum(g) <= 1e-14);
}

TEST_CASE("cycle Green matrix satisfies the group-inverse axioms") {
  for (int n = 3; n <= 24; ++n) {
    for (double c : {1.0, 0.5, 1.7}) {
      const DenseMatrix g = cycle_green_matrix(n, c);
      const DenseMatrix l = cycle_laplacian(n, c);
      CHECK(max_abs_diff(multiply(multiply(g, l), g), g) <= 1e-10);
      CHECK(max_abs_diff(multiply(multiply(l, g), l), l) <= 1e-10);
      CHECK(max_abs_diff(multiply(g, l), multiply(l, g)) <= 1e-10);
    }
  }
}

TEST_CASE("spoke vertex lists") {
  CHECK(spoke_vertices(WheelParams(2, 2, 1, 1)) == std::vector<int>{0, 2});
  CHECK(spoke_vertices(WheelParams(3, 1, 1, 1)) == std::vector<int>{0, 1, 2});
  CHECK(spoke_vertices(WheelParams(4, 3, 1, 1)) == std::vector<int>{0, 3, 6, 9});
}

TEST_CASE("border column carries -a exactly at the spokes") {
  const WheelParams p(3, 2, 0.7, 1.0);
  const std::vector<double> s = hub_border_column(p);
  REQUIRE(s.size() == 6);
  for (int v = 0; v < 6; ++v) CHECK(s[v] == (v % 2 == 0 ? -0.7 : 0.0));
}

TEST_CASE("index errors") {
  CHECK_THROWS_AS(cycle_green_entry(4, 1.0, -1, 0), Error);
  CHECK_THROWS_AS(cycle_green_entry(4, 1.0, 0, 4), Error);
}
