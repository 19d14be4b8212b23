#include <doctest.h>

#include <cmath>

#include "closed_form.hpp"
#include "dense_matrix.hpp"
#include "error.hpp"
#include "pipeline.hpp"
#include "test_support.hpp"
#include "wheel.hpp"

using namespace ncwheel;
using testsupport::small_sweep;

TEST_CASE("corner entry: frozen values, verified as printed across the sweep") {
  CHECK(theorem_corner(WheelParams(3, 1, 1.0, 1.0)) ==
        doctest::Approx(3.0 / 16).epsilon(1e-15));
  CHECK(theorem_corner(WheelParams(2, 2, 1.0, 1.0)) == doctest::Approx(0.36).epsilon(1e-15));

  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix a = assemble_group_inverse(p);
    CHECK(std::fabs(theorem_corner(p) - a.at(p.n(), p.n())) <= 1e-12);
  }
}

TEST_CASE("border entries: frozen values and zero hub column sum") {
  CHECK(theorem_border_entry(WheelParams(3, 1, 1.0, 1.0), 1) ==
        doctest::Approx(-1.0 / 16).epsilon(1e-13));

  const WheelParams p22(2, 2, 1.0, 1.0);
  CHECK(theorem_border_entry(p22, 1) == doctest::Approx(-0.04).epsilon(1e-13));
  CHECK(theorem_border_entry(p22, 2) == doctest::Approx(-0.14).epsilon(1e-13));

  for (const WheelParams& p : small_sweep()) {
    double column_sum = 0.0;
    for (int u = 0; u < p.n(); ++u) column_sum += theorem_border_entry(p, u % p.d() + 1);
    CHECK(std::fabs(column_sum + theorem_corner(p)) <= 1e-10);
  }
}

TEST_CASE("border entries match the pipeline hub column; the printed scalar form does not") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix a = assemble_group_inverse(p);
    for (int u = 0; u < p.n(); ++u)
      CHECK(std::fabs(theorem_border_entry(p, u % p.d() + 1) - a.at(u, p.n())) <= 1e-10);
  }
  // the printed single-scalar reading collapses to 0 on the complete wheel
  CHECK(theorem_border_entry_printed(WheelParams(3, 1, 1.0, 1.0), 1) == 0.0);
  const WheelParams p22(2, 2, 1.0, 1.0);
  CHECK(std::fabs(theorem_border_entry_printed(p22, 1) - (-0.04)) > 1e-2);
}

TEST_CASE("block entries: complete-wheel frozen values") {
  const WheelParams k4(3, 1, 1.0, 1.0);
  CHECK(theorem_block_entry(k4, 1, 1, 0) == doctest::Approx(3.0 / 16).epsilon(1e-13));
  CHECK(theorem_block_entry(k4, 2, 1, 0) == doctest::Approx(-1.0 / 16).epsilon(1e-13));
  CHECK(theorem_block_entry(k4, 3, 1, 0) == doctest::Approx(-1.0 / 16).epsilon(1e-13));
}

TEST_CASE("block entries match the pipeline blocks over the sweep") {
  for (const WheelParams& p : small_sweep()) {
    const int m = p.m(), d = p.d();
    const DenseMatrix a = assemble_group_inverse(p);
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        const int k = ((s - r) % m + m) % m + 1;
        for (int i = 1; i <= d; ++i)
          for (int h = 0; h < d; ++h)
            CHECK(std::fabs(theorem_block_entry(p, k, i, h) -
                            a.at(r * d + i - 1, s * d + h)) <= 1e-9);
      }
  }
}

TEST_CASE("the printed block offset reading k(d-1) fails on the complete wheel") {
  const WheelParams k4(3, 1, 1.0, 1.0);
  TheoremChoices printed_offset;
  printed_offset.printed_block_offset = true;
  CHECK(std::fabs(theorem_block_entry(k4, 2, 1, 0, printed_offset) - (-1.0 / 16)) > 1e-3);
}

TEST_CASE("full theorem matrix equals the pipeline assembly") {
  for (const WheelParams& p : small_sweep()) {
    const DenseMatrix t = theorem_matrix(p);
    CHECK(max_abs_diff(t, assemble_group_inverse(p)) <= 1e-9);
    CHECK(symmetry_defect(t) <= 1e-9);
  }
}

TEST_CASE("index validation") {
  const WheelParams p(3, 2, 1.0, 1.0);
  CHECK_THROWS_AS(theorem_border_entry(p, 0), Error);
  CHECK_THROWS_AS(theorem_border_entry(p, 3), Error);
  CHECK_THROWS_AS(theorem_block_entry(p, 0, 1, 0), Error);
  CHECK_THROWS_AS(theorem_block_entry(p, 1, 1, 2), Error);
}
