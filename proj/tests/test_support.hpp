#ifndef NCWHEEL_TEST_SUPPORT_HPP
#define NCWHEEL_TEST_SUPPORT_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "errata.hpp"
#include "wheel.hpp"

namespace testsupport {

inline const std::vector<std::pair<double, double>>& conductance_pairs() {
  static const std::vector<std::pair<double, double>> pairs{{1.0, 1.0}, {2.0, 0.5}, {0.3, 1.7}};
  return pairs;
}

/// Reduced grid for unit tests; the acceptance suite runs the full one.
inline std::vector<ncwheel::WheelParams> small_sweep() {
  std::vector<ncwheel::WheelParams> out;
  for (int m : {2, 3, 4, 5})
    for (int d : {1, 2, 3})
      for (const auto& [a, c] : conductance_pairs()) out.emplace_back(m, d, a, c);
  return out;
}

inline ncwheel::SweepSpec full_sweep() { return ncwheel::SweepSpec{}; }

inline bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace testsupport

#endif
