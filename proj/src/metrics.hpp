#ifndef NCWHEEL_METRICS_HPP
#define NCWHEEL_METRICS_HPP

#include "dense_matrix.hpp"
#include "wheel.hpp"

namespace ncwheel {

// Effective resistances and Kirchhoff indices. The Green-matrix route is the
// trusted path; the direct closed forms mirror the printed statements with
// their reconstruction sites exposed, exactly as in closed_form.

/// R(i, j) = G_ii + G_jj - 2 G_ij from any valid group inverse; vertex ids
/// are 0-based with the hub at index n.
double effective_resistance(const DenseMatrix& ginv, int i, int j);

/// (number of vertices) * trace, which equals half the pairwise sum.
double kirchhoff_green(const DenseMatrix& ginv);

/// Full symmetric pairwise resistance table with zero diagonal.
DenseMatrix resistance_table(const DenseMatrix& ginv);

struct CycleResistanceChoices {
  // Sign joining the second-kind product to the bracket (printed: fused).
  int u_product_sign = -1;
  // Printed block offset reads k'(d-1); accepted reading is (k'-1)d.
  bool printed_block_offset = false;
  // Printed linear coefficient reads (3 h1 - 2 h2) d; accepted is 2(h1 - h2) d.
  bool printed_linear_coeff = false;
  // The trailing -(n-1)^2 (d^2-1)/(6c(n+1)^2) term is spurious; accepted drops it.
  bool keep_printed_tail = false;
};

struct HubResistanceChoices {
  // Sign joining the U_{m-1} product to the bracket (printed: fused).
  int u_product_sign = +1;
  // The printed non-Chebyshev tail is garbled; the accepted reconstruction
  // replaces it with d/(an). printed_tail_sign picks the reading of the
  // second fused boundary when the printed tail is kept.
  bool keep_printed_tail = false;
  int printed_tail_sign = -1;
};

struct KirchhoffChoices {
  // Final term: printed -(d-1)^2 n/(12c); accepted -n(d^2-1)/(12c).
  bool printed_last_term = false;
};

struct WheelKirchhoffChoices {
  // Sign joining the 1/a term after the bracket (printed: fused).
  int inverse_conductance_sign = +1;
};

/// Closed-form resistance under the accepted reconstruction. i, j are
/// 0-based with hub = n; i == j yields 0.
double resistance_closed(const WheelParams& p, int i, int j);
double resistance_closed(const WheelParams& p, int i, int j,
                         const CycleResistanceChoices& cycle_choices,
                         const HubResistanceChoices& hub_choices);

/// Closed-form Kirchhoff index of the wheel.
double kirchhoff_closed(const WheelParams& p);
double kirchhoff_closed(const WheelParams& p, const KirchhoffChoices& choices);

/// Complete-wheel (d = 1) corollary form; requires d == 1.
double kirchhoff_wheel(const WheelParams& p);
double kirchhoff_wheel(const WheelParams& p, const WheelKirchhoffChoices& choices);

}  // namespace ncwheel

#endif
