#ifndef NCWHEEL_CLOSED_FORM_HPP
#define NCWHEEL_CLOSED_FORM_HPP

#include "dense_matrix.hpp"
#include "wheel.hpp"

namespace ncwheel {

// Direct evaluators for the printed entry formulas of the bordered group
// inverse (top-left blocks N_k, hub border column, hub corner scalar). The
// printed source fused several binary operators and one block offset; the
// choice struct makes each garbled site explicit so the reconciliation sweep
// can test every reading against the pipeline. Defaults are the accepted
// reconstruction.

struct TheoremChoices {
  // Sign joining the (an/c)(i-1)(h-d) - nd product of second-kind terms to
  // the bracket (printed: fused).
  int u_product_sign = -1;
  // Sign joining (2kd - 3d + 2h - n)(i-1) to the polynomial tail (printed: fused).
  int linear_term_sign = +1;
  // Sign joining the trailing (a(d^2-1) + 12cd)/(6a(n+1)^2) factor (printed: fused).
  int border_term_sign = +1;
  // Printed block offset reads k(d-1); the accepted reading is (k-1)d.
  bool printed_block_offset = false;
};

/// Hub diagonal entry (12cdn + an(d^2-1)) / (12ac(n+1)^2); matches the
/// pipeline as printed.
double theorem_corner(const WheelParams& p);

/// Hub border entry for block row position i in 1..d. The printed form is a
/// single scalar times the gs period vector; the accepted reconstruction
/// splits it into an affine form
///   -(d/(a(n+1)^2)) * [ (a(d^2-1)/(12cd) + 1) + (n+1) * nu_i ].
double theorem_border_entry(const WheelParams& p, int i);

/// The printed single-scalar reading, kept for reconciliation.
double theorem_border_entry_printed(const WheelParams& p, int i);

double theorem_block_entry(const WheelParams& p, int k, int i, int h);
double theorem_block_entry(const WheelParams& p, int k, int i, int h,
                           const TheoremChoices& choices);

/// Full (n+1) x (n+1) matrix assembled purely from the theorem entry
/// formulas under the accepted reconstruction.
DenseMatrix theorem_matrix(const WheelParams& p);

}  // namespace ncwheel

#endif
