#ifndef NCWHEEL_PIPELINE_HPP
#define NCWHEEL_PIPELINE_HPP

#include <vector>

#include "circulant.hpp"
#include "dense_matrix.hpp"
#include "wheel.hpp"

namespace ncwheel {

// Closed-form construction of the wheel's Green matrix. The chain runs
//   G_R -> G_R^{-1} -> M_R -> F -> H -> K -> M
// over structured (circulant / block Toeplitz) pieces, and the bordered
// (n+1) x (n+1) group inverse is assembled from M at the end. Blocks are
// indexed 1..m, rows-in-block 1..d, columns-in-block by offset h = 0..d-1.

/// Reduced spoke-to-spoke Green circulant: first row 0, -d*j(m-j)/(2cm).
CirculantVec reduced_green(const WheelParams& p);

/// Inverse of reduced_green. For m >= 3 this is the closed circulant pattern
/// (b0, -b1, -1, ..., -1, -b1) scaled by 12c/(n(m^2-1)); the pattern does not
/// specialize to m = 2, where the exact 2x2 inverse circ(0, -4c/d) is used.
/// The product is always verified; residual > 1e-8 raises ErrorKind::Singular.
CirculantVec reduced_green_inverse(const WheelParams& p);

/// M_R = (G_R^{-1} + (a/m)(mI - J))^{-1}, as the explicit Chebyshev circulant
/// m_j = (U_{j-2}(q) + U_{m-j}(q)) d / (2c(T_m(q)-1)) - (12c + ad(m^2-1))/(12acm).
CirculantVec mr_matrix(const WheelParams& p);

/// Spoke-coupling coefficients f_1..f_m; the induced n x n matrix F carries
/// f at spoke-row/spoke-column intersections and is zero elsewhere.
std::vector<double> f_coeffs(const WheelParams& p);

/// The m nonzero first columns (length d) of the blocks of H = G F.
std::vector<std::vector<double>> h_first_columns(const WheelParams& p);

/// Entry (i, h+1) of block K_k of K = G F G.
double k_block_entry(const WheelParams& p, int k, int i, int h);

/// Entry (i, h+1) of block M_k of M = G - G F G (the group inverse of the
/// hub-eliminated Schur complement).
double m_block_entry(const WheelParams& p, int k, int i, int h);

/// Length-d period of G s; the full product is its d-periodic extension,
/// and M s = G s.
std::vector<double> gs_vector(const WheelParams& p);

/// Full (n+1) x (n+1) group inverse of the wheel Laplacian, assembled from M
/// via the bordered-network formula
///   (n^2 / (alpha^2 (1+n)^2)) * [[C M C^T + (alpha/n^2) J, -(alpha/n) j - C M s],
///                                [ sym.,                    alpha + s^T M s ]]
/// with C = (alpha (n+1) I + j s^T)/n. The result is self-checked against the
/// Laplacian; residuals beyond 1e-6 raise ErrorKind::AxiomViolation.
DenseMatrix assemble_group_inverse(const WheelParams& p);

// Dense realizations of the structured pieces (block Toeplitz closure is by
// construction; these are what the product identities are checked against).
DenseMatrix induced_f(const WheelParams& p);
DenseMatrix induced_h(const WheelParams& p);
DenseMatrix induced_k(const WheelParams& p);
DenseMatrix induced_m(const WheelParams& p);

}  // namespace ncwheel

#endif
