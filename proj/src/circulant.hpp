#ifndef NCWHEEL_CIRCULANT_HPP
#define NCWHEEL_CIRCULANT_HPP

#include <vector>

#include "dense_matrix.hpp"

namespace ncwheel {

/// First row of an order-m circulant; full entry (i, j) = row[(j - i) mod m].
struct CirculantVec {
  int order = 0;
  std::vector<double> row;
};

DenseMatrix to_dense(const CirculantVec& c);

/// Product of two circulants of equal order (cyclic convolution of rows).
CirculantVec circ_multiply(const CirculantVec& a, const CirculantVec& b);

/// max-abs distance of a*b from the identity.
double circ_identity_defect(const CirculantVec& a, const CirculantVec& b);

}  // namespace ncwheel

#endif
