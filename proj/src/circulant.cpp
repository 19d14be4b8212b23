#include "circulant.hpp"

#include <cmath>

#include "error.hpp"

namespace ncwheel {

DenseMatrix to_dense(const CirculantVec& c) {
  if (c.order <= 0 || static_cast<size_t>(c.order) != c.row.size())
    fail(ErrorKind::Dimension, "circulant order/row mismatch");
  DenseMatrix out(c.order, c.order);
  for (int i = 0; i < c.order; ++i)
    for (int j = 0; j < c.order; ++j)
      out.at(i, j) = c.row[((j - i) % c.order + c.order) % c.order];
  return out;
}

CirculantVec circ_multiply(const CirculantVec& a, const CirculantVec& b) {
  if (a.order != b.order) fail(ErrorKind::Dimension, "circulant order mismatch");
  const int m = a.order;
  CirculantVec out{m, std::vector<double>(m, 0.0)};
  for (int j = 0; j < m; ++j) {
    double acc = 0.0;
    for (int k = 0; k < m; ++k) acc += a.row[k] * b.row[((j - k) % m + m) % m];
    out.row[j] = acc;
  }
  return out;
}

double circ_identity_defect(const CirculantVec& a, const CirculantVec& b) {
  const CirculantVec prod = circ_multiply(a, b);
  double worst = std::fabs(prod.row[0] - 1.0);
  for (int j = 1; j < prod.order; ++j) worst = std::max(worst, std::fabs(prod.row[j]));
  return worst;
}

}  // namespace ncwheel
