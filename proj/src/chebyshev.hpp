#ifndef NCWHEEL_CHEBYSHEV_HPP
#define NCWHEEL_CHEBYSHEV_HPP

namespace ncwheel {

/// Dimensionless recurrence argument q = a*d/(2c) + 1. Always > 1 for valid
/// wheel conductances, which keeps every T_m(q) - 1 denominator positive.
struct ChebArg {
  double q;
};

/// Magnitude guard for the three-term recurrences. Values past this point
/// signal a parameter regime outside double precision and raise
/// ErrorKind::Overflow instead of propagating infinities.
inline constexpr double kChebOverflowGuard = 1e300;

/// First kind: T_0 = 1, T_1 = x, T_k = 2x T_{k-1} - T_{k-2}.
double cheb_t(int k, double x);

/// Second kind, with the k = -1 convention U_{-1} = 0 used by the block
/// formulas: U_0 = 1, U_1 = 2x.
double cheb_u(int k, double x);

/// Third kind, V_k = U_k - U_{k-1}.
double cheb_v(int k, double x);

ChebArg cheb_argument(double a, double c, int d);

}  // namespace ncwheel

#endif
