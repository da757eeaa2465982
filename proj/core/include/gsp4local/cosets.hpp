#pragma once

#include "gsp4local/sugano.hpp"

namespace gsp4::cosets {

/// Index [H(O) : H^m(O)] by brute force in the finite quotient: counts
/// pairs (x, y) mod p^m with x^2 - rho y^2 a unit mod p and divides by the
/// count of such pairs with y = 0. Reduction mod p^m is faithful for this
/// index because the reduction kernel lies inside H^m(O). Requires odd p,
/// rho a unit mod p, m >= 1.
long index_bruteforce(long p, long rho, int m);

/// The closed form q^{m-1}(q - (E/v)) for m >= 1, and 1 for m = 0.
long index_formula(long q, int legendre, int m);

/// Same index as an element of the coefficient ring (symbolic q = r^2 or
/// the exact value), for use inside the series assembly.
LaurentPoly index_weight(const sugano::PlaceData& p, int m);

/// Exponent of |pi| = q^{-1} in delta_P(m n) = |det(g)^3 lambda^{-3}|
/// when det g = pi^{det_power} (times a unit) and lambda = pi^{lambda_power}.
int delta_P_exponent(int det_power, int lambda_power);

/// The q-power bookkeeping of one coset term: the section value
/// delta_P^{(s+1)/3} contributes q^{section_s_coeff * s + section_const},
/// the Weil-representation weight contributes chi_T(pi)^{weil_chi_power}
/// q^{weil_exp}, and the coset volume contributes q^{volume_exp}.
struct WeightExponents {
  int section_s_coeff;
  int section_const;
  int weil_exp;
  int weil_chi_power;
  int volume_exp;
};

/// Weights of the coset indexed by (n, m, k); k must be 0 in the inert
/// case. Combined: q^{(2n+m+k) - (2n+m+k)s} chi_T(pi)^{2n+m+k}.
WeightExponents coset_weight(PlaceCase c, int n, int m, int k);

}  // namespace gsp4::cosets
