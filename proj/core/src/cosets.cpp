#include "gsp4local/cosets.hpp"

#include "gsp4local/errors.hpp"

namespace gsp4::cosets {

long index_bruteforce(long p, long rho, int m) {
  if (p < 3 || p % 2 == 0) throw Error("index brute force needs an odd prime");
  if (m < 1) throw Error("index brute force needs m >= 1");
  long rho_mod = ((rho % p) + p) % p;
  if (rho_mod == 0) throw Error("rho must be a unit mod p");

  long mod = 1;
  for (int i = 0; i < m; ++i) {
    if (mod > 5000 / p) throw ResourceLimit("p^m too large for enumeration");
    mod *= p;
  }
  long total = 0, axis = 0;
  for (long x = 0; x < mod; ++x) {
    for (long y = 0; y < mod; ++y) {
      long norm = ((x % p) * (x % p) - rho_mod * ((y % p) * (y % p))) % p;
      if (((norm % p) + p) % p == 0) continue;
      ++total;
      if (y == 0) ++axis;
    }
  }
  if (axis == 0 || total % axis != 0) throw Error("index enumeration is not integral");
  return total / axis;
}

long index_formula(long q, int legendre, int m) {
  if (m == 0) return 1;
  long r = q - legendre;
  for (int i = 1; i < m; ++i) r *= q;
  return r;
}

LaurentPoly index_weight(const sugano::PlaceData& p, int m) {
  const LaurentPoly one{Rational(1)};
  if (m == 0) return one;
  return p.qpow(m - 1) * (p.qpow(1) - LaurentPoly(Rational(p.legendre_E)));
}

int delta_P_exponent(int det_power, int lambda_power) {
  return 3 * det_power - 3 * lambda_power;
}

WeightExponents coset_weight(PlaceCase c, int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0) throw Error("coset indices must be nonnegative");
  if (c == PlaceCase::inert && k != 0) throw WrongCase("inert cosets have k = 0");
  // det of the GL2 part is pi^{2n+m+k} times a unit; the similitude is 1.
  int dp = delta_P_exponent(2 * n + m + k, 0);  // delta_P = q^{-dp}
  int e = 2 * n + m + k;
  return WeightExponents{
      .section_s_coeff = -dp / 3,  // delta_P^{(s+1)/3} = q^{-e(s+1)}
      .section_const = -dp / 3,
      .weil_exp = -e,  // chi_T(det) |det| phi(g) with |det| = q^{-e}
      .weil_chi_power = e,
      .volume_exp = dp,  // vol = delta_P^{-1} on the coset
  };
}

}  // namespace gsp4::cosets
