#pragma once

#include "gsp4local/rational.hpp"

namespace gsp4::hilbert {

/// A place of the rationals: a finite prime or the real place.
struct LocalPlace {
  enum class Kind { finite, real };
  Kind kind = Kind::finite;
  mpz_class p;  // the prime, when finite

  static LocalPlace prime(const mpz_class& p);
  static LocalPlace real() { return LocalPlace{Kind::real, 0}; }
};

/// The quadratic space data of T = diag(1, -rho): -det(T) = rho.
struct QuadSpaceData {
  Rational rho;
  const Rational& minus_detT() const { return rho; }
};

/// Legendre symbol (a/p) for odd prime p, by Euler's criterion.
int legendre(const mpz_class& a, const mpz_class& p);

/// Legendre symbol of a rational p-adic unit (numerator and denominator
/// prime to p).
int legendre(const Rational& a, const mpz_class& p);

/// p-adic valuation of a nonzero rational.
long val_p(const Rational& a, const mpz_class& p);

/// Local Hilbert symbol (a, b)_v in {-1, +1}. Throws ZeroArgument when
/// either argument is zero.
int hilbert_symbol(const Rational& a, const Rational& b, const LocalPlace& v);

/// Independent ground truth for the finite-place symbol: decides whether
/// z^2 = a x^2 + b y^2 has a nontrivial solution over the p-adics by
/// exhaustive search for primitive solutions modulo p^k, with k large
/// enough that a hit certifies a Hensel lift and a miss certifies
/// insolubility. precision = 0 picks k = val_p(4ab) + 3 after square
/// reduction of the coefficients.
bool solvable_oracle(const Rational& a, const Rational& b, const mpz_class& p,
                     int precision = 0);

/// Classification of the discriminant field E = Q(sqrt(rho)) at p:
/// -1 inert, 0 ramified, +1 split.
int classify_place(const QuadSpaceData& rho, const mpz_class& p);

/// chi_T(a) = (a, -det T)_v = (a, rho)_v.
int chi_T(const Rational& a, const QuadSpaceData& rho, const LocalPlace& v);

}  // namespace gsp4::hilbert
