#pragma once

#include <optional>

#include "gsp4local/series.hpp"

namespace gsp4 {

/// Reduction behavior of the discriminant field at the place.
enum class PlaceCase { inert, split };

namespace sugano {

/// Satake data of an unramified principal series: the three character
/// values (chi_0, chi_1, chi_2) at a uniformizer. Each value is either an
/// exact nonzero rational or symbolic, in which case it is realized as the
/// variable c, a^2, or b^2 respectively.
struct SatakeData {
  std::optional<Rational> chi0, chi1, chi2;

  static SatakeData symbolic() { return {}; }
  static SatakeData exact(Rational c0, Rational c1, Rational c2);

  bool is_symbolic() const { return !chi0 && !chi1 && !chi2; }

  LaurentPoly chi0_val() const;
  LaurentPoly chi1_val() const;
  LaurentPoly chi2_val() const;

  /// gamma_1 = chi_1 chi_2 chi_0, gamma_2 = chi_1 chi_0, gamma_3 = chi_0,
  /// gamma_4 = chi_2 chi_0; gamma_1 gamma_3 = gamma_2 gamma_4 holds by
  /// construction.
  LaurentPoly gamma(int i) const;

  /// Central character value omega_pi(pi) = gamma_1 gamma_3.
  LaurentPoly omega() const;
  LaurentPoly omega_inv() const;
};

/// Local arithmetic context: residue cardinality q (always handled through
/// its square root so that q^{1/2}-powers stay in the Laurent ring), the
/// Legendre symbol (E/v), and the split-case value nu(Pi_1). nu(Pi_2) is
/// never stored; it is omega / nu(Pi_1) by definition.
struct PlaceData {
  std::optional<Rational> sqrt_q;  // nullopt: symbolic, q = r^2
  int legendre_E = -1;             // -1 inert, 0 ramified, +1 split
  std::optional<Rational> nu1;     // nullopt: symbolic u (split case only)

  static PlaceData symbolic(PlaceCase c);
  /// q must be the square of a rational (e.g. 4, 9, 25, 49).
  static PlaceData exact(const Rational& q, int legendre,
                         std::optional<Rational> nu1 = std::nullopt);

  PlaceCase place_case() const;

  /// r^k, i.e. q^{k/2}.
  LaurentPoly rpow(int k) const;
  /// q^k.
  LaurentPoly qpow(int k) const { return rpow(2 * k); }

  LaurentPoly nu1_val() const;
  LaurentPoly nu2_val(const SatakeData& s) const;

  /// epsilon_v: 0 when inert, nu(Pi_1) + nu(Pi_2) when split.
  LaurentPoly epsilon(const SatakeData& s) const;
};

/// The seven constants of the generating-function formula.
struct SuganoParams {
  RationalFunction alpha, beta, A1, A2, A3, A4, A5;
};

/// Support index of the spherical Bessel function: h(ell, m) =
/// diag(pi^{2m+ell}, pi^{m+ell}, 1, pi^m) with ell, m >= 0.
struct CosetRep {
  int ell = 0;
  int m = 0;
};

/// Assembles alpha, beta, A1..A5 from the Satake and place data. Throws
/// RamifiedPlace when (E/v) = 0.
SuganoParams build_params(const SatakeData& s, const PlaceData& p);

/// The generating function C(x, y) = H(x, y) / (P(x) Q(y)) in structured
/// form: hnum / (hden P Q) where hden is free of x and y (it carries the
/// (A1 + A4)^{-1} denominator of H's middle coefficient). P has degree 4
/// in x, Q degree 4 in y, H degree <= 2 in y.
struct GeneratingFunction {
  LaurentPoly hnum, hden, P, Q;

  static GeneratingFunction build(const SatakeData& s, const PlaceData& p);

  /// Full composed rational function in x and y.
  RationalFunction compose() const;

  /// C(xv, yv) for polynomial values of both arguments.
  RationalFunction at(const LaurentPoly& xv, const LaurentPoly& yv) const;

  /// (C(xv, y) + C(xv, -y)) / 2 with y^2 replaced by y2v. This is the form
  /// needed when only omega = (omega^{1/2})^2 has a value.
  RationalFunction even_y_at(const LaurentPoly& xv, const LaurentPoly& y2v) const;

  /// Substituted building blocks, for callers that assemble several
  /// specializations of C over one common denominator. C(xv, yv) =
  /// hnum_at(xv, yv) / (hden * p_at(xv) * q_at(yv)), and the (+-y)-average
  /// is even_num_at / (hden * p_at * even_den_at).
  LaurentPoly hnum_at(const LaurentPoly& xv, const LaurentPoly& yv) const;
  LaurentPoly p_at(const LaurentPoly& xv) const;
  LaurentPoly q_at(const LaurentPoly& yv) const;
  LaurentPoly even_num_at(const LaurentPoly& xv, const LaurentPoly& y2v) const;
  LaurentPoly even_den_at(const LaurentPoly& y2v) const;

  /// Bessel values phi(h(ell, m)) for all ell <= order_ell, m <= order_m,
  /// as the coefficient grid of the x^m y^ell expansion; entry (m, ell)
  /// still needs division by hden (bessel_coeff does this).
  TruncSeries2 coefficient_grid(int order_m, int order_ell) const;
};

/// C(x, y) as one rational function.
RationalFunction sugano_C(const SatakeData& s, const PlaceData& p);

/// Coefficient of x^m y^ell in C(x, y): the spherical Bessel value at
/// h(rep.ell, rep.m), extracted by bivariate truncated expansion.
RationalFunction bessel_coeff(const SatakeData& s, const PlaceData& p, const CosetRep& rep);

}  // namespace sugano
}  // namespace gsp4
