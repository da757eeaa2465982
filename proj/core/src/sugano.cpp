#include "gsp4local/sugano.hpp"

#include "gsp4local/errors.hpp"

namespace gsp4::sugano {

namespace {

LaurentPoly value_or_var(const std::optional<Rational>& v, Var marker, int exponent) {
  if (v.has_value()) return LaurentPoly(*v);
  return LaurentPoly::variable(marker, exponent);
}

LaurentPoly unit_inverse(const LaurentPoly& p) { return p.monomial_inverse(); }

const LaurentPoly kOne{Rational(1)};

}  // namespace

SatakeData SatakeData::exact(Rational c0, Rational c1, Rational c2) {
  if (c0.is_zero() || c1.is_zero() || c2.is_zero())
    throw Error("Satake character values must be nonzero");
  SatakeData s;
  s.chi0 = std::move(c0);
  s.chi1 = std::move(c1);
  s.chi2 = std::move(c2);
  return s;
}

LaurentPoly SatakeData::chi0_val() const { return value_or_var(chi0, Var::C, 1); }
LaurentPoly SatakeData::chi1_val() const { return value_or_var(chi1, Var::A, 2); }
LaurentPoly SatakeData::chi2_val() const { return value_or_var(chi2, Var::B, 2); }

LaurentPoly SatakeData::gamma(int i) const {
  switch (i) {
    case 1: return chi1_val() * chi2_val() * chi0_val();
    case 2: return chi1_val() * chi0_val();
    case 3: return chi0_val();
    case 4: return chi2_val() * chi0_val();
    default: throw Error("gamma index out of range");
  }
}

LaurentPoly SatakeData::omega() const { return gamma(1) * gamma(3); }
LaurentPoly SatakeData::omega_inv() const { return unit_inverse(omega()); }

PlaceData PlaceData::symbolic(PlaceCase c) {
  PlaceData p;
  p.legendre_E = (c == PlaceCase::inert) ? -1 : +1;
  return p;
}

PlaceData PlaceData::exact(const Rational& q, int legendre, std::optional<Rational> nu1) {
  if (legendre != -1 && legendre != 0 && legendre != +1)
    throw Error("Legendre symbol must be -1, 0, or +1");
  if (q.sign() <= 0) throw Error("residue cardinality must be positive");
  // q enters through q^{1/2}; demand an exact rational square root.
  mpz_class rn, rd;
  if (!mpz_perfect_square_p(q.num().get_mpz_t()) || !mpz_perfect_square_p(q.den().get_mpz_t()))
    throw Error("residue cardinality must be a perfect square of a rational (got " +
                q.to_string() + ")");
  mpz_sqrt(rn.get_mpz_t(), q.num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q.den().get_mpz_t());
  PlaceData p;
  p.sqrt_q = Rational(rn, rd);
  p.legendre_E = legendre;
  p.nu1 = std::move(nu1);
  return p;
}

PlaceCase PlaceData::place_case() const {
  if (legendre_E == -1) return PlaceCase::inert;
  if (legendre_E == +1) return PlaceCase::split;
  throw RamifiedPlace("(E/v) = 0: the place ramifies in the discriminant field");
}

LaurentPoly PlaceData::rpow(int k) const {
  if (sqrt_q.has_value()) return LaurentPoly(sqrt_q->pow(k));
  return LaurentPoly::variable(Var::R, k);
}

LaurentPoly PlaceData::nu1_val() const {
  if (nu1.has_value()) {
    if (nu1->is_zero()) throw Error("nu(Pi_1) must be nonzero");
    return LaurentPoly(*nu1);
  }
  return LaurentPoly::variable(Var::U, 1);
}

LaurentPoly PlaceData::nu2_val(const SatakeData& s) const {
  return s.omega() * unit_inverse(nu1_val());
}

LaurentPoly PlaceData::epsilon(const SatakeData& s) const {
  switch (place_case()) {
    case PlaceCase::inert: return LaurentPoly();
    case PlaceCase::split: return nu1_val() + nu2_val(s);
  }
  throw Error("unreachable");
}

SuganoParams build_params(const SatakeData& s, const PlaceData& p) {
  p.place_case();     // rejects (E/v) = 0
  LaurentPoly alpha;  // q^{-3/2} sum gamma_i
  for (int i = 1; i <= 4; ++i) alpha += s.gamma(i);
  alpha = alpha * p.rpow(-3);

  LaurentPoly beta;  // q^{-3} sum_{i<j} gamma_i gamma_j
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) beta += s.gamma(i) * s.gamma(j);
  beta = beta * p.rpow(-6);

  // nu on the scalar uniformizer is the central character value.
  LaurentPoly nu_scalar = s.omega();
  LaurentPoly A1 = p.rpow(-2);
  LaurentPoly A2 = p.rpow(-4) * nu_scalar;
  LaurentPoly A3 = p.rpow(-6) * nu_scalar;
  LaurentPoly A4 = LaurentPoly(Rational(-p.legendre_E)) * p.rpow(-4);
  LaurentPoly A5 = p.rpow(-4) * p.epsilon(s);
  return SuganoParams{RationalFunction(alpha), RationalFunction(beta), RationalFunction(A1),
                      RationalFunction(A2),    RationalFunction(A3),   RationalFunction(A4),
                      RationalFunction(A5)};
}

GeneratingFunction GeneratingFunction::build(const SatakeData& s, const PlaceData& p) {
  p.place_case();  // rejects (E/v) = 0
  const LaurentPoly X = LaurentPoly::variable(Var::X);
  const LaurentPoly Y = LaurentPoly::variable(Var::Y);

  LaurentPoly alpha;
  for (int i = 1; i <= 4; ++i) alpha += s.gamma(i);
  alpha = alpha * p.rpow(-3);
  LaurentPoly beta;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) beta += s.gamma(i) * s.gamma(j);
  beta = beta * p.rpow(-6);

  LaurentPoly nu_scalar = s.omega();
  LaurentPoly A1 = p.rpow(-2);
  LaurentPoly A2 = p.rpow(-4) * nu_scalar;
  LaurentPoly A3 = p.rpow(-6) * nu_scalar;
  LaurentPoly A4 = LaurentPoly(Rational(-p.legendre_E)) * p.rpow(-4);
  LaurentPoly A5 = p.rpow(-4) * p.epsilon(s);
  LaurentPoly A1_inv = unit_inverse(A1);

  // P(x) = prod over pairs (12), (14), (23), (34) of (1 - gamma_i gamma_j q^{-2} x).
  LaurentPoly qm2 = p.rpow(-4);
  LaurentPoly P = kOne;
  const int pairs[4][2] = {{1, 2}, {1, 4}, {2, 3}, {3, 4}};
  for (const auto& ij : pairs)
    P = P * (kOne - s.gamma(ij[0]) * s.gamma(ij[1]) * qm2 * X);

  // Q(y) = prod_i (1 - gamma_i q^{-3/2} y).
  LaurentPoly Q = kOne;
  for (int i = 1; i <= 4; ++i) Q = Q * (kOne - s.gamma(i) * p.rpow(-3) * Y);

  // M1(x) = 1 - A1^{-1}(A1+A4)^{-1}(A1 A5 alpha + A4 beta - A1 A5^2 - 2 A1 A2 A4) x
  //           + A1^{-1} A2^2 A4 x^2.
  // Cleared of (A1+A4)^{-1}: M1 = m1num / D with D = A1 (A1 + A4).
  LaurentPoly D = A1 * (A1 + A4);
  LaurentPoly m1_mid = A1 * A5 * alpha + A4 * beta - A1 * A5 * A5 -
                       (A1 * A2 * A4).scaled(Rational(2));
  LaurentPoly m1num = D - m1_mid * X + (A1 + A4) * A2 * A2 * A4 * X * X;

  // M2(x) = 1 + A1^{-1}(A1 A2 - beta) x + A1^{-1} A2 (A1 A2 - beta) x^2 + A2^3 x^3.
  LaurentPoly m2 = kOne + A1_inv * (A1 * A2 - beta) * X +
                   A1_inv * A2 * (A1 * A2 - beta) * X * X + A2 * A2 * A2 * X * X * X;

  // H(x,y) = (1 + A2 A3 x y^2) { M1(x)(1 + A2 x) + A2 A5 A1^{-1} alpha x^2 }
  //          - A2 x y { alpha M1(x) - A5 M2(x) } - A5 P(x) y - A2 A4 P(x) y^2,
  // multiplied through by D so the result is a Laurent polynomial.
  LaurentPoly brace = m1num * (kOne + A2 * X) + D * A2 * A5 * A1_inv * alpha * X * X;
  LaurentPoly hnum = (kOne + A2 * A3 * X * Y * Y) * brace -
                     A2 * X * Y * (alpha * m1num - A5 * (D * m2)) -
                     (D * A5) * P * Y - (D * A2 * A4) * P * Y * Y;

  GeneratingFunction g;
  g.hnum = std::move(hnum);
  g.hden = std::move(D);
  g.P = std::move(P);
  g.Q = std::move(Q);
  return g;
}

RationalFunction GeneratingFunction::compose() const {
  return RationalFunction(hnum, hden * P * Q);
}

LaurentPoly GeneratingFunction::hnum_at(const LaurentPoly& xv, const LaurentPoly& yv) const {
  Bindings b{{Var::X, RationalFunction(xv)}, {Var::Y, RationalFunction(yv)}};
  return substitute(hnum, b).num();
}

LaurentPoly GeneratingFunction::p_at(const LaurentPoly& xv) const {
  return substitute(P, Bindings{{Var::X, RationalFunction(xv)}}).num();
}

LaurentPoly GeneratingFunction::q_at(const LaurentPoly& yv) const {
  return substitute(Q, Bindings{{Var::Y, RationalFunction(yv)}}).num();
}

namespace {

// Splits p = even(y) + y * odd(y) with both parts even in y.
void split_even_odd(const LaurentPoly& p, LaurentPoly& even, LaurentPoly& odd) {
  for (const auto& [e, c] : p.collect(Var::Y)) {
    LaurentPoly mono = LaurentPoly::variable(Var::Y, e % 2 ? e - 1 : e);
    if (e % 2)
      odd += c * mono;
    else
      even += c * mono;
  }
}

}  // namespace

LaurentPoly GeneratingFunction::even_num_at(const LaurentPoly& xv,
                                            const LaurentPoly& y2v) const {
  // With H = He + y Ho and Q = Qe + y Qo (He, Ho, Qe, Qo even in y), the
  // average of C over +-y has numerator He Qe - y^2 Ho Qo over the common
  // denominator hden P (Qe^2 - y^2 Qo^2); everything is even in y.
  LaurentPoly He, Ho, Qe, Qo;
  split_even_odd(hnum, He, Ho);
  split_even_odd(Q, Qe, Qo);
  LaurentPoly y2 = LaurentPoly::variable(Var::Y, 2);
  LaurentPoly num_even = He * Qe - Ho * Qo * y2;
  Bindings bx{{Var::X, RationalFunction(xv)}};
  return substitute_square(substitute(num_even, bx).num(), Var::Y, y2v);
}

LaurentPoly GeneratingFunction::even_den_at(const LaurentPoly& y2v) const {
  LaurentPoly Qe, Qo;
  split_even_odd(Q, Qe, Qo);
  LaurentPoly y2 = LaurentPoly::variable(Var::Y, 2);
  return substitute_square(Qe * Qe - Qo * Qo * y2, Var::Y, y2v);
}

RationalFunction GeneratingFunction::at(const LaurentPoly& xv, const LaurentPoly& yv) const {
  LaurentPoly d = hden * p_at(xv) * q_at(yv);
  if (d.is_zero()) throw ZeroDenominator("generating function evaluated at a pole");
  return RationalFunction(hnum_at(xv, yv), d);
}

RationalFunction GeneratingFunction::even_y_at(const LaurentPoly& xv,
                                               const LaurentPoly& y2v) const {
  LaurentPoly d = hden * p_at(xv) * even_den_at(y2v);
  if (d.is_zero()) throw ZeroDenominator("generating function evaluated at a pole");
  return RationalFunction(even_num_at(xv, y2v), d);
}

TruncSeries2 GeneratingFunction::coefficient_grid(int order_m, int order_ell) const {
  auto pq = TruncSeries2::from_poly(P * Q, Var::X, Var::Y, order_m, order_ell);
  auto h = TruncSeries2::from_poly(hnum, Var::X, Var::Y, order_m, order_ell);
  return h * pq.reciprocal();
}

RationalFunction sugano_C(const SatakeData& s, const PlaceData& p) {
  return GeneratingFunction::build(s, p).compose();
}

RationalFunction bessel_coeff(const SatakeData& s, const PlaceData& p, const CosetRep& rep) {
  if (rep.ell < 0 || rep.m < 0) throw Error("Bessel support indices must be nonnegative");
  GeneratingFunction g = GeneratingFunction::build(s, p);
  TruncSeries2 grid = g.coefficient_grid(rep.m, rep.ell);
  return RationalFunction(grid.coeff(rep.m, rep.ell), g.hden);
}

}  // namespace gsp4::sugano
