#include "gsp4local/lfactor.hpp"

#include "gsp4local/errors.hpp"

namespace gsp4::lfactor {

EigenvalueSet eigenvalues(const sugano::SatakeData& s) {
  LaurentPoly c1 = s.chi1_val();
  LaurentPoly c2 = s.chi2_val();
  return EigenvalueSet{{LaurentPoly(Rational(1)), c1, c1.monomial_inverse(), c2,
                        c2.monomial_inverse()}};
}

RationalFunction local_lfactor(const sugano::SatakeData& s, int twist) {
  if (twist != 1 && twist != -1) throw Error("twist must be +1 or -1");
  const LaurentPoly one{Rational(1)};
  const LaurentPoly t = LaurentPoly::variable(Var::T);
  LaurentPoly den = one;
  for (const auto& lambda : eigenvalues(s).values)
    den = den * (one - lambda.scaled(Rational(twist)) * t);
  return RationalFunction(one, den);
}

RationalFunction zeta_normalizer(const sugano::PlaceData& p) {
  const LaurentPoly one{Rational(1)};
  const LaurentPoly t = LaurentPoly::variable(Var::T);
  LaurentPoly den = (one - p.rpow(-2) * t) * (one - t * t);
  return RationalFunction(one, den);
}

}  // namespace gsp4::lfactor
