#pragma once

#include <map>
#include <string>

#include "gsp4local/laurent.hpp"

namespace gsp4 {

/// Quotient of Laurent polynomials. No multivariate gcd is attempted:
/// canonical form only strips the denominator's monomial content and scales
/// it monic under graded-lex, so distinct representatives of the same
/// function are recognized by cross-multiplication (rf_equal), not by
/// normal form.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}     // NOLINT
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}      // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_, den_;
};

/// Exact equality of rational functions by cross-multiplication:
/// f.num * g.den == g.num * f.den as polynomials.
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

using Bindings = std::map<Var, RationalFunction>;

/// Substitutes bindings into a Laurent polynomial. Unbound variables pass
/// through unchanged. Binding zero (or a rational function with zero value
/// at every appearance) to a variable occurring with a negative exponent
/// throws ZeroSubstitutionIntoNegativePower.
RationalFunction substitute(const LaurentPoly& p, const Bindings& bindings);

/// Substitutes into num and den; throws ZeroDenominator if the denominator
/// collapses to zero.
RationalFunction substitute(const RationalFunction& f, const Bindings& bindings);

/// Replaces v^(2k) by value_of_square^k. The polynomial must be even in v;
/// an odd exponent throws. This is how expressions in omega^{1/2} are
/// specialized when only omega itself has a value.
LaurentPoly substitute_square(const LaurentPoly& p, Var v, const LaurentPoly& value_of_square);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace gsp4
