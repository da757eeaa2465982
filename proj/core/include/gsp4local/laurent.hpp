#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gsp4local/rational.hpp"
#include "gsp4local/varid.hpp"

namespace gsp4 {

/// One signed exponent per variable of the fixed set.
using ExpVec = std::array<std::int32_t, kVarCount>;

inline constexpr ExpVec kZeroExp{};

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_neg(const ExpVec& a);

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// componentwise in the fixed variable enumeration. Deterministic canonical
/// forms and printed output both rest on this order.
bool grlex_less(const ExpVec& a, const ExpVec& b);

/// Term-count ceiling for polynomial operations. Operations whose working
/// set would exceed the ceiling throw ResourceLimit instead of grinding on.
std::size_t term_limit();
void set_term_limit(std::size_t limit);  // 0 restores the default (2e6)

/// Sparse multivariate Laurent polynomial over Rational in the fixed
/// variable set. Terms are kept sorted in descending graded-lex order with
/// no zero coefficients, so equal polynomials compare equal termwise.
class LaurentPoly {
 public:
  struct Term {
    ExpVec exp;
    Rational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly variable(Var v, int exponent = 1);
  static LaurentPoly monomial(const Rational& coeff, const ExpVec& exp);

  /// Builds from arbitrary (exp, coeff) pairs; combines and canonicalizes.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Leading term under graded-lex (throws on zero).
  const Term& leading() const;

  /// Constant-term coefficient (zero if absent).
  Rational constant_coeff() const;

  /// Exponent range of one variable over all terms; (0, 0) for zero poly.
  int min_exponent(Var v) const;
  int max_exponent(Var v) const;
  bool involves(Var v) const { return min_exponent(v) != 0 || max_exponent(v) != 0; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Rational& c) const;

  /// Nonnegative power by repeated squaring.
  LaurentPoly pow(int e) const;

  /// Exact inverse; defined only for single-term polynomials.
  LaurentPoly monomial_inverse() const;

  /// Multiplies by a single monomial (cheap exponent shift).
  LaurentPoly shifted(const Rational& coeff, const ExpVec& exp) const;

  /// Collects coefficients of powers of `v`; keys are the `v`-exponents and
  /// values are free of `v`.
  std::map<int, LaurentPoly> collect(Var v) const;

  /// Full rational-point evaluation. Every variable must be bound; a zero
  /// value meeting a negative exponent throws.
  Rational evaluate(const std::array<Rational, kVarCount>& values) const;

  /// Plain-text form: descending-order sum of coeff*var^exp terms, e.g.
  /// "x^2 - 3/2*a^2*t + 1". Zero prints as "0".
  std::string to_string() const;

 private:
  void canonicalize();  // sort + combine + drop zeros

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace gsp4
