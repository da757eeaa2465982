#pragma once

#include <vector>

#include "gsp4local/rational_function.hpp"

namespace gsp4 {

/// Truncated power series in one distinguished variable with LaurentPoly
/// coefficients free of that variable. Coefficient k of any product depends
/// only on coefficients <= k of the factors.
class TruncSeries {
 public:
  TruncSeries(Var v, int order);

  Var var() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const LaurentPoly& coeff(int k) const;
  void set_coeff(int k, LaurentPoly c);
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  std::string to_string() const;

 private:
  Var var_;
  std::vector<LaurentPoly> coeffs_;  // index k holds the coefficient of var^k
};

/// Expands f as a power series around var = 0 through order N by long
/// division. After shifting the denominator's var-content into the
/// numerator, the denominator's order-zero coefficient must be a unit of
/// the Laurent ring (a single term); otherwise the expansion point is a
/// pole and NonUnitDenominator is thrown.
TruncSeries series_expand(const RationalFunction& f, Var v, int order);

/// Rectangular truncated bivariate series; coefficients are free of both
/// distinguished variables.
class TruncSeries2 {
 public:
  TruncSeries2(Var vx, Var vy, int order_x, int order_y);

  /// Reads the coefficient grid off a polynomial (no negative exponents of
  /// vx, vy allowed); degrees beyond the orders are truncated away.
  static TruncSeries2 from_poly(const LaurentPoly& p, Var vx, Var vy, int order_x, int order_y);

  int order_x() const { return nx_; }
  int order_y() const { return ny_; }
  const LaurentPoly& coeff(int i, int j) const { return at(i, j); }
  void set_coeff(int i, int j, LaurentPoly c) { at(i, j) = std::move(c); }

  friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);

  /// Reciprocal; the (0,0) coefficient must be a unit (single term).
  TruncSeries2 reciprocal() const;

 private:
  const LaurentPoly& at(int i, int j) const { return grid_[i * (ny_ + 1) + j]; }
  LaurentPoly& at(int i, int j) { return grid_[i * (ny_ + 1) + j]; }

  Var vx_, vy_;
  int nx_, ny_;
  std::vector<LaurentPoly> grid_;
};

}  // namespace gsp4
