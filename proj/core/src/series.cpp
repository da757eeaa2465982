#include "gsp4local/series.hpp"

#include <sstream>

#include "gsp4local/errors.hpp"

namespace gsp4 {

TruncSeries::TruncSeries(Var v, int order) : var_(v) {
  if (order < 0) throw Error("negative series order");
  coeffs_.assign(order + 1, LaurentPoly());
}

const LaurentPoly& TruncSeries::coeff(int k) const {
  if (k < 0 || k > order()) throw Error("series coefficient index out of range");
  return coeffs_[k];
}

void TruncSeries::set_coeff(int k, LaurentPoly c) {
  if (k < 0 || k > order()) throw Error("series coefficient index out of range");
  if (c.involves(var_)) throw Error("series coefficient involves the series variable");
  coeffs_[k] = std::move(c);
}

namespace {

void require_same_frame(const TruncSeries& a, const TruncSeries& b) {
  if (a.var() != b.var()) throw Error("series in different variables");
}

}  // namespace

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_frame(a, b);
  int n = std::min(a.order(), b.order());
  TruncSeries r(a.var(), n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  require_same_frame(a, b);
  int n = std::min(a.order(), b.order());
  TruncSeries r(a.var(), n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_frame(a, b);
  int n = std::min(a.order(), b.order());
  TruncSeries r(a.var(), n);
  for (int k = 0; k <= n; ++k) {
    LaurentPoly acc;
    for (int j = 0; j <= k; ++j) acc += a.coeffs_[j] * b.coeffs_[k - j];
    r.coeffs_[k] = std::move(acc);
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.var() != b.var() || a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  return true;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k <= order(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k].to_string();
  }
  os << "]";
  return os.str();
}

TruncSeries series_expand(const RationalFunction& f, Var v, int order) {
  if (order < 0) throw Error("negative series order");
  // Shift any var-content of the denominator into the numerator.
  int shift = f.den().min_exponent(v);
  ExpVec sh{};
  sh[var_index(v)] = -shift;
  LaurentPoly num = f.num().shifted(Rational(1), sh);
  LaurentPoly den = f.den().shifted(Rational(1), sh);

  auto dcoeffs = den.collect(v);
  auto d0_it = dcoeffs.find(0);
  if (d0_it == dcoeffs.end() || !d0_it->second.is_monomial())
    throw NonUnitDenominator("expansion point is a pole (order-zero denominator "
                             "coefficient is not a unit)");
  LaurentPoly d0_inv = d0_it->second.monomial_inverse();

  auto ncoeffs = num.collect(v);
  if (!ncoeffs.empty() && ncoeffs.begin()->first < 0)
    throw NonUnitDenominator("series has a pole at the expansion point");

  auto ncoeff = [&](int k) -> LaurentPoly {
    auto it = ncoeffs.find(k);
    return it == ncoeffs.end() ? LaurentPoly() : it->second;
  };

  TruncSeries out(v, order);
  std::vector<LaurentPoly> b(order + 1);
  for (int k = 0; k <= order; ++k) {
    LaurentPoly acc = ncoeff(k);
    for (const auto& [j, dj] : dcoeffs) {
      if (j <= 0 || j > k) continue;
      acc -= dj * b[k - j];
    }
    b[k] = acc * d0_inv;
    out.set_coeff(k, b[k]);
  }
  return out;
}

TruncSeries2::TruncSeries2(Var vx, Var vy, int order_x, int order_y)
    : vx_(vx), vy_(vy), nx_(order_x), ny_(order_y) {
  if (order_x < 0 || order_y < 0) throw Error("negative series order");
  grid_.assign(static_cast<std::size_t>(nx_ + 1) * (ny_ + 1), LaurentPoly());
}

TruncSeries2 TruncSeries2::from_poly(const LaurentPoly& p, Var vx, Var vy, int order_x,
                                     int order_y) {
  if (p.min_exponent(vx) < 0 || p.min_exponent(vy) < 0)
    throw Error("bivariate series source has negative exponents");
  TruncSeries2 out(vx, vy, order_x, order_y);
  int ix = var_index(vx), iy = var_index(vy);
  for (const auto& t : p.terms()) {
    int i = t.exp[ix], j = t.exp[iy];
    if (i > order_x || j > order_y) continue;
    LaurentPoly::Term stripped = t;
    stripped.exp[ix] = 0;
    stripped.exp[iy] = 0;
    out.at(i, j) += LaurentPoly::monomial(stripped.coeff, stripped.exp);
  }
  return out;
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
  if (a.vx_ != b.vx_ || a.vy_ != b.vy_) throw Error("bivariate series in different variables");
  int nx = std::min(a.nx_, b.nx_), ny = std::min(a.ny_, b.ny_);
  TruncSeries2 r(a.vx_, a.vy_, nx, ny);
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      LaurentPoly acc;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) acc += a.at(k, l) * b.at(i - k, j - l);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

TruncSeries2 TruncSeries2::reciprocal() const {
  if (!at(0, 0).is_monomial())
    throw NonUnitDenominator("bivariate reciprocal needs a unit (0,0) coefficient");
  TruncSeries2 r(vx_, vy_, nx_, ny_);
  LaurentPoly c00_inv = at(0, 0).monomial_inverse();
  for (int i = 0; i <= nx_; ++i)
    for (int j = 0; j <= ny_; ++j) {
      if (i == 0 && j == 0) {
        r.at(0, 0) = c00_inv;
        continue;
      }
      LaurentPoly acc;
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          acc += at(k, l) * r.at(i - k, j - l);
        }
      r.at(i, j) = -(acc * c00_inv);
    }
  return r;
}

}  // namespace gsp4
