#include "gsp4local/rational_function.hpp"

#include <ostream>

#include "gsp4local/errors.hpp"

namespace gsp4 {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  // Shift the denominator's monomial content into the numerator so that
  // every variable has minimum exponent zero in the denominator.
  ExpVec shift{};
  bool nontrivial = false;
  for (int i = 0; i < kVarCount; ++i) {
    int m = den_.min_exponent(static_cast<Var>(i));
    shift[i] = -m;
    nontrivial |= (m != 0);
  }
  if (nontrivial) {
    den_ = den_.shifted(Rational(1), shift);
    num_ = num_.shifted(Rational(1), shift);
  }
  // Monic leading coefficient.
  const Rational& lead = den_.leading().coeff;
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroDenominator("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction acc(1);
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
  return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

namespace {

bool is_scaled_monomial(const RationalFunction& f) {
  return f.is_polynomial() && f.num().term_count() <= 1;
}

RationalFunction binding_power(const RationalFunction& value, int e, char name) {
  if (e == 0) return RationalFunction(1);
  if (value.is_zero()) {
    if (e < 0)
      throw ZeroSubstitutionIntoNegativePower("zero bound to negative exponent of '" +
                                              std::string(1, name) + "'");
    return RationalFunction(0);
  }
  return value.pow(e);
}

}  // namespace

RationalFunction substitute(const LaurentPoly& p, const Bindings& bindings) {
  if (bindings.empty() || p.is_zero()) return RationalFunction(p);

  std::array<const RationalFunction*, kVarCount> bound{};
  for (const auto& [v, val] : bindings) bound[var_index(v)] = &val;

  // Monomial bindings (the common case here: every substitution in the
  // integral identities is variable -> scaled monomial) map each term to a
  // single term, so no denominators accumulate.
  bool all_monomial = true;
  for (const auto& [v, val] : bindings) all_monomial &= is_scaled_monomial(val);

  if (all_monomial) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
      Rational coeff = t.coeff;
      ExpVec exp = t.exp;
      bool vanished = false;
      for (int i = 0; i < kVarCount && !vanished; ++i) {
        if (exp[i] == 0 || bound[i] == nullptr) continue;
        int e = exp[i];
        exp[i] = 0;
        const LaurentPoly& val = bound[i]->num();
        if (val.is_zero()) {
          if (e < 0)
            throw ZeroSubstitutionIntoNegativePower(
                "zero bound to negative exponent of '" + std::string(1, kVarNames[i]) + "'");
          vanished = true;
          break;
        }
        const auto& vt = val.terms()[0];
        coeff *= vt.coeff.pow(e);
        for (int j = 0; j < kVarCount; ++j) exp[j] += vt.exp[j] * e;
      }
      if (!vanished) out.push_back({exp, coeff});
    }
    return RationalFunction(LaurentPoly::from_terms(std::move(out)));
  }

  RationalFunction acc(0);
  for (const auto& t : p.terms()) {
    RationalFunction prod{LaurentPoly(t.coeff)};
    ExpVec residual = t.exp;
    for (int i = 0; i < kVarCount; ++i) {
      if (t.exp[i] == 0 || bound[i] == nullptr) continue;
      residual[i] = 0;
      prod = prod * binding_power(*bound[i], t.exp[i], kVarNames[i]);
    }
    prod = prod * RationalFunction(LaurentPoly::monomial(Rational(1), residual));
    acc = acc + prod;
  }
  return acc;
}

RationalFunction substitute(const RationalFunction& f, const Bindings& bindings) {
  RationalFunction n = substitute(f.num(), bindings);
  RationalFunction d = substitute(f.den(), bindings);
  if (d.is_zero()) throw ZeroDenominator("substitution sent the denominator to zero");
  return n / d;
}

LaurentPoly substitute_square(const LaurentPoly& p, Var v, const LaurentPoly& value_of_square) {
  int idx = var_index(v);
  LaurentPoly acc;
  for (const auto& [e, coeff_poly] : p.collect(v)) {
    if (e % 2 != 0)
      throw Error("substitute_square on a polynomial with odd exponent of '" +
                  std::string(1, kVarNames[idx]) + "'");
    int half = e / 2;
    LaurentPoly powv = half >= 0 ? value_of_square.pow(half)
                                 : value_of_square.monomial_inverse().pow(-half);
    acc += coeff_poly * powv;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

}  // namespace gsp4
