#include "gsp4local/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gsp4local/errors.hpp"

namespace gsp4 {

namespace {

constexpr std::size_t kDefaultTermLimit = 2'000'000;

std::atomic<std::size_t> g_term_limit{kDefaultTermLimit};

void check_budget(std::size_t projected) {
  if (projected > g_term_limit.load(std::memory_order_relaxed)) {
    throw ResourceLimit("operation would exceed the term-count ceiling (" +
                        std::to_string(projected) + " terms projected)");
  }
}

// Descending graded-lex, so the leading term sits first.
bool term_before(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
  return grlex_less(b.exp, a.exp);
}

}  // namespace

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kVarCount; ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec exp_neg(const ExpVec& a) {
  ExpVec r;
  for (int i = 0; i < kVarCount; ++i) r[i] = -a[i];
  return r;
}

bool grlex_less(const ExpVec& a, const ExpVec& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

std::size_t term_limit() { return g_term_limit.load(std::memory_order_relaxed); }

void set_term_limit(std::size_t limit) {
  g_term_limit.store(limit == 0 ? kDefaultTermLimit : limit, std::memory_order_relaxed);
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({kZeroExp, c});
}

LaurentPoly LaurentPoly::variable(Var v, int exponent) {
  ExpVec e{};
  e[var_index(v)] = exponent;
  return monomial(Rational(1), e);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, const ExpVec& exp) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == kZeroExp && terms_[0].coeff.is_one();
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == kZeroExp);
}

const LaurentPoly::Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

Rational LaurentPoly::constant_coeff() const {
  for (const auto& t : terms_)
    if (t.exp == kZeroExp) return t.coeff;
  return Rational(0);
}

int LaurentPoly::min_exponent(Var v) const {
  int idx = var_index(v);
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exp[idx] < m) m = t.exp[idx];
    first = false;
  }
  return m;
}

int LaurentPoly::max_exponent(Var v) const {
  int idx = var_index(v);
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exp[idx] > m) m = t.exp[idx];
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coeff});
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  check_budget(a.terms_.size() + b.terms_.size());
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->exp == ib->exp) {
      Rational c = ia->coeff + ib->coeff;
      if (!c.is_zero()) r.terms_.push_back({ia->exp, std::move(c)});
      ++ia;
      ++ib;
    } else if (grlex_less(ib->exp, ia->exp)) {
      r.terms_.push_back(*ia++);
    } else {
      r.terms_.push_back(*ib++);
    }
  }
  r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
  r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::size_t projected = a.terms_.size() * b.terms_.size();
  check_budget(projected);
  // Single-term factors are pure exponent shifts.
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].coeff, a.terms_[0].exp);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].coeff, b.terms_[0].exp);
  std::vector<LaurentPoly::Term> prods;
  prods.reserve(projected);
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      prods.push_back({exp_add(ta.exp, tb.exp), ta.coeff * tb.coeff});
  return LaurentPoly::from_terms(std::move(prods));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, t.coeff * c});
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (is_monomial()) return monomial_inverse().pow(-e);
    throw Error("negative power of a non-monomial polynomial");
  }
  LaurentPoly acc(Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw Error("inverse of a non-monomial polynomial");
  return monomial(terms_[0].coeff.inverse(), exp_neg(terms_[0].exp));
}

LaurentPoly LaurentPoly::shifted(const Rational& coeff, const ExpVec& exp) const {
  if (coeff.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({exp_add(t.exp, exp), t.coeff * coeff});
  return r;
}

std::map<int, LaurentPoly> LaurentPoly::collect(Var v) const {
  int idx = var_index(v);
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term stripped = t;
    int e = stripped.exp[idx];
    stripped.exp[idx] = 0;
    buckets[e].push_back(std::move(stripped));
  }
  std::map<int, LaurentPoly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

Rational LaurentPoly::evaluate(const std::array<Rational, kVarCount>& values) const {
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (int i = 0; i < kVarCount; ++i) {
      if (t.exp[i] == 0) continue;
      if (values[i].is_zero()) {
        if (t.exp[i] < 0)
          throw ZeroSubstitutionIntoNegativePower("zero bound to negative exponent of '" +
                                                  std::string(1, kVarNames[i]) + "'");
        prod = Rational(0);
        break;
      }
      prod *= values[i].pow(t.exp[i]);
    }
    acc += prod;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    bool has_vars = t.exp != kZeroExp;
    bool coeff_shown = !c.is_one() || !has_vars;
    if (coeff_shown) os << c.to_string();
    bool need_star = coeff_shown;
    for (int i = 0; i < kVarCount; ++i) {
      if (t.exp[i] == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[i];
      if (t.exp[i] != 1) os << "^" << t.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

}  // namespace gsp4
