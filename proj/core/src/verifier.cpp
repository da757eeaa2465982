#include "gsp4local/verifier.hpp"

#include "gsp4local/cosets.hpp"
#include "gsp4local/errors.hpp"

namespace gsp4::verifier {

using sugano::GeneratingFunction;
using sugano::PlaceData;
using sugano::SatakeData;

namespace {

const LaurentPoly kOne{Rational(1)};
const LaurentPoly kT = LaurentPoly::variable(Var::T);

void require_case(const PlaceData& p, PlaceCase expected) {
  if (p.place_case() != expected)
    throw WrongCase(std::string("place data is for the ") +
                    (expected == PlaceCase::inert ? "split" : "inert") + " case");
}

// (1 -+ q^{-1} t), with the sign flipped by the mutation guard.
LaurentPoly degree_one_factor(const PlaceData& p, bool flip) {
  LaurentPoly term = p.rpow(-2) * kT;
  return flip ? kOne + term : kOne - term;
}

RationalFunction closed_form(const SatakeData& s, const PlaceData& p, PlaceCase c,
                             bool flip) {
  // Inert: (1 - t)(1 - q^{-1} t) prod (1 + gamma_i gamma_j omega^{-1} t)^{-1};
  // split: (1 + t)(1 - q^{-1} t) prod (1 - gamma_i gamma_j omega^{-1} t)^{-1}.
  Rational sign(c == PlaceCase::inert ? 1 : -1);
  LaurentPoly num = (c == PlaceCase::inert ? kOne - kT : kOne + kT) * degree_one_factor(p, flip);
  LaurentPoly den = kOne;
  const int pairs[4][2] = {{1, 2}, {1, 4}, {2, 3}, {3, 4}};
  LaurentPoly winv = s.omega_inv();
  for (const auto& ij : pairs)
    den = den * (kOne + (s.gamma(ij[0]) * s.gamma(ij[1]) * winv * kT).scaled(sign));
  return RationalFunction(num, den);
}

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::symbolic: return "symbolic";
    case Mode::univariate: return "univariate";
    case Mode::series: return "series";
  }
  return "?";
}

const char* to_string(SplitConvention c) {
  return c == SplitConvention::proof ? "proof" : "paper-A";
}

const char* to_string(PlaceCase c) { return c == PlaceCase::inert ? "inert" : "split"; }

RationalFunction assembled_inert(const SatakeData& s, const PlaceData& p) {
  require_case(p, PlaceCase::inert);
  GeneratingFunction g = GeneratingFunction::build(s, p);
  LaurentPoly winv = s.omega_inv();
  LaurentPoly xval = -(winv * p.qpow(2) * kT);       // -omega^{-1} q^{2-s}
  LaurentPoly y2val = winv * p.qpow(2) * (kT * kT);  // (omega^{-1/2} q^{1-s})^2
  // Both (+-y)-averaged specializations share the denominator
  // hden P(x) Dq with Dq = Q(y) Q(-y); assemble the pair over it directly.
  LaurentPoly n_x = g.even_num_at(xval, y2val);
  LaurentPoly n_0 = g.even_num_at(LaurentPoly(), y2val);
  LaurentPoly pofx = g.p_at(xval);
  LaurentPoly dq = g.even_den_at(y2val);
  LaurentPoly num = (kOne + p.rpow(-2)) * n_x - p.rpow(-2) * (pofx * n_0);
  LaurentPoly den = g.hden * pofx * dq;
  return RationalFunction(num, den);
}

RationalFunction closed_form_inert(const SatakeData& s, const PlaceData& p, Tamper tamper) {
  require_case(p, PlaceCase::inert);
  return closed_form(s, p, PlaceCase::inert, tamper == Tamper::inert_sign);
}

EtaTheta eta_theta(const SatakeData& s, const PlaceData& p) {
  require_case(p, PlaceCase::split);
  LaurentPoly winv = s.omega_inv();
  LaurentPoly nu[2] = {p.nu1_val(), p.nu2_val(s)};
  EtaTheta out;
  RationalFunction* etas[2] = {&out.eta1, &out.eta2};
  RationalFunction* thetas[2] = {&out.theta1, &out.theta2};
  for (int i = 0; i < 2; ++i) {
    LaurentPoly r = winv * nu[i] * nu[i];  // omega^{-1} nu(Pi_i)^2
    LaurentPoly den = r - kOne;
    if (den.is_zero())
      throw DegenerateSplitParameter("nu(Pi_1) = nu(Pi_2): eta/theta weights degenerate");
    *etas[i] = RationalFunction(r, den);
    *thetas[i] = RationalFunction(winv * nu[i], den);
  }
  return out;
}

RationalFunction assembled_split(const SatakeData& s, const PlaceData& p) {
  require_case(p, PlaceCase::split);
  GeneratingFunction g = GeneratingFunction::build(s, p);
  EtaTheta et = eta_theta(s, p);
  LaurentPoly winv = s.omega_inv();
  LaurentPoly xval = winv * p.qpow(2) * kT;               // omega^{-1} q^{2-s}
  LaurentPoly z1 = winv * p.nu1_val() * p.qpow(1) * kT;   // omega^{-1} nu(Pi_1) q^{1-s}
  LaurentPoly z2 = winv * p.nu2_val(s) * p.qpow(1) * kT;  // omega^{-1} nu(Pi_2) q^{1-s}
  // All four specializations of C share hden, the eta_i share their
  // denominators, and P(0) = 1; assemble over the common denominator
  // ed1 ed2 hden P(x) Q(z1) Q(z2) to keep the term count down.
  LaurentPoly pofx = g.p_at(xval);
  LaurentPoly q1 = g.q_at(z1), q2 = g.q_at(z2);
  LaurentPoly w1 = et.eta1.num() * et.eta2.den();
  LaurentPoly w2 = et.eta2.num() * et.eta1.den();
  LaurentPoly big = w1 * (g.hnum_at(xval, z1) * q2) + w2 * (g.hnum_at(xval, z2) * q1);
  LaurentPoly small =
      w1 * (g.hnum_at(LaurentPoly(), z1) * q2) + w2 * (g.hnum_at(LaurentPoly(), z2) * q1);
  // The m = 0 column enters with weight +q^{-1}: the index of H^0 is 1
  // rather than the generic q^m (1 - 1/q), and 1 = (1 - 1/q) + 1/q.
  LaurentPoly num = (kOne - p.rpow(-2)) * big + p.rpow(-2) * (pofx * small);
  LaurentPoly den = et.eta1.den() * et.eta2.den() * g.hden * pofx * q1 * q2;
  return RationalFunction(num, den);
}

RationalFunction closed_form_split(const SatakeData& s, const PlaceData& p, Tamper tamper) {
  require_case(p, PlaceCase::split);
  return closed_form(s, p, PlaceCase::split, tamper == Tamper::split_sign);
}

TruncSeries series_oracle(PlaceCase c, const SatakeData& s, const PlaceData& p, int order,
                          SplitConvention conv) {
  require_case(p, c);
  if (order < 0) throw Error("negative oracle order");
  GeneratingFunction g = GeneratingFunction::build(s, p);
  if (!g.hden.is_monomial())
    throw NonUnitDenominator("series oracle needs exact Satake and place data");
  LaurentPoly hden_inv = g.hden.monomial_inverse();
  TruncSeries2 grid = g.coefficient_grid(order, order);
  auto bessel = [&](int ell, int m) { return grid.coeff(m, ell) * hden_inv; };

  LaurentPoly winv = s.omega_inv();
  TruncSeries out(Var::T, order);
  std::vector<LaurentPoly> acc(order + 1);

  auto add_term = [&](int n, int m, int k, const LaurentPoly& nu_power) {
    auto we = cosets::coset_weight(c, n, m, k);
    int tpow = -we.section_s_coeff;
    if (tpow > order) return;
    int qexp = we.volume_exp + we.section_const + we.weil_exp;
    // chi_T(pi) = (E/v) on uniformizer powers.
    Rational chi_sign(p.legendre_E == -1 && we.weil_chi_power % 2 ? -1 : 1);
    LaurentPoly term = cosets::index_weight(p, m) * p.qpow(qexp) *
                       winv.pow(n + m + k) * nu_power * bessel(2 * n + k, m);
    acc[tpow] += term.scaled(chi_sign);
  };

  if (c == PlaceCase::inert) {
    for (int m = 0; m <= order; ++m)
      for (int n = 0; 2 * n + m <= order; ++n) add_term(n, m, 0, kOne);
  } else {
    LaurentPoly nu[2] = {p.nu1_val(), p.nu2_val(s)};
    for (int i = 0; i < 2; ++i) {
      int kmin = (conv == SplitConvention::proof && i == 0) ? 1 : 0;
      for (int k = kmin; k <= order; ++k) {
        LaurentPoly nu_power = nu[i].pow(k);
        for (int m = 0; m + k <= order; ++m)
          for (int n = 0; 2 * n + m + k <= order; ++n) add_term(n, m, k, nu_power);
      }
    }
  }
  for (int t = 0; t <= order; ++t) out.set_coeff(t, acc[t]);
  return out;
}

namespace {

// Lowest t-power where the cross products of f and g differ.
std::optional<Mismatch> cross_mismatch(const RationalFunction& f, const RationalFunction& g) {
  LaurentPoly lhs = f.num() * g.den();
  LaurentPoly rhs = g.num() * f.den();
  if (lhs == rhs) return std::nullopt;
  auto lc = lhs.collect(Var::T);
  auto rc = rhs.collect(Var::T);
  for (int t = std::min(lhs.min_exponent(Var::T), rhs.min_exponent(Var::T));; ++t) {
    auto li = lc.find(t);
    auto ri = rc.find(t);
    const LaurentPoly& l = li == lc.end() ? LaurentPoly() : li->second;
    const LaurentPoly& r = ri == rc.end() ? LaurentPoly() : ri->second;
    if (l != r) return Mismatch{t, l.to_string(), r.to_string()};
  }
}

CheckResult equality_check(std::string name, const RationalFunction& lhs,
                           const RationalFunction& rhs) {
  CheckResult c;
  c.name = std::move(name);
  auto mm = cross_mismatch(lhs, rhs);
  c.pass = !mm.has_value();
  c.first_mismatch = std::move(mm);
  return c;
}

std::string symbolic_or(const std::optional<Rational>& v, const char* marker) {
  return v ? v->to_string() : std::string(marker);
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["case"] = to_string(place_case);
  j["mode"] = to_string(mode);
  j["order"] = order;
  j["seed"] = seed;
  nlohmann::ordered_json jp = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) jp[k] = v;
  j["params"] = jp;
  if (convention) j["convention"] = to_string(*convention);
  nlohmann::ordered_json jc = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (c.first_mismatch) {
      e["first_mismatch"] = {{"t_power", c.first_mismatch->t_power},
                             {"lhs", c.first_mismatch->lhs},
                             {"rhs", c.first_mismatch->rhs}};
    } else {
      e["first_mismatch"] = nullptr;
    }
    jc.push_back(e);
  }
  j["checks"] = jc;
  return j;
}

VerifyReport verify(PlaceCase c, Mode mode, const SatakeData& s, const PlaceData& p, int order,
                    std::uint64_t seed, SplitConvention conv, Tamper tamper) {
  VerifyReport rep;
  rep.place_case = c;
  rep.mode = mode;
  rep.order = order;
  rep.seed = seed;
  rep.params = {{"chi0", symbolic_or(s.chi0, "c")},
                {"chi1", symbolic_or(s.chi1, "a^2")},
                {"chi2", symbolic_or(s.chi2, "b^2")}};
  rep.params.emplace_back("q", p.sqrt_q ? (*p.sqrt_q * *p.sqrt_q).to_string() : "r^2");
  if (c == PlaceCase::split)
    rep.params.emplace_back("u", symbolic_or(p.nu1, "u"));

  int twist = (c == PlaceCase::inert) ? -1 : +1;
  auto closed = [&] {
    return c == PlaceCase::inert ? closed_form_inert(s, p, tamper)
                                 : closed_form_split(s, p, tamper);
  };

  switch (mode) {
    case Mode::symbolic:
    case Mode::univariate: {
      RationalFunction assembled =
          c == PlaceCase::inert ? assembled_inert(s, p) : assembled_split(s, p);
      RationalFunction cf = closed();
      rep.checks.push_back(equality_check("assembled_equals_closed", assembled, cf));
      rep.checks.push_back(equality_check("normalized_equals_lfactor",
                                          lfactor::zeta_normalizer(p) * cf,
                                          lfactor::local_lfactor(s, twist)));
      break;
    }
    case Mode::series: {
      if (c == PlaceCase::split) rep.convention = conv;
      TruncSeries oracle = series_oracle(c, s, p, order, conv);
      TruncSeries taylor = series_expand(closed(), Var::T, order);
      CheckResult chk;
      chk.name = "series_matches_closed";
      chk.pass = true;
      for (int t = 0; t <= order; ++t) {
        if (oracle.coeff(t) != taylor.coeff(t)) {
          chk.pass = false;
          chk.first_mismatch =
              Mismatch{t, oracle.coeff(t).to_string(), taylor.coeff(t).to_string()};
          break;
        }
      }
      rep.checks.push_back(std::move(chk));
      break;
    }
  }
  return rep;
}

}  // namespace gsp4::verifier
