#include <doctest.h>

#include "gsp4local/errors.hpp"
#include "gsp4local/sugano.hpp"
#include "test_util.hpp"

using namespace gsp4;
using namespace gsp4::sugano;

namespace {

const LaurentPoly one{Rational(1)};

SatakeData random_satake(testutil::Gen& gen) {
  return SatakeData::exact(gen.nonzero_rational(), gen.nonzero_rational(),
                           gen.nonzero_rational());
}

PlaceData random_place(testutil::Gen& gen, PlaceCase c, const SatakeData& s) {
  static const long qs[4] = {4, 9, 25, 49};
  Rational q(qs[gen.interval(0, 3)]);
  if (c == PlaceCase::inert) return PlaceData::exact(q, -1);
  Rational omega = *s.chi1 * *s.chi2 * *s.chi0 * *s.chi0;
  Rational u = gen.nonzero_rational();
  while (u * u == omega) u = gen.nonzero_rational();
  return PlaceData::exact(q, +1, u);
}

// Independent extraction route: expand in x first (through H's y-layers),
// then in y. bessel_coeff itself uses one bivariate reciprocal.
RationalFunction iterated_coeff(const GeneratingFunction& g, int ell, int m) {
  auto layers = g.hnum.collect(Var::Y);
  auto qinv = series_expand(RationalFunction(one, g.Q), Var::Y, ell);
  LaurentPoly acc;
  for (const auto& [d, hd] : layers) {
    if (d > ell) continue;
    auto hd_over_p = series_expand(RationalFunction(hd, g.P), Var::X, m);
    acc += hd_over_p.coeff(m) * qinv.coeff(ell - d);
  }
  return RationalFunction(acc, g.hden);
}

}  // namespace

TEST_SUITE_BEGIN("sugano");

TEST_CASE("satake gamma dictionary") {
  auto s = SatakeData::symbolic();
  auto A2 = LaurentPoly::variable(Var::A, 2);
  auto B2 = LaurentPoly::variable(Var::B, 2);
  auto C = LaurentPoly::variable(Var::C);
  CHECK(s.gamma(1) == A2 * B2 * C);
  CHECK(s.gamma(2) == A2 * C);
  CHECK(s.gamma(3) == C);
  CHECK(s.gamma(4) == B2 * C);
  CHECK(s.gamma(1) * s.gamma(3) == s.gamma(2) * s.gamma(4));
  CHECK(s.omega() == A2 * B2 * C * C);
  // gamma_1 gamma_2 / omega = chi_1 and gamma_1 gamma_4 / omega = chi_2.
  CHECK(s.gamma(1) * s.gamma(2) * s.omega_inv() == A2);
  CHECK(s.gamma(1) * s.gamma(4) * s.omega_inv() == B2);
}

TEST_CASE("build_params symbolic") {
  auto s = SatakeData::symbolic();
  auto inert = build_params(s, PlaceData::symbolic(PlaceCase::inert));
  CHECK(rf_equal(inert.A4, RationalFunction(LaurentPoly::variable(Var::R, -4))));
  CHECK(inert.A5.is_zero());

  auto split = build_params(s, PlaceData::symbolic(PlaceCase::split));
  LaurentPoly u = LaurentPoly::variable(Var::U);
  LaurentPoly expect_eps = u + s.omega() * u.monomial_inverse();
  CHECK(rf_equal(split.A5, RationalFunction(LaurentPoly::variable(Var::R, -4) * expect_eps)));
  CHECK(rf_equal(split.A4, RationalFunction(-LaurentPoly::variable(Var::R, -4))));
  CHECK(rf_equal(split.A1, RationalFunction(LaurentPoly::variable(Var::R, -2))));
}

TEST_CASE("build_params trivial character at q = 9") {
  auto s = SatakeData::exact(Rational(1), Rational(1), Rational(1));
  auto params = build_params(s, PlaceData::exact(Rational(9), -1));
  CHECK(rf_equal(params.alpha, RationalFunction(Rational(4, 27))));
  CHECK(rf_equal(params.beta, RationalFunction(Rational(6, 729))));
  CHECK(rf_equal(params.A1, RationalFunction(Rational(1, 9))));
  CHECK(rf_equal(params.A2, RationalFunction(Rational(1, 81))));
}

TEST_CASE("ramified place is rejected") {
  auto s = SatakeData::symbolic();
  CHECK_THROWS_AS(build_params(s, PlaceData::exact(Rational(9), 0)), RamifiedPlace);
  CHECK_THROWS_AS(sugano_C(s, PlaceData::exact(Rational(25), 0)), RamifiedPlace);
}

TEST_CASE("q must be a rational square") {
  CHECK_THROWS(PlaceData::exact(Rational(3), -1));
  CHECK_NOTHROW(PlaceData::exact(Rational(9, 4), -1));
}

TEST_CASE("generating function shape") {
  for (PlaceCase c : {PlaceCase::inert, PlaceCase::split}) {
    auto s = SatakeData::symbolic();
    auto C = sugano_C(s, PlaceData::symbolic(c));
    // Denominator degree 4 in each of x and y, constant term normalization.
    CHECK(C.den().max_exponent(Var::X) == 4);
    CHECK(C.den().max_exponent(Var::Y) == 4);
    CHECK(bessel_coeff(s, PlaceData::symbolic(c), {0, 0}).num() == one);
  }
}

TEST_CASE("first y-coefficient is alpha - A5") {
  testutil::Gen gen(42);
  for (PlaceCase c : {PlaceCase::inert, PlaceCase::split}) {
    auto s = random_satake(gen);
    auto p = random_place(gen, c, s);
    auto params = build_params(s, p);
    auto expect = params.alpha - params.A5;

    CHECK(rf_equal(bessel_coeff(s, p, {1, 0}), expect));

    // Independent oracle: truncated reciprocal of Q times H(0, y).
    auto g = GeneratingFunction::build(s, p);
    LaurentPoly h0 = substitute(g.hnum, {{Var::X, RationalFunction(0)}}).num();
    auto series = series_expand(RationalFunction(h0, g.hden * g.Q), Var::Y, 1);
    CHECK(rf_equal(RationalFunction(series.coeff(1)), expect));
  }
}

TEST_CASE("normalization for random data") {
  testutil::Gen gen(7);
  for (int i = 0; i < 10; ++i) {
    for (PlaceCase c : {PlaceCase::inert, PlaceCase::split}) {
      auto s = random_satake(gen);
      auto p = random_place(gen, c, s);
      CHECK(rf_equal(bessel_coeff(s, p, {0, 0}), RationalFunction(1)));
    }
  }
}

TEST_CASE("two extraction routes agree") {
  testutil::Gen gen(11);
  for (PlaceCase c : {PlaceCase::inert, PlaceCase::split}) {
    // Symbolic data once, rational samples a few times.
    auto ssym = SatakeData::symbolic();
    auto psym = PlaceData::symbolic(c);
    auto gsym = GeneratingFunction::build(ssym, psym);
    for (int ell = 0; ell <= 4; ++ell)
      for (int m = 0; ell + m <= 4; ++m)
        CHECK(rf_equal(bessel_coeff(ssym, psym, {ell, m}), iterated_coeff(gsym, ell, m)));

    for (int i = 0; i < 3; ++i) {
      auto s = random_satake(gen);
      auto p = random_place(gen, c, s);
      auto g = GeneratingFunction::build(s, p);
      for (int ell = 0; ell <= 4; ++ell)
        for (int m = 0; ell + m <= 4; ++m)
          CHECK(rf_equal(bessel_coeff(s, p, {ell, m}), iterated_coeff(g, ell, m)));
    }
  }
}

TEST_CASE("Weyl symmetry: chi_1 <-> chi_2") {
  // Swapping a and b permutes the gamma_i, so C is unchanged.
  Bindings swap{{Var::A, RationalFunction(LaurentPoly::variable(Var::B))},
                {Var::B, RationalFunction(LaurentPoly::variable(Var::A))}};
  for (PlaceCase c : {PlaceCase::inert, PlaceCase::split}) {
    auto C = sugano_C(SatakeData::symbolic(), PlaceData::symbolic(c));
    CHECK(rf_equal(C, substitute(C, swap)));
  }
}

TEST_CASE("specialization coherence") {
  testutil::Gen gen(3);
  for (PlaceCase c : {PlaceCase::inert, PlaceCase::split}) {
    auto s = random_satake(gen);
    auto p = random_place(gen, c, s);
    auto direct = sugano_C(s, p);

    auto symbolic = sugano_C(SatakeData::symbolic(), PlaceData::symbolic(c));
    // a and b occur only through their squares; specialize accordingly.
    auto specialize = [&](const LaurentPoly& poly) {
      LaurentPoly out = substitute_square(poly, Var::A, LaurentPoly(*s.chi1));
      out = substitute_square(out, Var::B, LaurentPoly(*s.chi2));
      Bindings rest{{Var::C, RationalFunction(*s.chi0)},
                    {Var::R, RationalFunction(*p.sqrt_q)}};
      if (c == PlaceCase::split) rest.emplace(Var::U, RationalFunction(*p.nu1));
      return substitute(out, rest);
    };
    auto specialized = specialize(symbolic.num()) / specialize(symbolic.den());
    CHECK(rf_equal(specialized, direct));
  }
}

TEST_CASE("bessel coefficient rejects negative support") {
  auto s = SatakeData::symbolic();
  CHECK_THROWS(bessel_coeff(s, PlaceData::symbolic(PlaceCase::inert), {-1, 0}));
}

TEST_SUITE_END();
