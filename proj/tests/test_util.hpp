#pragma once

#include <random>

#include "gsp4local/rational_function.hpp"

namespace gsp4::testutil {

/// Seeded generator for random algebra inputs, independent of the library's
/// sampling module.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : gen_(seed) {}

  long interval(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long bound = 9) {
    return Rational(interval(-bound, bound), interval(1, bound));
  }

  Rational nonzero_rational(long bound = 9) {
    Rational r = rational(bound);
    while (r.is_zero()) r = rational(bound);
    return r;
  }

  /// Random Laurent polynomial with at most max_terms terms in the first
  /// nvars variables, exponents in [-3, 3].
  LaurentPoly poly(int max_terms = 6, int nvars = 4) {
    std::vector<LaurentPoly::Term> ts;
    int n = static_cast<int>(interval(0, max_terms));
    for (int i = 0; i < n; ++i) {
      ExpVec e{};
      for (int v = 0; v < nvars; ++v) e[v] = static_cast<int>(interval(-3, 3));
      ts.push_back({e, rational()});
    }
    return LaurentPoly::from_terms(std::move(ts));
  }

  std::array<Rational, kVarCount> nonzero_point() {
    std::array<Rational, kVarCount> pt;
    for (auto& r : pt) r = nonzero_rational();
    return pt;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gsp4::testutil
