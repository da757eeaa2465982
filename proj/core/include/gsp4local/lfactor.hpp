#pragma once

#include <array>

#include "gsp4local/sugano.hpp"

namespace gsp4::lfactor {

/// Reciprocal roots of the degree-five local factor, read off the Satake
/// parameter: {1, chi_1, chi_1^{-1}, chi_2, chi_2^{-1}}. The multiset is
/// invariant under chi_1 <-> chi_2 and chi_i -> chi_i^{-1}, and the product
/// of the five values is 1.
struct EigenvalueSet {
  std::array<LaurentPoly, 5> values;
};

EigenvalueSet eigenvalues(const sugano::SatakeData& s);

/// prod_lambda (1 - twist * lambda * t)^{-1} with twist in {+1, -1}; the
/// denominator has t-degree exactly 5.
RationalFunction local_lfactor(const sugano::SatakeData& s, int twist);

/// zeta_v(s+1) zeta_v(2s) = ((1 - q^{-1} t)(1 - t^2))^{-1}.
RationalFunction zeta_normalizer(const sugano::PlaceData& p);

}  // namespace gsp4::lfactor
