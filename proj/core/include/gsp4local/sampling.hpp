#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gsp4local/sugano.hpp"

namespace gsp4::sampling {

/// Deterministic parameter sampler. Draws are derived from a mt19937_64
/// stream by modular reduction, so identical seeds give identical samples
/// on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  long next_int(long lo, long hi);

  /// Nonzero rational with numerator in [-9, 9] and denominator in [1, 9].
  Rational nonzero_rational();

  /// Residue cardinality from the pool (default {4, 9, 25, 49}; always
  /// squares, so q^{1/2} stays rational).
  Rational sample_q();
  void set_q_pool(std::vector<long> pool);

  sugano::SatakeData sample_satake();

  /// Place data for the case; split samples reject nu(Pi_1)^2 = omega so
  /// the eta/theta weights stay nondegenerate.
  sugano::PlaceData sample_place(PlaceCase c, const sugano::SatakeData& s);

 private:
  std::mt19937_64 gen_;
  std::vector<long> q_pool_ = {4, 9, 25, 49};
};

}  // namespace gsp4::sampling
