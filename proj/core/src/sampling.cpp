#include "gsp4local/sampling.hpp"

#include "gsp4local/errors.hpp"

namespace gsp4::sampling {

long SampleRng::next_int(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(gen_() % span);
}

Rational SampleRng::nonzero_rational() {
  long num = 0;
  while (num == 0) num = next_int(-9, 9);
  long den = next_int(1, 9);
  return Rational(num, den);
}

Rational SampleRng::sample_q() {
  return Rational(q_pool_[next_int(0, static_cast<long>(q_pool_.size()) - 1)]);
}

void SampleRng::set_q_pool(std::vector<long> pool) {
  if (pool.empty()) throw Error("empty q pool");
  q_pool_ = std::move(pool);
}

sugano::SatakeData SampleRng::sample_satake() {
  return sugano::SatakeData::exact(nonzero_rational(), nonzero_rational(), nonzero_rational());
}

sugano::PlaceData SampleRng::sample_place(PlaceCase c, const sugano::SatakeData& s) {
  Rational q = sample_q();
  if (c == PlaceCase::inert) return sugano::PlaceData::exact(q, -1);
  Rational omega = *s.chi1 * *s.chi2 * *s.chi0 * *s.chi0;
  Rational u = nonzero_rational();
  while (u * u == omega) u = nonzero_rational();
  return sugano::PlaceData::exact(q, +1, u);
}

}  // namespace gsp4::sampling
