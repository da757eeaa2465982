#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gsp4local/lfactor.hpp"

namespace gsp4::verifier {

enum class Mode { symbolic, univariate, series };

/// The two readings of the split-case coset enumeration: `proof` counts the
/// k = 0 column once (k >= 1 for Pi_1, k >= 0 for Pi_2, following the coset
/// proposition's proof); `paper_a` counts it for both i = 1, 2 as the
/// summation display literally reads.
enum class SplitConvention { proof, paper_a };

/// Single-sign-flip fault injection for the mutation guard: flips the sign
/// of the degree-one factor (1 -+ q^{-1} t) in the chosen closed form.
enum class Tamper { none, inert_sign, split_sign };

const char* to_string(Mode m);
const char* to_string(SplitConvention c);
const char* to_string(PlaceCase c);

/// Inert local integral assembled from the generating function:
/// (1 + q^{-1}) [C(x, y) + C(x, -y)]/2 - q^{-1} [C(0, y) + C(0, -y)]/2
/// at x = -omega^{-1} q^{2-s}, y = omega^{-1/2} q^{1-s}.
RationalFunction assembled_inert(const sugano::SatakeData& s, const sugano::PlaceData& p);

/// Inert closed form (1 - t)(1 - q^{-1} t) prod (1 + gamma_i gamma_j
/// omega^{-1} t)^{-1} over the pairs (12), (14), (23), (34).
RationalFunction closed_form_inert(const sugano::SatakeData& s, const sugano::PlaceData& p,
                                   Tamper tamper = Tamper::none);

struct EtaTheta {
  RationalFunction eta1, eta2, theta1, theta2;
};

/// The split-case partial-fraction weights in nu(Pi_1) and omega. Throws
/// DegenerateSplitParameter when nu(Pi_1)^2 = omega.
EtaTheta eta_theta(const sugano::SatakeData& s, const sugano::PlaceData& p);

/// Split local integral assembled from the generating function:
/// (1 - q^{-1}) sum_i eta_i C(x, z_i) + q^{-1} sum_i eta_i C(0, z_i)
/// at x = omega^{-1} q^{2-s}, z_i = omega^{-1} nu(Pi_i) q^{1-s}.
RationalFunction assembled_split(const sugano::SatakeData& s, const sugano::PlaceData& p);

/// Split closed form (1 + t)(1 - q^{-1} t) prod (1 - gamma_i gamma_j
/// omega^{-1} t)^{-1}.
RationalFunction closed_form_split(const sugano::SatakeData& s, const sugano::PlaceData& p,
                                   Tamper tamper = Tamper::none);

/// First-principles expansion of the local integral in t = q^{-s} through
/// order N: enumerates cosets (n, m, k), combines the index formula, the
/// volume/section/Weil weights, the central character, and Bessel values.
/// Needs exact (non-symbolic) Satake and place data.
TruncSeries series_oracle(PlaceCase c, const sugano::SatakeData& s, const sugano::PlaceData& p,
                          int order, SplitConvention conv = SplitConvention::proof);

struct Mismatch {
  int t_power = 0;
  std::string lhs, rhs;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
};

/// Outcome of one verification run; failures are entries, not exceptions.
struct VerifyReport {
  PlaceCase place_case = PlaceCase::inert;
  Mode mode = Mode::univariate;
  int order = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<SplitConvention> convention;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

/// Runs the checks for one parameter set.
///   symbolic / univariate: assembled = closed (rf_equal) and
///                          zeta_normalizer * closed = twisted L-factor;
///   series:                series_oracle = Taylor coefficients of the
///                          closed form through the given order.
VerifyReport verify(PlaceCase c, Mode mode, const sugano::SatakeData& s,
                    const sugano::PlaceData& p, int order, std::uint64_t seed,
                    SplitConvention conv = SplitConvention::proof,
                    Tamper tamper = Tamper::none);

}  // namespace gsp4::verifier
