#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace gsp4 {

/// The fixed indeterminate set of the symbolic layer.
///
/// Semantics: c = chi_0, a = chi_1^{1/2}, b = chi_2^{1/2}, r = q^{1/2},
/// u = nu(Pi_1), t = q^{-s}, and x, y are the two arguments of the Bessel
/// generating function. Square roots are variables of their own so that
/// every quantity in scope is a Laurent monomial with integer exponents
/// (gamma_1 = a^2 b^2 c, omega^{1/2} = abc, q^{-3/2} = r^{-3},
/// q^{k-s} = r^{2k} t, and so on).
enum class Var : std::uint8_t { C = 0, A, B, R, U, T, X, Y };

inline constexpr int kVarCount = 8;

inline constexpr std::array<char, kVarCount> kVarNames = {'c', 'a', 'b', 'r',
                                                          'u', 't', 'x', 'y'};

constexpr char var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

constexpr int var_index(Var v) { return static_cast<int>(v); }

}  // namespace gsp4
