#include "gsp4local/hilbert.hpp"

#include <cstdint>
#include <vector>

#include "gsp4local/errors.hpp"

namespace gsp4::hilbert {

namespace {

void require_nonzero(const Rational& a, const char* which) {
  if (a.is_zero()) throw ZeroArgument(std::string(which) + " must be nonzero");
}

// Valuation and unit part of a nonzero integer at p.
long strip_p(mpz_class& n, const mpz_class& p) {
  return mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

// (u - 1)/2 mod 2 for an odd residue u mod 8.
int eps2(unsigned long u) { return static_cast<int>((u - 1) / 2 % 2); }
// (u^2 - 1)/8 mod 2 for an odd residue u mod 8.
int omega2(unsigned long u) { return static_cast<int>((u * u - 1) / 8 % 2); }

// Odd residue of a rational 2-adic unit modulo 8.
unsigned long unit_mod8(const Rational& a) {
  mpz_class n = a.num(), d = a.den();
  mpz_class m8 = 8;
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m8.get_mpz_t());
  mpz_class r = (n * dinv) % 8;
  if (r < 0) r += 8;
  return r.get_ui();
}

// Residue of a rational p-adic unit modulo p.
mpz_class unit_mod_p(const Rational& a, const mpz_class& p) {
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), a.den().get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("denominator not prime to p");
  mpz_class r = (a.num() * dinv) % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

LocalPlace LocalPlace::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    throw Error("not a prime: " + p.get_str());
  return LocalPlace{Kind::finite, p};
}

int legendre(const mpz_class& a, const mpz_class& p) {
  if (p == 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    throw Error("legendre symbol needs an odd prime");
  mpz_class r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  // Euler's criterion: a^{(p-1)/2} mod p.
  mpz_class e = (p - 1) / 2, pw;
  mpz_powm(pw.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return pw == 1 ? +1 : -1;
}

int legendre(const Rational& a, const mpz_class& p) {
  require_nonzero(a, "legendre argument");
  return legendre(unit_mod_p(a, p), p);
}

long val_p(const Rational& a, const mpz_class& p) {
  require_nonzero(a, "valuation argument");
  mpz_class n = a.num(), d = a.den();
  return strip_p(n, p) - strip_p(d, p);
}

int hilbert_symbol(const Rational& a, const Rational& b, const LocalPlace& v) {
  require_nonzero(a, "hilbert symbol argument a");
  require_nonzero(b, "hilbert symbol argument b");
  if (v.kind == LocalPlace::Kind::real) {
    return (a.sign() < 0 && b.sign() < 0) ? -1 : +1;
  }
  const mpz_class& p = v.p;
  long alpha = val_p(a, p), beta = val_p(b, p);
  Rational u = a / Rational(p, mpz_class(1)).pow(alpha);
  Rational w = b / Rational(p, mpz_class(1)).pow(beta);
  if (p == 2) {
    // (-1)^{eps(u)eps(w) + alpha omega(w) + beta omega(u)}.
    unsigned long u8 = unit_mod8(u), w8 = unit_mod8(w);
    long e = static_cast<long>(eps2(u8) * eps2(w8)) + alpha % 2 * omega2(w8) +
             beta % 2 * omega2(u8);
    return e % 2 == 0 ? +1 : -1;
  }
  // Odd p: (-1)^{alpha beta (p-1)/2} (u/p)^beta (w/p)^alpha.
  int sign = 1;
  mpz_class half = (p - 1) / 2;
  if ((alpha % 2) && (beta % 2) && mpz_odd_p(half.get_mpz_t())) sign = -sign;
  if (beta % 2) sign *= legendre(u, p);
  if (alpha % 2) sign *= legendre(w, p);
  return sign;
}

namespace {

// Reduces a rational to an integer in the same square class with
// p-valuation 0 or 1: multiplies by the squared denominator, then strips
// even powers of p. Square scaling leaves solvability of
// z^2 = a x^2 + b y^2 unchanged.
mpz_class square_reduce(const Rational& a, const mpz_class& p) {
  mpz_class n = a.num() * a.den();
  mpz_class unit = n;
  long v = strip_p(unit, p);
  mpz_class out = unit;
  if (v % 2) out *= p;
  return out;
}

}  // namespace

bool solvable_oracle(const Rational& a0, const Rational& b0, const mpz_class& p,
                     int precision) {
  require_nonzero(a0, "oracle argument a");
  require_nonzero(b0, "oracle argument b");
  if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) throw Error("oracle place must be prime");

  mpz_class a = square_reduce(a0, p);
  mpz_class b = square_reduce(b0, p);
  long va = val_p(Rational(a, mpz_class(1)), p);
  long vb = val_p(Rational(b, mpz_class(1)), p);
  int k = precision;
  if (k == 0) k = static_cast<int>(val_p(Rational(4, 1), p) + va + vb) + 3;

  mpz_class modz = 1;
  for (int i = 0; i < k; ++i) modz *= p;
  if (modz > 1'000'000'000) throw ResourceLimit("oracle modulus too large: p^" + std::to_string(k));
  const std::uint64_t M = modz.get_ui();
  const std::uint64_t P = p.get_ui();
  auto reduce = [&](const mpz_class& z) -> std::uint64_t {
    mpz_class r = z % modz;
    if (r < 0) r += modz;
    return r.get_ui();
  };
  const std::uint64_t am = reduce(a), bm = reduce(b);

  // Square tables modulo p^k: any square, and squares of units.
  std::vector<std::uint8_t> sq(M, 0);
  for (std::uint64_t z = 0; z < M; ++z) {
    std::uint64_t zz = static_cast<std::uint64_t>((static_cast<unsigned __int128>(z) * z) % M);
    sq[zz] |= 1;
    if (z % P != 0) sq[zz] |= 2;
  }

  // Distinct values of x^2 mod p^k together with the divisibility of x.
  // Whether x is a unit is determined by the residue x^2 (its valuation is
  // zero exactly for unit x), so one pass suffices.
  std::vector<std::pair<std::uint64_t, std::uint8_t>> squares;
  {
    std::vector<std::uint8_t> seen(M, 0);
    for (std::uint64_t x = 0; x < M; ++x) {
      std::uint64_t xx = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % M);
      if (seen[xx]) continue;
      seen[xx] = 1;
      squares.push_back({xx, static_cast<std::uint8_t>(x % P != 0)});
    }
  }

  // A primitive triple (z, x, y) with z^2 = a x^2 + b y^2 (mod p^k) found
  // below always satisfies the Hensel criterion at this precision: one of
  // the coordinates is a unit, so the gradient valuation g obeys
  // 2g + 1 <= k, and the congruence lifts to an exact p-adic solution.
  // Conversely an exact primitive solution reduces to such a triple.
  for (const auto& [xsq, xunit] : squares) {
    std::uint64_t ax = static_cast<std::uint64_t>((static_cast<unsigned __int128>(am) * xsq) % M);
    for (const auto& [ysq, yunit] : squares) {
      std::uint64_t w = ax + static_cast<std::uint64_t>(
                                 (static_cast<unsigned __int128>(bm) * ysq) % M);
      if (w >= M) w -= M;
      if (xunit || yunit) {
        if (sq[w] & 1) return true;
      } else {
        if (sq[w] & 2) return true;  // x, y both divisible: z must be a unit
      }
    }
  }
  return false;
}

int classify_place(const QuadSpaceData& rho, const mpz_class& p) {
  require_nonzero(rho.rho, "rho");
  if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) throw Error("classification place must be prime");
  long v = val_p(rho.rho, p);
  Rational unit = rho.rho / Rational(p, mpz_class(1)).pow(v);
  if (v % 2 != 0) return 0;  // odd valuation: E_v/Q_p is ramified
  if (p == 2) {
    // Unit square classes mod 8: 1 -> split, 5 -> unramified nonsquare
    // (inert), 3 and 7 -> ramified.
    switch (unit_mod8(unit)) {
      case 1: return +1;
      case 5: return -1;
      default: return 0;
    }
  }
  return legendre(unit, p);
}

int chi_T(const Rational& a, const QuadSpaceData& rho, const LocalPlace& v) {
  require_nonzero(a, "chi_T argument");
  require_nonzero(rho.rho, "rho");
  return hilbert_symbol(a, rho.minus_detT(), v);
}

}  // namespace gsp4::hilbert
