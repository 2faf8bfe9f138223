#include "rcgap/primality.hpp"

#include <array>
#include <stdexcept>

namespace rcgap {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Strong-pseudoprime test for one base.
bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t base) {
  if (base % n == 0) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod_u64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<unsigned, 12> kMrBases = {2,  3,  5,  7,  11, 13,
                                               17, 19, 23, 29, 31, 37};

constexpr std::array<unsigned, 30> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

bool strong_probable_prime_base2(const Integer& n) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  Integer x;
  Integer two = 2;
  mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

// Strong Lucas test with Selfridge's method A parameters.
bool strong_lucas_selfridge(const Integer& n) {
  // Find D in 5, -7, 9, -11, ... with jacobi(D, n) == -1.
  long d_abs = 5;
  int sign = 1;
  Integer d_int;
  while (true) {
    d_int = sign > 0 ? Integer(d_abs) : Integer(-d_abs);
    int j = mpz_jacobi(d_int.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && (n != d_abs)) return false;  // shares a factor with D
    d_abs += 2;
    sign = -sign;
    if (d_abs > 1000) {
      // Perfect squares never yield jacobi -1; callers filter them first.
      return false;
    }
  }
  // P = 1, Q = (1 - D) / 4
  Integer q = (Integer(1) - d_int) / 4;

  Integer delta = n + 1;
  unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
  Integer t = delta >> s;

  // Compute U_t, V_t, Q^t (mod n) by the binary chain over the bits of t.
  Integer u = 1, v = 1, qk = q % n;
  long bits = static_cast<long>(mpz_sizeinbase(t.get_mpz_t(), 2));
  auto mod_half = [&n](Integer x) {
    // Exact division by 2 mod odd n.
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    x >>= 1;
    return Integer(x % n);
  };
  for (long i = bits - 2; i >= 0; --i) {
    // Double: (U, V, Q^k) -> (U_{2k}, V_{2k}, Q^{2k})
    u = (u * v) % n;
    v = (v * v - 2 * qk) % n;
    qk = (qk * qk) % n;
    if (mpz_tstbit(t.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      // Add one: (U_{2k+1}, V_{2k+1}) with P = 1.
      Integer u_next = mod_half(u + v);
      Integer v_next = mod_half(d_int * u + v);
      u = u_next;
      v = v_next;
      qk = (qk * q) % n;
    }
  }
  u %= n;
  if (u < 0) u += n;
  if (u == 0) return true;
  v %= n;
  if (v < 0) v += n;
  if (v == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = (v * v - 2 * qk) % n;
    if (v < 0) v += n;
    if (v == 0) return true;
    qk = (qk * qk) % n;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (unsigned base : kMrBases) {
    if (!strong_probable_prime_u64(n, base)) return false;
  }
  return true;
}

PrimalityResult classify_prime(const Integer& v) {
  if (v < 2) return {false, true};
  if (fits_u64(v)) return {is_prime_u64(to_u64(v)), true};

  for (unsigned p : kSmallPrimes) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), p)) return {false, true};
  }
  if (mpz_perfect_square_p(v.get_mpz_t())) return {false, true};
  if (!strong_probable_prime_base2(v)) return {false, true};
  if (!strong_lucas_selfridge(v)) return {false, true};
  return {true, false};  // Baillie-PSW verdict, no known counterexample
}

bool lucas_lehmer(unsigned p) {
  if (p < 2) throw std::domain_error("lucas_lehmer: exponent must be >= 2");
  if (p == 2) return true;
  if (!is_prime_u64(p)) return false;
  Integer m = mersenne_number(p);
  Integer s = 4;
  for (unsigned i = 0; i + 2 < p; ++i) {
    s = (s * s - 2) % m;
  }
  return s == 0;
}

}  // namespace rcgap
