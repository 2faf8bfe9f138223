#pragma once

// Brute-force reference routines used only by the test suite. These stay
// deliberately independent of the library's search and counting paths: trial
// division instead of Miller-Rabin, a sieve instead of next-prime scans,
// Pascal's triangle instead of gmp binomials.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t v = 2; v <= limit; ++v) {
    if (composite[v]) continue;
    primes.push_back(v);
    for (std::uint64_t q = v * v; q <= limit; q += v) composite[q] = true;
  }
  return primes;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline unsigned bit_length_u64(std::uint64_t v) {
  unsigned len = 0;
  while (v > 0) {
    ++len;
    v >>= 1;
  }
  return len;
}

// C(n, k) in 64 bits; only used for tiny n.
inline std::uint64_t pascal_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<std::vector<std::uint64_t>> rows(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return rows[n][k];
}

// Trial-division-backed membership for the builtin set kinds.
enum class Kind { Primes, Mersenne, Composites, PowersOfTwo, Odd };

inline bool member(Kind kind, std::uint64_t v) {
  switch (kind) {
    case Kind::Primes:
      return trial_division_prime(v);
    case Kind::Mersenne: {
      if (v < 3) return false;
      std::uint64_t vp1 = v + 1;
      if ((vp1 & (vp1 - 1)) != 0) return false;
      return trial_division_prime(v) && trial_division_prime(bit_length_u64(v));
    }
    case Kind::Composites:
      return v >= 4 && !trial_division_prime(v);
    case Kind::PowersOfTwo:
      return v >= 1 && (v & (v - 1)) == 0;
    case Kind::Odd:
      return v >= 1 && (v & 1) == 1;
  }
  return false;
}

inline std::uint64_t next_member(Kind kind, std::uint64_t bound) {
  for (std::uint64_t v = bound;; ++v) {
    if (member(kind, v)) return v;
    if (v > bound + 100000000ull) throw std::runtime_error("oracle: no member found");
  }
}

// The iterative constant-setting sequences, recomputed from the definitions
// with plain 64-bit arithmetic (valid while everything stays under 2^63).
struct SmallTable {
  std::vector<std::uint64_t> a, b, c;
};

inline SmallTable build_table(Kind kind, unsigned m, unsigned n0) {
  SmallTable t;
  std::uint64_t c1 = next_member(kind, std::uint64_t{1} << (n0 - 1));
  t.a.push_back(c1);
  t.b.push_back(0);
  t.c.push_back(c1);
  for (unsigned i = 2; i <= m; ++i) {
    std::uint64_t b_i = 0;
    for (unsigned l = 1; l < i; ++l) b_i += t.c[l - 1] * pascal_binomial(i, l);
    std::uint64_t a_i = next_member(kind, b_i);
    t.b.push_back(b_i);
    t.a.push_back(a_i);
    t.c.push_back(a_i - b_i);
  }
  return t;
}

}  // namespace oracle
