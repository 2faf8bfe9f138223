#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rcgap {

// All set elements, path counts and table constants are exact integers.
using Integer = mpz_class;

// Number of bits in the binary representation; 0 has length 0.
inline unsigned bit_length(const Integer& v) {
  if (v == 0) return 0;
  return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

inline Integer pow2(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

// 2^p - 1
inline Integer mersenne_number(unsigned p) {
  Integer r = pow2(p);
  return r - 1;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

inline bool fits_u64(const Integer& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& v) {
  // mpz_get_ui truncates to unsigned long; assemble from two limbs to be safe.
  Integer lo = v & Integer(0xffffffffu);
  Integer hi = v >> 32;
  return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t()));
}

}  // namespace rcgap
