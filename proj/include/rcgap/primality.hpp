#pragma once

#include <cstdint>

#include "rcgap/integer.hpp"

namespace rcgap {

struct PrimalityResult {
  bool prime = false;
  // True when the answer is unconditional (trial division, deterministic
  // Miller-Rabin below 2^64, Lucas-Lehmer). False for Baillie-PSW verdicts.
  bool deterministic = true;
};

// Deterministic Miller-Rabin with the 12-base set {2,...,37}, valid for all
// 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64, Baillie-PSW (strong base-2 probable prime test
// plus a strong Lucas-Selfridge test) above.
PrimalityResult classify_prime(const Integer& v);

inline bool is_prime(const Integer& v) { return classify_prime(v).prime; }

// True iff 2^p - 1 is prime. p = 2 is the special case M_2 = 3; composite p
// returns false without running the recurrence. Throws std::domain_error for
// p < 2.
bool lucas_lehmer(unsigned p);

}  // namespace rcgap
