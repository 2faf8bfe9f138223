#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "rcgap/errors.hpp"
#include "rcgap/integer.hpp"

namespace rcgap {

enum class SetKind {
  Primes,
  MersennePrimes,
  Composites,
  PowersOfTwo,
  OddNumbers,
  FileBacked,
};

std::string set_kind_name(SetKind kind);

struct MembershipCheck {
  bool member = false;
  // False when the verdict relies on Baillie-PSW (values >= 2^64 in the
  // prime-backed kinds). Lucas-Lehmer and everything below 2^64 is exact.
  bool probabilistic = false;
};

// An enumerable subset of the positive integers with the access pattern
// P-printability guarantees: prefix enumeration by bit-length, least element
// above a bound, membership. Immutable after construction apart from an
// internal enumeration cache that is safe for concurrent readers.
class TargetSet {
 public:
  static TargetSet primes() { return TargetSet(SetKind::Primes); }
  static TargetSet mersenne_primes() { return TargetSet(SetKind::MersennePrimes); }
  static TargetSet composites() { return TargetSet(SetKind::Composites); }
  static TargetSet powers_of_two() { return TargetSet(SetKind::PowersOfTwo); }
  static TargetSet odd_numbers() { return TargetSet(SetKind::OddNumbers); }
  static TargetSet builtin(SetKind kind);

  // One nonnegative decimal integer per line; blank lines and '#' comments
  // are ignored; the result is sorted and deduplicated. A 0 entry is a
  // domain error (S must be a subset of the positive integers).
  static TargetSet from_file(const std::filesystem::path& path);

  TargetSet(const TargetSet& other);
  TargetSet& operator=(const TargetSet&) = delete;

  SetKind kind() const { return kind_; }
  std::string description() const;

  // Members whose binary representation has at most n bits, increasing.
  std::vector<Integer> elements_up_to_length(unsigned n) const;

  // min{s in S | s >= bound}. Throws GapCeilingError when the search passes
  // the ceiling (value-length ceiling for scanned kinds, exponent ceiling
  // for Mersenne primes, end of list for file-backed sets).
  Integer least_element_geq(const Integer& bound) const;

  // max{s in S | s < bound}; throws std::domain_error when no member is
  // below the bound.
  Integer largest_element_below(const Integer& bound) const;

  // min{s in S | bit_length(s) >= n0}; used to seed constant tables.
  Integer smallest_element_with_min_length(unsigned n0) const;

  MembershipCheck check_member(const Integer& v) const;
  bool is_member(const Integer& v) const { return check_member(v).member; }

  // Caps. Zero keeps the defaults: successor searches give up once the
  // candidate length exceeds bit_length(bound) + 64, the Mersenne exponent
  // scan stops at 10000, and prefix enumeration refuses lengths above 28.
  void set_mersenne_exponent_ceiling(unsigned p) { mersenne_exp_ceiling_ = p; }
  unsigned mersenne_exponent_ceiling() const { return mersenne_exp_ceiling_; }
  void set_enumeration_length_cap(unsigned n) { enum_len_cap_ = n; }

  // Mersenne prime exponents p <= max_exponent, via Lucas-Lehmer (cached).
  std::vector<unsigned> mersenne_exponents_up_to(unsigned max_exponent) const;

 private:
  explicit TargetSet(SetKind kind) : kind_(kind) {}

  SetKind kind_;
  std::string path_;
  std::vector<Integer> file_elems_;
  unsigned mersenne_exp_ceiling_ = 10000;
  unsigned enum_len_cap_ = 28;

  mutable std::mutex cache_mu_;
  mutable std::vector<unsigned> mersenne_exps_;  // LL-verified exponents
  mutable unsigned mersenne_scan_hi_ = 1;        // all p <= this were tested
};

// Free-function spellings for the operation names used throughout.
TargetSet load_target_set(const std::filesystem::path& path);

}  // namespace rcgap
