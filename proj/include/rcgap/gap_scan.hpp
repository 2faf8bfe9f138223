#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcgap/gap_function.hpp"
#include "rcgap/integer.hpp"
#include "rcgap/target_set.hpp"

namespace rcgap {

struct SuccessorEntry {
  Integer element;
  Integer successor;
  unsigned length = 0;
  unsigned successor_length = 0;
};

// (m, m', |m|, |m'|) for every member m with |m| <= max_length. Walks the
// set member by member, so it is meant for desk-scale windows.
std::vector<SuccessorEntry> successor_length_profile(const TargetSet& set,
                                                     unsigned max_length);

struct NongappyViolation {
  Integer element;
  unsigned length = 0;
  double required_bound = 0;  // F(|m|)
  unsigned actual_next_length = 0;
  std::string note;  // set on ceiling errors
};

struct NongappyReport {
  std::string set_description;
  std::string gap_function;
  unsigned n0 = 0;
  unsigned max_length = 0;
  bool pass = false;
  // Boundary pairs checked: the last member of each occupied length and its
  // successor. Members at lengths below n0 appear with checked = false.
  struct WitnessPair {
    Integer element;
    Integer successor;
    unsigned length = 0;
    unsigned successor_length = 0;
    double bound = 0;
    bool checked = false;
    bool ok = false;
  };
  std::vector<WitnessPair> witnesses;
  std::optional<NongappyViolation> first_violation;
};

// Checks that every member m with n0 <= |m| <= max_length has a successor
// m' > m with |m'| <= F(|m|). Within one bit-length the successor keeps the
// length, so only the largest member of each occupied length can violate the
// bound; those boundary pairs are what gets scanned (this needs F(L) >= L on
// the scanned lengths, which every family here satisfies at its n0).
NongappyReport verify_nongappy(const TargetSet& set, const GapFunction& f,
                               unsigned max_length);

struct MersenneDensityReport {
  std::vector<unsigned> exponents;  // |M_i|, found by Lucas-Lehmer
  struct Row {
    unsigned length = 0;      // |M_i|
    unsigned mu = 0;          // mu(|M_i|) = i
    double reference = 0;     // e^gamma * log2(length)
  };
  std::vector<Row> mu_table;
  std::vector<double> successor_ratios;  // log|M_{i+1}| / log|M_i|
  bool truncated = false;
  unsigned exponent_ceiling = 0;
};

// Empirical density data for the Mersenne primes: the first `count`
// exponents, the counting function mu against the e^gamma log n curve, and
// consecutive length ratios. No verdict; the asymptotics are conjectural.
MersenneDensityReport mersenne_density_report(unsigned count,
                                              unsigned exponent_ceiling = 10000);

}  // namespace rcgap
