#pragma once

#include <string>
#include <vector>

#include "rcgap/ambiguity_budget.hpp"
#include "rcgap/gap_function.hpp"
#include "rcgap/integer.hpp"
#include "rcgap/target_set.hpp"

namespace rcgap {

// The sequences of the iterative constant-setting construction over a target
// set S:
//   c_1 = smallest element of S with |c_1| >= n0,
//   b_i = sum over 1 <= l <= i-1 of c_l * C(i, l),
//   a_i = least element of S with a_i >= b_i,  c_i = a_i - b_i.
// All arithmetic exact; a_1 = c_1 by convention and b_1 = 0.
struct ConstantTable {
  std::string set_description;
  unsigned n0 = 0;
  unsigned lambda = 0;  // 4 + |c_1|
  std::vector<Integer> a;
  std::vector<Integer> b;  // b[0] is the unused b_1 slot, kept 0
  std::vector<Integer> c;

  unsigned size() const { return static_cast<unsigned>(c.size()); }
};

ConstantTable build_constant_table(const TargetSet& set, unsigned m, unsigned n0);

// Sum over 1 <= l <= k of c_l * C(k, l): 0 for k = 0, c_1 for k = 1, a_k for
// k >= 2. Throws std::out_of_range for k > table size.
Integer acceptance_value(const ConstantTable& table, unsigned k);

struct LengthBoundStep {
  unsigned i = 0;
  unsigned c_bits = 0;
  unsigned b_bits = 0;
  double step_bound = 0;  // F(|b_i|)
  bool ok = false;
};

struct LengthBoundReport {
  unsigned budget_value = 0;   // j(n)
  unsigned max_c_bits = 0;     // max over 1 <= l <= j(n) of |c_l|
  std::string variant;         // "meta1" or "meta2"
  std::string overall_bound;   // j(n)*F^[j(n)](lambda) + |c_1|, or meta2 form
  bool overall_ok = false;
  std::vector<LengthBoundStep> steps;
  bool pass = false;
};

// Checks the proof's length-growth bounds at input length n: the aggregate
// bound on max |c_l| for the gap function's meta variant, and the per-step
// bound |c_i| <= F(|b_i|) for 2 <= i <= j(n). Throws std::out_of_range when
// the table is shorter than j(n).
LengthBoundReport verify_length_bounds(const ConstantTable& table,
                                       const GapFunction& f,
                                       const AmbiguityBudget& j,
                                       const Integer& n);

}  // namespace rcgap
