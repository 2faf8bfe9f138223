#include "rcgap/constant_table.hpp"

#include <sstream>
#include <stdexcept>

#include "rcgap/star_functions.hpp"

namespace rcgap {

ConstantTable build_constant_table(const TargetSet& set, unsigned m, unsigned n0) {
  if (m < 1) throw std::domain_error("build_constant_table: m must be >= 1");
  ConstantTable table;
  table.set_description = set.description();
  table.n0 = n0;

  Integer c1 = set.smallest_element_with_min_length(n0);
  table.lambda = 4 + bit_length(c1);
  table.a.push_back(c1);
  table.b.push_back(0);
  table.c.push_back(c1);

  for (unsigned i = 2; i <= m; ++i) {
    Integer b_i = 0;
    for (unsigned l = 1; l < i; ++l) {
      b_i += table.c[l - 1] * binomial(i, l);
    }
    Integer a_i;
    try {
      a_i = set.least_element_geq(b_i);
    } catch (const GapCeilingError& e) {
      throw GapCeilingError("build_constant_table: at index " +
                            std::to_string(i) + ": " + e.what());
    }
    table.b.push_back(b_i);
    table.a.push_back(a_i);
    table.c.push_back(a_i - b_i);
  }
  return table;
}

Integer acceptance_value(const ConstantTable& table, unsigned k) {
  if (k > table.size()) {
    throw std::out_of_range("acceptance_value: k = " + std::to_string(k) +
                            " exceeds table size " + std::to_string(table.size()));
  }
  Integer sum = 0;
  for (unsigned l = 1; l <= k; ++l) {
    sum += table.c[l - 1] * binomial(k, l);
  }
  return sum;
}

LengthBoundReport verify_length_bounds(const ConstantTable& table,
                                       const GapFunction& f,
                                       const AmbiguityBudget& j,
                                       const Integer& n) {
  unsigned jn = j.eval(n);
  if (jn > table.size()) {
    throw std::out_of_range("verify_length_bounds: table has " +
                            std::to_string(table.size()) +
                            " entries but j(n) = " + std::to_string(jn));
  }
  LengthBoundReport report;
  report.budget_value = jn;

  unsigned c1_bits = bit_length(table.c[0]);
  for (unsigned l = 1; l <= jn; ++l) {
    report.max_c_bits = std::max(report.max_c_bits, bit_length(table.c[l - 1]));
  }

  TowerReal lambda(static_cast<double>(table.lambda));
  TowerReal bound;
  if (f.variant() == MetaVariant::Meta1) {
    report.variant = "meta1";
    bound = iterate_gap(f, jn, lambda).scaled(jn).plus(c1_bits);
  } else {
    report.variant = "meta2";
    bound = iterate_gap(f, jn, lambda.scaled(jn)).plus(c1_bits);
  }
  report.overall_bound = bound.str();
  report.overall_ok =
      TowerReal(static_cast<double>(report.max_c_bits)) <= bound.plus(1e-9);

  bool steps_ok = true;
  for (unsigned i = 2; i <= jn; ++i) {
    LengthBoundStep step;
    step.i = i;
    step.c_bits = bit_length(table.c[i - 1]);
    step.b_bits = bit_length(table.b[i - 1]);
    TowerReal fb = f.apply(TowerReal(static_cast<double>(step.b_bits)));
    step.step_bound = fb.to_double();
    step.ok = TowerReal(static_cast<double>(step.c_bits)) <= fb.plus(1e-9);
    steps_ok = steps_ok && step.ok;
    report.steps.push_back(step);
  }
  report.pass = report.overall_ok && steps_ok;
  return report;
}

}  // namespace rcgap
