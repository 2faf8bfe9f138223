#include "rcgap/gap_scan.hpp"

#include <cmath>
#include <stdexcept>

#include "rcgap/primality.hpp"

namespace rcgap {

std::vector<SuccessorEntry> successor_length_profile(const TargetSet& set,
                                                     unsigned max_length) {
  if (max_length < 1)
    throw std::domain_error("successor_length_profile: max_length must be >= 1");
  std::vector<SuccessorEntry> out;
  Integer m = set.least_element_geq(1);
  while (bit_length(m) <= max_length) {
    Integer succ = set.least_element_geq(m + 1);
    out.push_back({m, succ, bit_length(m), bit_length(succ)});
    m = succ;
  }
  return out;
}

NongappyReport verify_nongappy(const TargetSet& set, const GapFunction& f,
                               unsigned max_length) {
  if (max_length < f.n0())
    throw std::domain_error("verify_nongappy: max_length below the gap function's n0");
  NongappyReport report;
  report.set_description = set.description();
  report.gap_function = f.describe();
  report.n0 = f.n0();
  report.max_length = max_length;
  report.pass = true;

  Integer first = set.least_element_geq(1);
  unsigned length = bit_length(first);
  while (length <= max_length) {
    // The largest member of this length and the first member beyond it.
    NongappyReport::WitnessPair pair;
    pair.length = length;
    pair.element = set.largest_element_below(pow2(length));
    double bound = f.apply(static_cast<double>(length));
    pair.bound = bound;
    pair.checked = length >= f.n0();
    Integer succ;
    try {
      succ = set.least_element_geq(pow2(length));
    } catch (const GapCeilingError& e) {
      pair.ok = false;
      report.witnesses.push_back(pair);
      if (pair.checked) {
        report.pass = false;
        if (!report.first_violation) {
          report.first_violation = NongappyViolation{
              pair.element, length, bound, 0, std::string("gap exceeds ceiling: ") + e.what()};
        }
      }
      return report;
    }
    pair.successor = succ;
    pair.successor_length = bit_length(succ);
    pair.ok = !pair.checked ||
              static_cast<double>(pair.successor_length) <= bound + 1e-9;
    report.witnesses.push_back(pair);
    if (pair.checked && !pair.ok) {
      report.pass = false;
      if (!report.first_violation) {
        report.first_violation = NongappyViolation{pair.element, length, bound,
                                                   pair.successor_length, ""};
      }
    }
    length = pair.successor_length;
  }
  return report;
}

MersenneDensityReport mersenne_density_report(unsigned count,
                                              unsigned exponent_ceiling) {
  if (count < 2)
    throw std::domain_error("mersenne_density_report: count must be >= 2");
  MersenneDensityReport report;
  report.exponent_ceiling = exponent_ceiling;

  TargetSet mersenne = TargetSet::mersenne_primes();
  mersenne.set_mersenne_exponent_ceiling(exponent_ceiling);
  unsigned scan_hi = 4;
  while (report.exponents.size() < count && scan_hi < exponent_ceiling) {
    scan_hi = std::min(exponent_ceiling, scan_hi * 2);
    report.exponents = mersenne.mersenne_exponents_up_to(scan_hi);
  }
  if (report.exponents.size() > count) report.exponents.resize(count);
  report.truncated = report.exponents.size() < count;

  // Euler-Mascheroni constant; the conjectured density curve is e^gamma * log2(n).
  constexpr double kEGamma = 1.78107241799019798;
  for (unsigned i = 0; i < report.exponents.size(); ++i) {
    MersenneDensityReport::Row row;
    row.length = report.exponents[i];
    row.mu = i + 1;  // one Mersenne prime per length
    row.reference = kEGamma * std::log2(static_cast<double>(row.length));
    report.mu_table.push_back(row);
  }
  for (std::size_t i = 0; i + 1 < report.exponents.size(); ++i) {
    report.successor_ratios.push_back(
        std::log2(static_cast<double>(report.exponents[i + 1])) /
        std::log2(static_cast<double>(report.exponents[i])));
  }
  return report;
}

}  // namespace rcgap
