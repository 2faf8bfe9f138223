#pragma once

#include <string>

#include "rcgap/integer.hpp"

namespace rcgap {

enum class BudgetFamily {
  Constant,        // k
  Log,             // floor(d * log(n + 2))
  SqrtLog,         // floor(d * (sqrt(log n) + 1))
  LogLogOver,      // floor(d + loglog n / (2 log k))
  HalfLog3,        // floor(d + (1/2) logloglog n)
  ThirdLog4,       // floor(d + (1/3) loglogloglog n)
  LogCircledStar,  // max(1, floor(logcstar(n) / lambda))
};

// An ambiguity bound j: N -> N+, clamped to >= 1, logs base 2 with the
// global max(1,.) convention. Evaluation is polynomial in the value of n.
class AmbiguityBudget {
 public:
  static AmbiguityBudget constant(unsigned k);
  static AmbiguityBudget log(unsigned d);
  static AmbiguityBudget sqrt_log(unsigned d);
  static AmbiguityBudget loglog_over(unsigned d, double k);
  static AmbiguityBudget half_log3(unsigned d);
  static AmbiguityBudget third_log4(unsigned d);
  static AmbiguityBudget log_circled_star(unsigned lambda);

  // "const:5", "log:d=1", "loglogover:d=1,k=2", "lcstar:lambda=6".
  static AmbiguityBudget parse(const std::string& text);

  unsigned eval(const Integer& n) const;
  unsigned eval_u64(std::uint64_t n) const {
    return eval(Integer(static_cast<unsigned long>(n)));
  }

  BudgetFamily family() const { return family_; }
  unsigned d() const { return d_; }
  double k_param() const { return k_; }
  unsigned lambda_param() const { return lambda_; }
  std::string describe() const;

 private:
  AmbiguityBudget(BudgetFamily family, unsigned d, double k, unsigned lambda)
      : family_(family), d_(d), k_(k), lambda_(lambda) {}

  BudgetFamily family_;
  unsigned d_;
  double k_;
  unsigned lambda_;
};

}  // namespace rcgap
