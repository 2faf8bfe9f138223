#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcgap/ambiguity_budget.hpp"
#include "rcgap/gap_function.hpp"
#include "rcgap/integer.hpp"
#include "rcgap/star_functions.hpp"
#include "rcgap/tower_real.hpp"

namespace rcgap {

// One metatheorem instantiation: gap function F, budget j, seed lambda, and
// the polynomial envelope alpha * n^beta its iterate must stay under.
struct TheoremCheckSpec {
  GapFunction f;
  AmbiguityBudget j;
  unsigned lambda = 6;
  MetaVariant variant = MetaVariant::Meta1;
  TowerReal alpha = 1.0;
  TowerReal beta = 1.0;
  std::vector<Integer> n_range;
  std::vector<double> t_range;
  std::vector<unsigned> c_range;

  TheoremCheckSpec(GapFunction f_, AmbiguityBudget j_)
      : f(std::move(f_)), j(std::move(j_)), variant(f.variant()) {}
};

// Default grids: t on the geometric grid n0 * 2^(i/4) capped at t_max,
// c in 1..64, n dense over 2..64 then doubling up to n_max with the budget's
// transition points added (so the bound is probed right where j(n) jumps).
std::vector<double> default_t_range(const GapFunction& f, double t_max = 1e6);
std::vector<unsigned> default_c_range(unsigned c_max = 64);
std::vector<Integer> default_n_range(const AmbiguityBudget& j, const Integer& n_min,
                                     const Integer& n_max);

// Closed-form envelope (alpha, beta) from the containment-theorem proofs for
// the family/budget pairs they instantiate; callers may override.
struct Envelope {
  TowerReal alpha;
  TowerReal beta;
};
Envelope default_envelope(const GapFunction& f, const AmbiguityBudget& j,
                          unsigned lambda);

struct MetaConditionReport {
  std::string gap_function;
  std::string variant;
  bool nondecreasing = true;
  bool growth_floor = true;  // F(t) >= t + 2 on the grid
  bool scaling = true;       // the variant's inequality on the grid
  bool scaling_always_equal = true;
  struct Counterexample {
    std::string condition;  // "nondecreasing" | "growth-floor" | "scaling"
    double t = 0;
    unsigned c = 0;
    std::string lhs, rhs;
  };
  std::vector<Counterexample> counterexamples;
  bool pass = false;
};

// Samples the metatheorem conditions: monotonicity, F(t) >= t+2, and
// c*F(t) >= F(c*t) (meta1) or <= (meta2). Violations are report content.
MetaConditionReport check_meta_conditions(const GapFunction& f,
                                          const TheoremCheckSpec& spec);

struct GrowthBoundReport {
  std::string gap_function;
  std::string budget;
  std::string variant;
  unsigned lambda = 0;
  std::string alpha, beta;
  struct Row {
    Integer n;
    unsigned j_n = 0;
    std::string iterate;  // F^[j(n)](lambda) or F^[j(n)](j(n) lambda)
    std::string bound;    // alpha * n^beta
    bool ok = false;
    std::optional<std::string> error;
  };
  std::vector<Row> rows;
  double max_ratio = 0;  // iterate / bound over rows where both are plain
  unsigned violations = 0;
  unsigned inconclusive = 0;
  bool pass = false;
};

GrowthBoundReport check_growth_bound(const TheoremCheckSpec& spec);

struct IlogBoundsReport {
  struct Row {
    std::string alpha;
    unsigned log_star = 0;
    unsigned log_circled_star = 0;
    long lower = 0;  // log*(a) - log*(log*(a)+1) - 1
    bool ok = false;
  };
  std::vector<Row> rows;
  unsigned violations = 0;
  bool pass = false;
};

// Exact integer check of the two-sided bound between log* and logcstar.
IlogBoundsReport check_ilog_bounds(const std::vector<TowerReal>& alphas);

struct SeparationReport {
  unsigned n = 0;
  unsigned log_star_value = 0;       // log*(^n 2) = n
  unsigned log_circled_star_value = 0;
  long lhs = 0;                      // their difference
  double s_value = 0;                // s_frak(n)
  long floor_s = 0;
  double lemma_rhs = 0;              // (s - floor s) + slog2(s)
  double theorem_bound = 0;          // slog2(2n/3)
  bool lemma_consistent = false;     // |lhs - lemma_rhs| <= 1e-6
  bool floor_consistent = false;     // logcstar(^n 2) == floor(s(n))
  bool bound_holds = false;          // lhs >= theorem_bound
  bool pass = false;
};

// The infinitely-often separation at height n: lhs computed by direct tower
// arithmetic, the lemma's right side via s_frak and slog2, and the bound
// slog2(2n/3). Throws std::domain_error for n < 2.
SeparationReport check_separation(unsigned n);

}  // namespace rcgap
