#include "rcgap/theorem_checks.hpp"

#include <algorithm>
#include <cmath>

#include "rcgap/errors.hpp"

namespace rcgap {

namespace {

constexpr double kTol = 1e-9;

// a >= b - tol; exact tower comparison once either side leaves double range
// (the slack there dwarfs any representable tolerance).
bool geq_tol(const TowerReal& a, const TowerReal& b) {
  if (a.is_plain() && b.is_plain()) return a.top() >= b.top() - kTol;
  return a.compare(b) >= 0;
}

bool leq_tol(const TowerReal& a, const TowerReal& b) { return geq_tol(b, a); }

bool eq_tol(const TowerReal& a, const TowerReal& b) {
  if (a.is_plain() && b.is_plain()) return std::abs(a.top() - b.top()) <= kTol;
  return a.compare(b) == 0;
}

double log2c(double v) { return v <= 1.0 ? 0.0 : std::log2(v); }

// alpha * n^beta, compared in the exponent once anything leaves double range.
TowerReal envelope_value(const TowerReal& alpha, const TowerReal& beta, double n) {
  double lg_n = log2c(n);
  if (alpha.is_plain() && beta.is_plain()) {
    double lg_bound = log2c(alpha.top()) + beta.top() * lg_n;
    if (lg_bound <= 900.0) return TowerReal(alpha.top() * std::pow(n, beta.top()));
    return TowerReal::tower(1, lg_bound);
  }
  TowerReal beta_term = lg_n >= 1.0 ? beta.scaled(lg_n) : beta;
  TowerReal lg_alpha = alpha.log2_clamped();
  // At tower scale the sum is dominated by the larger exponent.
  TowerReal lg_bound = beta_term >= lg_alpha ? beta_term : lg_alpha;
  return lg_bound.exp2();
}

}  // namespace

std::vector<double> default_t_range(const GapFunction& f, double t_max) {
  std::vector<double> out;
  for (unsigned i = 0;; ++i) {
    double t = f.n0() * std::exp2(i / 4.0);
    if (t > t_max) break;
    out.push_back(t);
  }
  if (out.empty()) out.push_back(f.n0());
  return out;
}

std::vector<unsigned> default_c_range(unsigned c_max) {
  std::vector<unsigned> out;
  for (unsigned c = 1; c <= c_max; ++c) out.push_back(c);
  return out;
}

std::vector<Integer> default_n_range(const AmbiguityBudget& j, const Integer& n_min,
                                     const Integer& n_max) {
  std::vector<Integer> out;
  for (Integer n = n_min; n <= n_max && n <= 64; n += 1) out.push_back(n);
  for (Integer n = 128; n <= n_max; n *= 2) {
    if (n >= n_min) out.push_back(n);
  }
  if (out.empty() || out.back() != n_max) out.push_back(n_max);

  // Probe right where the budget steps: for each value the budget reaches,
  // binary-search the first n attaining it and add its neighborhood.
  unsigned j_lo = j.eval(n_min), j_hi = j.eval(n_max);
  for (unsigned target = j_lo + 1; target <= j_hi; ++target) {
    Integer lo = n_min, hi = n_max;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (j.eval(mid) >= target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    for (Integer n = lo - 1; n <= lo + 1; n += 1) {
      if (n >= n_min && n <= n_max) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Envelope default_envelope(const GapFunction& f, const AmbiguityBudget& j,
                          unsigned lambda) {
  double d = j.d();
  switch (f.family()) {
    case GapFamily::Linear:
      if (j.family() == BudgetFamily::Log) {
        // least integer greater than 2d log k + log lambda
        double x = 2.0 * d * std::log2(f.param()) + std::log2(double(lambda));
        TowerReal beta(std::floor(x) + 1.0);
        return {TowerReal(1.0), beta};
      }
      break;
    case GapFamily::Power:
      if (j.family() == BudgetFamily::LogLogOver) {
        double lg_beta = 2.0 * d * std::log2(f.param());
        TowerReal beta = TowerReal(lg_beta).exp2();
        return {beta, beta};
      }
      break;
    case GapFamily::NLogN:
      if (j.family() == BudgetFamily::SqrtLog) {
        double k = f.param();
        double v = d + d * std::log2(k) + d * lambda + 3.0 * d * d * k * lambda;
        return {TowerReal(v), TowerReal(v)};
      }
      break;
    case GapFamily::NPowLogN:
      if (j.family() == BudgetFamily::HalfLog3) {
        TowerReal beta = TowerReal(2.0 * d).exp2().exp2();
        return {beta, beta};
      }
      break;
    case GapFamily::NPowLogPowK:
      if (j.family() == BudgetFamily::ThirdLog4) {
        double x = 3.0 * d + std::log2(f.param()) + lambda;
        TowerReal beta = TowerReal(x).exp2().exp2().exp2();
        return {beta, beta};
      }
      break;
    case GapFamily::Exp2:
      if (j.family() == BudgetFamily::LogCircledStar) {
        return {TowerReal(double(lambda)).exp2(), TowerReal(1.0)};
      }
      break;
    default:
      break;
  }
  return {TowerReal(1.0), TowerReal(1.0)};
}

MetaConditionReport check_meta_conditions(const GapFunction& f,
                                          const TheoremCheckSpec& spec) {
  MetaConditionReport report;
  report.gap_function = f.describe();
  report.variant = spec.variant == MetaVariant::Meta1 ? "meta1" : "meta2";
  const std::vector<double>& ts =
      spec.t_range.empty() ? default_t_range(f) : spec.t_range;
  const std::vector<unsigned>& cs =
      spec.c_range.empty() ? default_c_range() : spec.c_range;

  TowerReal prev;
  bool have_prev = false;
  for (double t : ts) {
    TowerReal ft = f.apply(TowerReal(t));
    if (have_prev && !geq_tol(ft, prev)) {
      report.nondecreasing = false;
      report.counterexamples.push_back(
          {"nondecreasing", t, 0, ft.str(), prev.str()});
    }
    prev = ft;
    have_prev = true;

    if (!geq_tol(ft, TowerReal(t + 2.0))) {
      report.growth_floor = false;
      report.counterexamples.push_back(
          {"growth-floor", t, 0, ft.str(), TowerReal(t + 2.0).str()});
    }

    for (unsigned c : cs) {
      TowerReal lhs = ft.scaled(c);
      TowerReal rhs = f.apply(TowerReal(t * c));
      bool ok = spec.variant == MetaVariant::Meta1 ? geq_tol(lhs, rhs)
                                                   : leq_tol(lhs, rhs);
      if (!ok) {
        report.scaling = false;
        report.counterexamples.push_back({"scaling", t, c, lhs.str(), rhs.str()});
      }
      if (!eq_tol(lhs, rhs)) report.scaling_always_equal = false;
    }
  }
  report.pass = report.nondecreasing && report.growth_floor && report.scaling;
  return report;
}

GrowthBoundReport check_growth_bound(const TheoremCheckSpec& spec) {
  GrowthBoundReport report;
  report.gap_function = spec.f.describe();
  report.budget = spec.j.describe();
  report.variant = spec.variant == MetaVariant::Meta1 ? "meta1" : "meta2";
  report.lambda = spec.lambda;
  report.alpha = spec.alpha.str();
  report.beta = spec.beta.str();

  std::vector<Integer> n_range = spec.n_range;
  if (n_range.empty()) n_range = default_n_range(spec.j, 2, 1000000);
  for (const Integer& n : n_range) {
    GrowthBoundReport::Row row;
    row.n = n;
    row.j_n = spec.j.eval(n);
    TowerReal seed = spec.variant == MetaVariant::Meta1
                         ? TowerReal(double(spec.lambda))
                         : TowerReal(double(spec.lambda)).scaled(row.j_n);
    double nd = mpz_get_d(n.get_mpz_t());
    TowerReal bound = envelope_value(spec.alpha, spec.beta, nd);
    row.bound = bound.str();
    try {
      TowerReal iterate = iterate_gap(spec.f, row.j_n, seed);
      row.iterate = iterate.str();
      row.ok = leq_tol(iterate, bound);
      if (!row.ok) ++report.violations;
      if (iterate.is_plain() && bound.is_plain() && bound.top() > 0) {
        report.max_ratio = std::max(report.max_ratio, iterate.top() / bound.top());
      }
    } catch (const OverflowError& e) {
      row.error = e.what();
      ++report.inconclusive;
    }
    report.rows.push_back(std::move(row));
  }
  report.pass = report.violations == 0 && report.inconclusive == 0;
  return report;
}

IlogBoundsReport check_ilog_bounds(const std::vector<TowerReal>& alphas) {
  IlogBoundsReport report;
  for (const TowerReal& alpha : alphas) {
    IlogBoundsReport::Row row;
    row.alpha = alpha.str();
    row.log_star = log_star(alpha);
    row.log_circled_star = log_circled_star(alpha);
    row.lower = static_cast<long>(row.log_star) -
                static_cast<long>(log_star(TowerReal(row.log_star + 1.0))) - 1;
    row.ok = row.lower <= static_cast<long>(row.log_circled_star) &&
             row.log_circled_star <= row.log_star;
    if (!row.ok) ++report.violations;
    report.rows.push_back(std::move(row));
  }
  report.pass = report.violations == 0;
  return report;
}

SeparationReport check_separation(unsigned n) {
  if (n < 2)
    throw std::domain_error("check_separation: n must be >= 2 (slog(2n/3) needs 2n/3 >= 1)");
  SeparationReport report;
  report.n = n;

  TowerReal tower_n = TowerReal::power_tower_of_two(n);
  report.log_star_value = log_star(tower_n);
  report.log_circled_star_value = log_circled_star(tower_n);
  report.lhs = static_cast<long>(report.log_star_value) -
               static_cast<long>(report.log_circled_star_value);

  report.s_value = s_frak(static_cast<double>(n));
  // floor(s(n)) through the integer characterization max{k : k + slog k <= n},
  // immune to bisection landing a hair under an integer boundary.
  long floor_s = 1;
  for (long k = 1; k <= static_cast<long>(n); ++k) {
    if (k + slog2(static_cast<double>(k)) <= n + 1e-9) floor_s = k;
  }
  report.floor_s = floor_s;
  report.lemma_rhs = (report.s_value - floor_s) + slog2(report.s_value);
  report.theorem_bound = slog2(2.0 * n / 3.0);

  report.lemma_consistent = std::abs(report.lhs - report.lemma_rhs) <= 1e-6;
  report.floor_consistent =
      static_cast<long>(report.log_circled_star_value) == floor_s;
  report.bound_holds = report.lhs >= report.theorem_bound - kTol;
  report.pass =
      report.lemma_consistent && report.floor_consistent && report.bound_holds;
  return report;
}

}  // namespace rcgap
