#include "rcgap/star_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "rcgap/errors.hpp"

namespace rcgap {

unsigned log_star(const TowerReal& alpha) {
  TowerReal v = alpha;
  unsigned k = 0;
  while (v > TowerReal(1.0)) {
    v = v.log2_clamped();
    ++k;
  }
  return k;
}

unsigned log_circled_star(const TowerReal& alpha) {
  // Once log^[k] < k the iterates stay below, so the first failure decides.
  TowerReal v = alpha;
  unsigned best = 0;
  for (unsigned k = 1;; ++k) {
    v = v.log2_clamped();
    if (v >= TowerReal(static_cast<double>(k))) {
      best = k;
    } else {
      break;
    }
  }
  return best;
}

double tetration2(double h) {
  if (std::isnan(h) || h < -1.0)
    throw std::domain_error("tetration2: height must be >= -1");
  if (h <= 0.0) return h + 1.0;
  double levels = std::ceil(h);
  double frac_height = h - levels;  // in (-1, 0]
  double v = frac_height + 1.0;
  for (double i = 0; i < levels; ++i) {
    v = std::exp2(v);
    if (std::isinf(v)) return v;
  }
  return v;
}

Integer tetration2_exact(unsigned n, std::size_t bit_cap) {
  Integer v = 1;  // ^0 2
  for (unsigned i = 0; i < n; ++i) {
    // 2^v has v + 1 bits.
    if (bit_length(v) > 64 || to_u64(v) + 1 > bit_cap) {
      throw BitCapError("tetration2_exact: ^" + std::to_string(n) +
                        " 2 exceeds the bit cap " + std::to_string(bit_cap));
    }
    v = pow2(static_cast<unsigned>(to_u64(v)));
  }
  return v;
}

double slog2(double y) {
  if (std::isnan(y) || y < 1.0)
    throw std::domain_error("slog2: argument must be >= 1");
  unsigned height = 0;
  while (y > 1.0) {
    y = std::log2(y);
    ++height;
  }
  return height + (y - 1.0);
}

double slog2(const TowerReal& y) {
  if (y.is_plain()) return slog2(y.top());
  return y.height() + slog2(y.top());
}

double s_frak(double n) {
  if (std::isnan(n) || n < 1.0)
    throw std::domain_error("s_frak: argument must be >= 1");
  double lo = 1.0, hi = n;
  // g(t) = t + slog2(t) - n; g(1) <= 0 <= g(n).
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid + slog2(mid) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

TowerReal iterate_gap(const GapFunction& f, unsigned j, const TowerReal& seed,
                      unsigned max_height) {
  TowerReal v = seed;
  for (unsigned i = 0; i < j; ++i) {
    v = f.apply(v);
    if (v.height() > max_height) {
      throw OverflowError("iterate_gap: value escaped the log-domain cap (" +
                          std::to_string(max_height) +
                          " stacked exponentials) at step " +
                          std::to_string(i + 1));
    }
  }
  return v;
}

}  // namespace rcgap
