#pragma once

#include "rcgap/gap_function.hpp"
#include "rcgap/integer.hpp"
#include "rcgap/tower_real.hpp"

namespace rcgap {

// Smallest k with log2^[k](alpha) <= 1; log_star(0) = 0.
unsigned log_star(const TowerReal& alpha);

// Largest k with log2^[k](alpha) >= k; 0 for alpha <= 1.
unsigned log_circled_star(const TowerReal& alpha);

// Real-height tetration of 2 with the linear segment tet(h) = h + 1 on
// (-1, 0]. Increasing and surjective from [-1, inf) onto [0, inf). Overflows
// to +inf for heights beyond ~4.9; use power_tower_of_two / tetration2_exact
// for natural heights above that.
double tetration2(double h);

// Exact ^n 2 as an integer; throws BitCapError when the result needs more
// than bit_cap bits (default 2^20, which admits ^5 2 but not ^6 2).
Integer tetration2_exact(unsigned n, std::size_t bit_cap = std::size_t{1} << 20);

// Superlogarithm: the exact inverse of the extended tetration above.
// slog2(^n 2) = n; the fractional segment is slog2(y) = y - 1 on (0, 1]
// heights peeled by repeated log2.
double slog2(double y);
double slog2(const TowerReal& y);

// Inverse of t + slog2(t) on [1, inf), by bisection to 1e-9.
double s_frak(double n);

// F^[j](seed), heights capped (default 64 stacked exponentials).
TowerReal iterate_gap(const GapFunction& f, unsigned j, const TowerReal& seed,
                      unsigned max_height = 64);

}  // namespace rcgap
