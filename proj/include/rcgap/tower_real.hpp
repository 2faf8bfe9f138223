#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rcgap {

// A nonnegative magnitude that may be far beyond double range. Represented
// as `top` with `height` stacked base-2 exponentials: value = 2^2^...^top.
// Once a value is in tower form its top exceeds 2^9, so one log2 peels one
// level exactly. Additive perturbations at tower scale are below double
// resolution and are dropped; the star functions and growth checks only ever
// compare such values against desk-scale quantities.
class TowerReal {
 public:
  TowerReal() = default;
  TowerReal(double v) : top_(v) {  // NOLINT: implicit by design
    if (!(v >= 0) || std::isnan(v))
      throw std::domain_error("TowerReal: value must be a nonnegative real");
    if (std::isinf(v))
      throw std::domain_error("TowerReal: value must be finite; use tower()");
  }

  static TowerReal tower(unsigned height, double top) {
    TowerReal r(top);
    r.height_ = height;
    r.normalize();
    return r;
  }

  // ^n 2, the power tower of n twos.
  static TowerReal power_tower_of_two(unsigned n) {
    if (n <= 4) {
      double v = 1.0;
      for (unsigned i = 0; i < n; ++i) v = std::exp2(v);
      return TowerReal(v);
    }
    return tower(n - 4, 65536.0);
  }

  unsigned height() const { return height_; }
  double top() const { return top_; }
  bool is_plain() const { return height_ == 0; }

  double to_double() const {
    return height_ == 0 ? top_ : std::numeric_limits<double>::infinity();
  }

  // log2(max(1, v)), the global log convention.
  TowerReal log2_clamped() const {
    if (height_ > 0) return tower(height_ - 1, top_);
    return TowerReal(top_ <= 1.0 ? 0.0 : std::log2(top_));
  }

  TowerReal exp2() const {
    if (height_ == 0 && top_ <= kCollapseLimit) return TowerReal(std::exp2(top_));
    return tower(height_ + 1, top_);
  }

  // c * v for a scale factor >= 1. Exact at plain magnitudes; at height one
  // the factor folds into the exponent; deeper towers absorb it.
  TowerReal scaled(double c) const {
    if (c < 1.0) throw std::domain_error("TowerReal::scaled: factor must be >= 1");
    if (height_ == 0) {
      double v = top_ * c;
      if (std::isfinite(v)) return TowerReal(v);
      return tower(1, std::log2(top_) + std::log2(c));
    }
    if (height_ == 1) return tower(1, top_ + std::log2(c));
    return *this;
  }

  // v + a for a >= 0; invisible at tower scale.
  TowerReal plus(double a) const {
    if (a < 0) throw std::domain_error("TowerReal::plus: addend must be >= 0");
    if (height_ == 0) {
      double v = top_ + a;
      if (std::isfinite(v)) return TowerReal(v);
      return tower(1, std::log2(top_) + 1.0);
    }
    return *this;
  }

  // -1, 0, +1 as v compares to rhs.
  int compare(const TowerReal& rhs) const {
    const TowerReal& a = *this;
    const TowerReal& b = rhs;
    if (a.height_ == 0 && b.height_ == 0) {
      if (a.top_ < b.top_) return -1;
      if (a.top_ > b.top_) return 1;
      return 0;
    }
    if (a.height_ > 0 && b.height_ > 0)
      return tower(a.height_ - 1, a.top_).compare(tower(b.height_ - 1, b.top_));
    if (a.height_ == 0) return -b.compare(a);
    // a is a tower, b is plain: a = 2^a' with a' = tower(height-1, top).
    if (b.top_ <= 1.0) return 1;
    return tower(a.height_ - 1, a.top_).compare(TowerReal(std::log2(b.top_)));
  }

  bool operator<(const TowerReal& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const TowerReal& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const TowerReal& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const TowerReal& rhs) const { return compare(rhs) >= 0; }
  bool operator==(const TowerReal& rhs) const { return compare(rhs) == 0; }

  std::string str() const {
    std::ostringstream os;
    for (unsigned i = 0; i < height_; ++i) os << "2^";
    os << top_;
    return os.str();
  }

 private:
  // Plain doubles hold anything up to 2^512; towers only ever have tops
  // beyond that, so representations are unambiguous.
  static constexpr double kCollapseLimit = 512.0;

  void normalize() {
    while (height_ > 0 && top_ <= kCollapseLimit) {
      top_ = std::exp2(top_);
      --height_;
    }
  }

  unsigned height_ = 0;
  double top_ = 0.0;
};

}  // namespace rcgap
