#pragma once

#include <string>

#include "rcgap/tower_real.hpp"

namespace rcgap {

enum class GapFamily {
  AddConst,     // t + c
  Linear,       // k*t, k >= 2
  NLogN,        // k*t*log t, k >= 1
  Power,        // t^k, real k > 1
  NPowLogN,     // t^(log t)
  NPowLogPowK,  // t^((log t)^k), k >= 1
  Exp2,         // 2^t
};

// Which metatheorem scaling condition the family satisfies:
// Meta1: c*F(t) >= F(c*t); Meta2: c*F(t) <= F(c*t).
enum class MetaVariant { Meta1, Meta2 };

// A gap bound F: R+ -> R+ from one of the nongappiness families, with its
// validity threshold n0. Every inner log is log2(max(1,.)).
class GapFunction {
 public:
  static GapFunction add_const(unsigned c, unsigned n0 = 1);
  static GapFunction linear(unsigned k, unsigned n0 = 2);
  static GapFunction n_log_n(unsigned k, unsigned n0 = 4);
  static GapFunction power(double k, unsigned n0 = 0);  // 0: max(2, ceil(2^(1/(k-1))))
  static GapFunction n_pow_log_n(unsigned n0 = 4);
  static GapFunction n_pow_log_pow_k(unsigned k, unsigned n0 = 4);
  static GapFunction exp2(unsigned n0 = 2);

  // "linear:k=2", "power:k=1.5", "exp2", optionally ",n0=4".
  static GapFunction parse(const std::string& text);

  GapFamily family() const { return family_; }
  double param() const { return param_; }
  unsigned n0() const { return n0_; }
  MetaVariant variant() const { return variant_; }
  std::string describe() const;

  TowerReal apply(const TowerReal& t) const;
  double apply(double t) const { return apply(TowerReal(t)).to_double(); }

 private:
  GapFunction(GapFamily family, double param, unsigned n0, MetaVariant variant)
      : family_(family), param_(param), n0_(n0), variant_(variant) {}

  GapFamily family_;
  double param_;
  unsigned n0_;
  MetaVariant variant_;
};

}  // namespace rcgap
