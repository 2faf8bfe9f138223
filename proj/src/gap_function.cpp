#include "rcgap/gap_function.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rcgap {

GapFunction GapFunction::add_const(unsigned c, unsigned n0) {
  return GapFunction(GapFamily::AddConst, c, n0, MetaVariant::Meta1);
}

GapFunction GapFunction::linear(unsigned k, unsigned n0) {
  if (k < 2) throw std::domain_error("linear gap function needs k >= 2");
  return GapFunction(GapFamily::Linear, k, n0, MetaVariant::Meta1);
}

GapFunction GapFunction::n_log_n(unsigned k, unsigned n0) {
  if (k < 1) throw std::domain_error("n log n gap function needs k >= 1");
  return GapFunction(GapFamily::NLogN, k, n0, MetaVariant::Meta2);
}

GapFunction GapFunction::power(double k, unsigned n0) {
  if (!(k > 1.0)) throw std::domain_error("power gap function needs real k > 1");
  if (n0 == 0) {
    double root = std::exp2(1.0 / (k - 1.0));
    n0 = static_cast<unsigned>(std::max(2.0, std::ceil(root)));
  }
  return GapFunction(GapFamily::Power, k, n0, MetaVariant::Meta2);
}

GapFunction GapFunction::n_pow_log_n(unsigned n0) {
  return GapFunction(GapFamily::NPowLogN, 0, n0, MetaVariant::Meta2);
}

GapFunction GapFunction::n_pow_log_pow_k(unsigned k, unsigned n0) {
  if (k < 1) throw std::domain_error("t^((log t)^k) gap function needs k >= 1");
  return GapFunction(GapFamily::NPowLogPowK, k, n0, MetaVariant::Meta2);
}

GapFunction GapFunction::exp2(unsigned n0) {
  return GapFunction(GapFamily::Exp2, 0, n0, MetaVariant::Meta2);
}

std::string GapFunction::describe() const {
  std::ostringstream os;
  switch (family_) {
    case GapFamily::AddConst: os << "addconst:c=" << static_cast<unsigned>(param_); break;
    case GapFamily::Linear: os << "linear:k=" << static_cast<unsigned>(param_); break;
    case GapFamily::NLogN: os << "nlogn:k=" << static_cast<unsigned>(param_); break;
    case GapFamily::Power: os << "power:k=" << param_; break;
    case GapFamily::NPowLogN: os << "npowlogn"; break;
    case GapFamily::NPowLogPowK: os << "npowlogpowk:k=" << static_cast<unsigned>(param_); break;
    case GapFamily::Exp2: os << "exp2"; break;
  }
  os << ",n0=" << n0_;
  return os.str();
}

TowerReal GapFunction::apply(const TowerReal& t) const {
  switch (family_) {
    case GapFamily::AddConst:
      return t.plus(param_);
    case GapFamily::Linear:
      return t.scaled(param_);
    case GapFamily::NLogN: {
      if (t.is_plain()) {
        double v = t.top();
        double lg = v <= 1.0 ? 0.0 : std::log2(v);
        double raw = param_ * v * lg;
        if (std::isfinite(raw)) return TowerReal(raw);
      }
      // log2(k*t*log t) = log2 k + log2 t + log2 log2 t
      TowerReal lg = t.log2_clamped();
      TowerReal lglg = lg.log2_clamped();
      if (lg.is_plain() && lglg.is_plain())
        return TowerReal::tower(1, std::log2(param_) + lg.top() + lglg.top());
      return lg.exp2();  // towers swallow the k*log factor
    }
    case GapFamily::Power: {
      if (t.is_plain()) {
        double v = t.top();
        double raw = std::pow(v, param_);
        if (std::isfinite(raw)) return TowerReal(raw);
      }
      TowerReal lg = t.log2_clamped();
      return lg.scaled(param_).exp2();
    }
    case GapFamily::NPowLogN: {
      TowerReal lg = t.log2_clamped();
      if (lg.is_plain()) {
        double e = lg.top() * lg.top();
        if (e <= 900.0) return TowerReal(std::exp2(e));
        return TowerReal::tower(1, e);
      }
      // log2 F = (log2 t)^2 = 2^(2*log2 log2 t)
      return lg.log2_clamped().scaled(2.0).exp2().exp2();
    }
    case GapFamily::NPowLogPowK: {
      TowerReal lg = t.log2_clamped();
      if (lg.is_plain()) {
        double e = std::pow(lg.top(), param_ + 1.0);
        if (e <= 900.0) return TowerReal(std::exp2(e));
        if (std::isfinite(e)) return TowerReal::tower(1, e);
        return TowerReal::tower(2, (param_ + 1.0) * std::log2(lg.top()));
      }
      // log2 F = (log2 t)^(k+1)
      return lg.log2_clamped().scaled(param_ + 1.0).exp2().exp2();
    }
    case GapFamily::Exp2:
      return t.exp2();
  }
  throw std::logic_error("unreachable gap family");
}

namespace {

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("bad gap-function parameter: '" + item + "'");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

GapFunction GapFunction::parse(const std::string& text) {
  std::string name = text;
  std::map<std::string, double> params;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    params = parse_params(text.substr(colon + 1));
  }
  auto n0_or = [&](unsigned dflt) {
    auto it = params.find("n0");
    return it == params.end() ? dflt : static_cast<unsigned>(it->second);
  };
  auto k_param = [&]() {
    auto it = params.find("k");
    if (it == params.end()) throw std::domain_error(name + " needs k=...");
    return it->second;
  };
  if (name == "addconst") {
    auto it = params.find("c");
    if (it == params.end()) throw std::domain_error("addconst needs c=...");
    return add_const(static_cast<unsigned>(it->second), n0_or(1));
  }
  if (name == "linear") return linear(static_cast<unsigned>(k_param()), n0_or(2));
  if (name == "nlogn") return n_log_n(static_cast<unsigned>(k_param()), n0_or(4));
  if (name == "power") return power(k_param(), n0_or(0));
  if (name == "npowlogn") return n_pow_log_n(n0_or(4));
  if (name == "npowlogpowk")
    return n_pow_log_pow_k(static_cast<unsigned>(k_param()), n0_or(4));
  if (name == "exp2") return exp2(n0_or(2));
  throw std::domain_error("unknown gap-function family: '" + name + "'");
}

}  // namespace rcgap
