#include "rcgap/ambiguity_budget.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rcgap/star_functions.hpp"

namespace rcgap {

namespace {

double log2c(double v) { return v <= 1.0 ? 0.0 : std::log2(v); }

}  // namespace

AmbiguityBudget AmbiguityBudget::constant(unsigned k) {
  if (k < 1) throw std::domain_error("constant budget needs k >= 1");
  return AmbiguityBudget(BudgetFamily::Constant, k, 0, 0);
}

AmbiguityBudget AmbiguityBudget::log(unsigned d) {
  if (d < 1) throw std::domain_error("log budget needs d >= 1");
  return AmbiguityBudget(BudgetFamily::Log, d, 0, 0);
}

AmbiguityBudget AmbiguityBudget::sqrt_log(unsigned d) {
  if (d < 1) throw std::domain_error("sqrt-log budget needs d >= 1");
  return AmbiguityBudget(BudgetFamily::SqrtLog, d, 0, 0);
}

AmbiguityBudget AmbiguityBudget::loglog_over(unsigned d, double k) {
  if (!(k > 1.0)) throw std::domain_error("loglog-over budget needs k > 1");
  return AmbiguityBudget(BudgetFamily::LogLogOver, d, k, 0);
}

AmbiguityBudget AmbiguityBudget::half_log3(unsigned d) {
  return AmbiguityBudget(BudgetFamily::HalfLog3, d, 0, 0);
}

AmbiguityBudget AmbiguityBudget::third_log4(unsigned d) {
  return AmbiguityBudget(BudgetFamily::ThirdLog4, d, 0, 0);
}

AmbiguityBudget AmbiguityBudget::log_circled_star(unsigned lambda) {
  if (lambda < 1) throw std::domain_error("logcstar budget needs lambda >= 1");
  return AmbiguityBudget(BudgetFamily::LogCircledStar, 0, 0, lambda);
}

unsigned AmbiguityBudget::eval(const Integer& n) const {
  if (n < 0) throw std::domain_error("budget_eval: n must be a natural number");
  double nd = mpz_get_d(n.get_mpz_t());
  if (std::isinf(nd)) nd = std::numeric_limits<double>::max();
  double raw = 1.0;
  switch (family_) {
    case BudgetFamily::Constant:
      raw = d_;
      break;
    case BudgetFamily::Log:
      raw = std::floor(d_ * log2c(nd + 2.0));
      break;
    case BudgetFamily::SqrtLog:
      raw = std::floor(d_ * (std::sqrt(log2c(nd)) + 1.0));
      break;
    case BudgetFamily::LogLogOver:
      raw = std::floor(d_ + log2c(log2c(nd)) / (2.0 * std::log2(k_)));
      break;
    case BudgetFamily::HalfLog3:
      raw = std::floor(d_ + 0.5 * log2c(log2c(log2c(nd))));
      break;
    case BudgetFamily::ThirdLog4:
      raw = std::floor(d_ + log2c(log2c(log2c(log2c(nd)))) / 3.0);
      break;
    case BudgetFamily::LogCircledStar: {
      unsigned lcs = ::rcgap::log_circled_star(TowerReal(nd));
      return std::max(1u, lcs / lambda_);
    }
  }
  if (raw < 1.0) return 1;
  return static_cast<unsigned>(raw);
}

std::string AmbiguityBudget::describe() const {
  std::ostringstream os;
  switch (family_) {
    case BudgetFamily::Constant: os << "const:" << d_; break;
    case BudgetFamily::Log: os << "log:d=" << d_; break;
    case BudgetFamily::SqrtLog: os << "sqrtlog:d=" << d_; break;
    case BudgetFamily::LogLogOver: os << "loglogover:d=" << d_ << ",k=" << k_; break;
    case BudgetFamily::HalfLog3: os << "halflog3:d=" << d_; break;
    case BudgetFamily::ThirdLog4: os << "thirdlog4:d=" << d_; break;
    case BudgetFamily::LogCircledStar: os << "lcstar:lambda=" << lambda_; break;
  }
  return os.str();
}

AmbiguityBudget AmbiguityBudget::parse(const std::string& text) {
  std::string name = text;
  std::map<std::string, double> params;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    std::istringstream in(text.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        // bare number, e.g. "const:5"
        params["value"] = std::stod(item);
      } else {
        params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      }
    }
  }
  auto get = [&](const char* key) -> double {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    it = params.find("value");
    if (it != params.end()) return it->second;
    throw std::domain_error(std::string("budget '") + name + "' needs " + key + "=...");
  };
  if (name == "const") return constant(static_cast<unsigned>(get("k")));
  if (name == "log") return log(static_cast<unsigned>(get("d")));
  if (name == "sqrtlog") return sqrt_log(static_cast<unsigned>(get("d")));
  if (name == "loglogover")
    return loglog_over(static_cast<unsigned>(get("d")), get("k"));
  if (name == "halflog3") return half_log3(static_cast<unsigned>(get("d")));
  if (name == "thirdlog4") return third_log4(static_cast<unsigned>(get("d")));
  if (name == "lcstar") return log_circled_star(static_cast<unsigned>(get("lambda")));
  throw std::domain_error("unknown budget family: '" + name + "'");
}

}  // namespace rcgap
