#include "rcgap/target_set.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rcgap/primality.hpp"

namespace rcgap {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::string set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::Primes: return "primes";
    case SetKind::MersennePrimes: return "mersenne-primes";
    case SetKind::Composites: return "composites";
    case SetKind::PowersOfTwo: return "powers-of-two";
    case SetKind::OddNumbers: return "odd-numbers";
    case SetKind::FileBacked: return "file-backed";
  }
  return "unknown";
}

TargetSet TargetSet::builtin(SetKind kind) {
  if (kind == SetKind::FileBacked)
    throw std::domain_error("builtin: file-backed sets need a path");
  return TargetSet(kind);
}

TargetSet::TargetSet(const TargetSet& other)
    : kind_(other.kind_),
      path_(other.path_),
      file_elems_(other.file_elems_),
      mersenne_exp_ceiling_(other.mersenne_exp_ceiling_),
      enum_len_cap_(other.enum_len_cap_) {
  std::lock_guard<std::mutex> lock(other.cache_mu_);
  mersenne_exps_ = other.mersenne_exps_;
  mersenne_scan_hi_ = other.mersenne_scan_hi_;
}

TargetSet TargetSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read target-set file: " + path.string());
  TargetSet set(SetKind::FileBacked);
  set.path_ = path.string();
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    Integer v;
    if (mpz_set_str(v.get_mpz_t(), line.c_str(), 10) != 0 || v < 0) {
      std::ostringstream msg;
      msg << path.string() << ":" << lineno << ": not a nonnegative integer: '"
          << line << "'";
      throw ParseError(msg.str());
    }
    if (v == 0) {
      std::ostringstream msg;
      msg << path.string() << ":" << lineno
          << ": 0 is not allowed, the set must satisfy S subset of N+";
      throw std::domain_error(msg.str());
    }
    set.file_elems_.push_back(v);
  }
  std::sort(set.file_elems_.begin(), set.file_elems_.end());
  set.file_elems_.erase(
      std::unique(set.file_elems_.begin(), set.file_elems_.end()),
      set.file_elems_.end());
  return set;
}

TargetSet load_target_set(const std::filesystem::path& path) {
  return TargetSet::from_file(path);
}

std::string TargetSet::description() const {
  if (kind_ == SetKind::FileBacked) return "file:" + path_;
  return set_kind_name(kind_);
}

std::vector<unsigned> TargetSet::mersenne_exponents_up_to(
    unsigned max_exponent) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  while (mersenne_scan_hi_ < max_exponent) {
    unsigned p = mersenne_scan_hi_ + 1;
    mersenne_scan_hi_ = p;
    if (p >= 2 && is_prime_u64(p) && lucas_lehmer(p)) {
      mersenne_exps_.push_back(p);
    }
  }
  std::vector<unsigned> out;
  for (unsigned p : mersenne_exps_) {
    if (p <= max_exponent) out.push_back(p);
  }
  return out;
}

std::vector<Integer> TargetSet::elements_up_to_length(unsigned n) const {
  std::vector<Integer> out;
  if (n == 0) return out;
  switch (kind_) {
    case SetKind::Primes:
    case SetKind::Composites: {
      if (n > enum_len_cap_) {
        throw EnumerationCapError("elements_up_to_length: length " +
                                  std::to_string(n) + " exceeds the cap " +
                                  std::to_string(enum_len_cap_));
      }
      // Sieve of Eratosthenes over [0, 2^n).
      std::size_t limit = std::size_t{1} << n;
      std::vector<bool> composite(limit, false);
      for (std::size_t p = 2; p * p < limit; ++p) {
        if (composite[p]) continue;
        for (std::size_t q = p * p; q < limit; q += p) composite[q] = true;
      }
      bool want_primes = kind_ == SetKind::Primes;
      for (std::size_t v = want_primes ? 2 : 4; v < limit; ++v) {
        bool is_comp = composite[v];
        if (want_primes ? !is_comp : is_comp) out.push_back(Integer(static_cast<unsigned long>(v)));
      }
      return out;
    }
    case SetKind::MersennePrimes: {
      for (unsigned p : mersenne_exponents_up_to(n)) out.push_back(mersenne_number(p));
      return out;
    }
    case SetKind::PowersOfTwo: {
      for (unsigned k = 0; k < n; ++k) out.push_back(pow2(k));
      return out;
    }
    case SetKind::OddNumbers: {
      if (n > enum_len_cap_) {
        throw EnumerationCapError("elements_up_to_length: length " +
                                  std::to_string(n) + " exceeds the cap " +
                                  std::to_string(enum_len_cap_));
      }
      Integer limit = pow2(n);
      for (Integer v = 1; v < limit; v += 2) out.push_back(v);
      return out;
    }
    case SetKind::FileBacked: {
      Integer limit = pow2(n);
      for (const Integer& v : file_elems_) {
        if (v >= limit) break;
        out.push_back(v);
      }
      return out;
    }
  }
  return out;
}

Integer TargetSet::least_element_geq(const Integer& bound) const {
  if (bound < 0) throw std::domain_error("least_element_geq: negative bound");
  unsigned ceiling_len = bit_length(bound) + 64;
  switch (kind_) {
    case SetKind::Primes: {
      if (bound <= 2) return 2;
      Integer v = bound;
      if (mpz_even_p(v.get_mpz_t())) v += 1;
      for (; bit_length(v) <= ceiling_len; v += 2) {
        if (is_prime(v)) return v;
      }
      break;
    }
    case SetKind::Composites: {
      Integer v = bound < 4 ? Integer(4) : bound;
      for (; bit_length(v) <= ceiling_len; v += 1) {
        if (!is_prime(v)) return v;
      }
      break;
    }
    case SetKind::MersennePrimes: {
      unsigned p0 = std::max(2u, bit_length(bound));
      for (unsigned p = p0; p <= mersenne_exp_ceiling_; ++p) {
        if (!is_prime_u64(p)) continue;
        auto exps = mersenne_exponents_up_to(p);
        if (!exps.empty() && exps.back() == p) return mersenne_number(p);
      }
      throw GapCeilingError(
          "least_element_geq: no Mersenne prime with exponent <= " +
          std::to_string(mersenne_exp_ceiling_) + " at or above bound " +
          to_decimal(bound));
    }
    case SetKind::PowersOfTwo: {
      if (bound <= 1) return 1;
      return pow2(bit_length(bound - 1));
    }
    case SetKind::OddNumbers: {
      if (bound <= 1) return 1;
      return mpz_odd_p(bound.get_mpz_t()) ? bound : Integer(bound + 1);
    }
    case SetKind::FileBacked: {
      auto it = std::lower_bound(file_elems_.begin(), file_elems_.end(), bound);
      if (it == file_elems_.end()) {
        throw GapCeilingError(
            "least_element_geq: gap exceeds ceiling, file-backed set has no "
            "element >= " + to_decimal(bound));
      }
      return *it;
    }
  }
  throw GapCeilingError("least_element_geq: gap exceeds ceiling (length " +
                        std::to_string(ceiling_len) + ") above bound " +
                        to_decimal(bound));
}

Integer TargetSet::largest_element_below(const Integer& bound) const {
  auto none = [&]() -> std::domain_error {
    return std::domain_error("largest_element_below: no member below " +
                             to_decimal(bound));
  };
  switch (kind_) {
    case SetKind::Primes: {
      if (bound <= 2) throw none();
      Integer v = bound - 1;
      if (v > 2 && mpz_even_p(v.get_mpz_t())) v -= 1;
      for (; v >= 2; v -= (v > 3 ? 2 : 1)) {
        if (is_prime(v)) return v;
      }
      throw none();
    }
    case SetKind::Composites: {
      if (bound <= 4) throw none();
      for (Integer v = bound - 1; v >= 4; v -= 1) {
        if (!is_prime(v)) return v;
      }
      throw none();
    }
    case SetKind::MersennePrimes: {
      if (bound <= 3) throw none();
      unsigned pmax = bit_length(bound) - 1;
      auto exps = mersenne_exponents_up_to(pmax);
      if (exps.empty()) throw none();
      return mersenne_number(exps.back());
    }
    case SetKind::PowersOfTwo: {
      if (bound <= 1) throw none();
      return pow2(bit_length(bound - 1) - 1);
    }
    case SetKind::OddNumbers: {
      if (bound <= 1) throw none();
      Integer v = bound - 1;
      if (mpz_even_p(v.get_mpz_t())) v -= 1;
      if (v < 1) throw none();
      return v;
    }
    case SetKind::FileBacked: {
      auto it = std::lower_bound(file_elems_.begin(), file_elems_.end(), bound);
      if (it == file_elems_.begin()) throw none();
      return *(it - 1);
    }
  }
  throw none();
}

Integer TargetSet::smallest_element_with_min_length(unsigned n0) const {
  if (n0 < 1)
    throw std::domain_error("smallest_element_with_min_length: n0 must be >= 1");
  return least_element_geq(pow2(n0 - 1));
}

MembershipCheck TargetSet::check_member(const Integer& v) const {
  if (v <= 0)
    throw std::domain_error("is_member: value must be a positive integer");
  switch (kind_) {
    case SetKind::Primes: {
      PrimalityResult r = classify_prime(v);
      return {r.prime, !r.deterministic};
    }
    case SetKind::Composites: {
      if (v < 4) return {false, false};
      PrimalityResult r = classify_prime(v);
      return {!r.prime, !r.deterministic};
    }
    case SetKind::MersennePrimes: {
      Integer vp1 = v + 1;
      if (mpz_popcount(vp1.get_mpz_t()) != 1) return {false, false};
      unsigned p = bit_length(v);
      if (p < 2 || !is_prime_u64(p)) return {false, false};
      return {lucas_lehmer(p), false};
    }
    case SetKind::PowersOfTwo:
      return {mpz_popcount(v.get_mpz_t()) == 1, false};
    case SetKind::OddNumbers:
      return {mpz_odd_p(v.get_mpz_t()) != 0, false};
    case SetKind::FileBacked:
      return {std::binary_search(file_elems_.begin(), file_elems_.end(), v),
              false};
  }
  return {false, false};
}

}  // namespace rcgap
