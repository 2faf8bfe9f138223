#include "rcgap/choice_machine.hpp"

#include <algorithm>
#include <stdexcept>

#include "rcgap/errors.hpp"

namespace rcgap {

namespace {

std::string guess_string(std::uint64_t index, unsigned length) {
  std::string g(length, '0');
  for (unsigned bit = 0; bit < length; ++bit) {
    if ((index >> (length - 1 - bit)) & 1) g[bit] = '1';
  }
  return g;
}

// Walks cardinality-l index subsets of {0,...,total-1} in lexicographic
// order.
template <typename Visit>
void for_each_subset(unsigned total, unsigned l, Visit visit) {
  if (l > total) return;
  std::vector<unsigned> idx(l);
  for (unsigned i = 0; i < l; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    // advance
    unsigned i = l;
    while (i > 0) {
      --i;
      if (idx[i] != i + total - l) {
        ++idx[i];
        for (unsigned j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (l == 0) return;
  }
}

}  // namespace

ChoiceMachine make_planted_machine(const PlantedSpec& spec,
                                   ChoiceMachine::GuessLengthFn guess_length,
                                   AmbiguityBudget budget) {
  for (const auto& [input, witnesses] : spec) {
    unsigned expect = guess_length(input.size());
    for (const std::string& w : witnesses) {
      if (w.size() != expect) {
        throw std::invalid_argument(
            "make_planted_machine: witness '" + w + "' for input '" + input +
            "' has length " + std::to_string(w.size()) + ", expected " +
            std::to_string(expect));
      }
      if (w.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("make_planted_machine: witness '" + w +
                                    "' is not a bit string");
      }
    }
    unsigned allowed = budget.eval(Integer(static_cast<unsigned long>(input.size())));
    if (witnesses.size() > allowed) {
      throw std::invalid_argument(
          "make_planted_machine: input '" + input + "' has " +
          std::to_string(witnesses.size()) + " witnesses, budget allows " +
          std::to_string(allowed));
    }
  }
  auto table = std::make_shared<PlantedSpec>(spec);
  auto accept = [table](const std::string& input, const std::string& guess) {
    auto it = table->find(input);
    return it != table->end() && it->second.count(guess) > 0;
  };
  return ChoiceMachine(std::move(guess_length), accept, std::move(budget),
                       "planted");
}

Integer count_accepting(const ChoiceMachine& machine, const std::string& input,
                        std::uint64_t enumeration_cap) {
  unsigned len = machine.guess_length(input.size());
  if (len >= 64 || (std::uint64_t{1} << len) > enumeration_cap) {
    throw EnumerationCapError(
        "count_accepting: 2^" + std::to_string(len) +
        " guesses exceed the enumeration cap " + std::to_string(enumeration_cap));
  }
  std::uint64_t total = std::uint64_t{1} << len;
  Integer count = 0;
  for (std::uint64_t g = 0; g < total; ++g) {
    if (machine.accepts(input, guess_string(g, len))) count += 1;
  }
  return count;
}

TransformedMachine rc_transform(ChoiceMachine base, ConstantTable table,
                                AmbiguityBudget budget) {
  return TransformedMachine{std::move(base), std::move(table), std::move(budget)};
}

Integer count_transformed(const TransformedMachine& tm, const std::string& input,
                          CountMode mode, std::uint64_t enumeration_cap) {
  unsigned jx = tm.budget.eval(Integer(static_cast<unsigned long>(input.size())));
  if (jx > tm.table.size()) {
    throw std::out_of_range("count_transformed: table has " +
                            std::to_string(tm.table.size()) +
                            " entries but j(|x|) = " + std::to_string(jx));
  }
  unsigned guess_len = tm.base.guess_length(input.size());

  if (mode == CountMode::Analytic || mode == CountMode::EnumAcceptingSubsets) {
    Integer k_big = count_accepting(tm.base, input, enumeration_cap);
    unsigned k = static_cast<unsigned>(to_u64(k_big));
    if (mode == CountMode::Analytic) {
      Integer count = 0;
      for (unsigned l = 1; l <= std::min(k, jx); ++l) {
        count += tm.table.c[l - 1] * binomial(k, l);
      }
      return count;
    }
    if (k > 30) {
      throw EnumerationCapError(
          "count_transformed: enum-accepting-subsets mode caps #acc at 30, got " +
          std::to_string(k));
    }
    // Collect accepting guesses, then walk their subsets.
    std::vector<std::string> accepting;
    std::uint64_t total = std::uint64_t{1} << guess_len;
    for (std::uint64_t g = 0; g < total; ++g) {
      std::string gs = guess_string(g, guess_len);
      if (tm.base.accepts(input, gs)) accepting.push_back(gs);
    }
    Integer count = 0;
    for (unsigned l = 1; l <= std::min<unsigned>(jx, accepting.size()); ++l) {
      for_each_subset(static_cast<unsigned>(accepting.size()), l,
                      [&](const std::vector<unsigned>& idx) {
                        bool all = true;
                        for (unsigned i : idx) {
                          all = all && tm.base.accepts(input, accepting[i]);
                        }
                        if (all) count += tm.table.c[l - 1];
                      });
    }
    return count;
  }

  // EnumAllSubsets: full fidelity to the construction, subsets of all paths.
  if (guess_len >= 16 || (std::uint64_t{1} << guess_len) > 20) {
    throw EnumerationCapError(
        "count_transformed: enum-all-subsets mode caps total guesses at 20, got 2^" +
        std::to_string(guess_len));
  }
  unsigned total = 1u << guess_len;
  std::vector<std::string> guesses;
  guesses.reserve(total);
  for (unsigned g = 0; g < total; ++g) guesses.push_back(guess_string(g, guess_len));
  Integer count = 0;
  for (unsigned l = 1; l <= std::min(jx, total); ++l) {
    for_each_subset(total, l, [&](const std::vector<unsigned>& idx) {
      bool all = true;
      for (unsigned i : idx) {
        if (!tm.base.accepts(input, guesses[i])) {
          all = false;
          break;
        }
      }
      if (all) count += tm.table.c[l - 1];
    });
  }
  return count;
}

RcMembershipReport verify_rc_membership(const TransformedMachine& tm,
                                        const TargetSet& set,
                                        const std::vector<std::string>& inputs) {
  RcMembershipReport report;
  bool any_fail = false, any_inconclusive = false;
  for (const std::string& input : inputs) {
    RcInputResult r;
    r.input = input;
    try {
      Integer k_big = count_accepting(tm.base, input);
      r.k = static_cast<unsigned>(to_u64(k_big));
      r.base_accepts = r.k >= 1;
      unsigned jx = tm.budget.eval(Integer(static_cast<unsigned long>(input.size())));
      r.budget_violation = r.k > jx;
      r.count = count_transformed(tm, input, CountMode::Analytic);
      if (r.base_accepts) {
        MembershipCheck mc = set.check_member(r.count);
        r.count_in_set = mc.member;
        r.probabilistic = mc.probabilistic;
        r.ok = mc.member;
      } else {
        r.ok = r.count == 0;
      }
      if (!r.ok) any_fail = true;
    } catch (const EnumerationCapError& e) {
      r.error = e.what();
      any_inconclusive = true;
    }
    report.inputs.push_back(std::move(r));
  }
  report.verdict = any_fail ? RcMembershipReport::Verdict::Fail
                 : any_inconclusive ? RcMembershipReport::Verdict::Inconclusive
                                    : RcMembershipReport::Verdict::Pass;
  return report;
}

}  // namespace rcgap
