#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcgap/ambiguity_budget.hpp"
#include "rcgap/constant_table.hpp"
#include "rcgap/integer.hpp"
#include "rcgap/target_set.hpp"

namespace rcgap {

// Desk-scale bounded-ambiguity acceptor: a guess-length function plus a
// decidable accept predicate over (input, guess) pairs. Paths are the guess
// strings; #acc(x) counts the accepting ones.
class ChoiceMachine {
 public:
  using GuessLengthFn = std::function<unsigned(std::size_t input_length)>;
  using AcceptFn = std::function<bool(const std::string& input, const std::string& guess)>;

  ChoiceMachine(GuessLengthFn guess_length, AcceptFn accept,
                AmbiguityBudget declared_budget, std::string description)
      : guess_length_(std::move(guess_length)),
        accept_(std::move(accept)),
        declared_budget_(std::move(declared_budget)),
        description_(std::move(description)) {}

  unsigned guess_length(std::size_t input_length) const {
    return guess_length_(input_length);
  }
  bool accepts(const std::string& input, const std::string& guess) const {
    return accept_(input, guess);
  }
  const AmbiguityBudget& declared_budget() const { return declared_budget_; }
  const std::string& description() const { return description_; }

 private:
  GuessLengthFn guess_length_;
  AcceptFn accept_;
  AmbiguityBudget declared_budget_;
  std::string description_;
};

// input -> set of witness guess strings.
using PlantedSpec = std::map<std::string, std::set<std::string>>;

// Machine accepting exactly the planted witnesses. Construction fails if a
// witness has the wrong length for its input or a witness set exceeds the
// declared budget.
ChoiceMachine make_planted_machine(const PlantedSpec& spec,
                                   ChoiceMachine::GuessLengthFn guess_length,
                                   AmbiguityBudget budget);

// Exact #acc(x) by full enumeration of guess strings.
Integer count_accepting(const ChoiceMachine& machine, const std::string& input,
                        std::uint64_t enumeration_cap = std::uint64_t{1} << 24);

// The restricted-counting transform: guess i in 1..j(|x|), guess a
// cardinality-i set of base paths, branch into c_i accepting paths when all
// of them accept.
struct TransformedMachine {
  ChoiceMachine base;
  ConstantTable table;
  AmbiguityBudget budget;
};

TransformedMachine rc_transform(ChoiceMachine base, ConstantTable table,
                                AmbiguityBudget budget);

enum class CountMode {
  Analytic,             // sum of c_l * C(k, l)
  EnumAcceptingSubsets, // walk subsets of accepting paths (k <= 30)
  EnumAllSubsets,       // walk subsets of all paths (total guesses <= 20)
};

// Accepting-path count of the transformed machine. All three modes agree;
// the enumeration modes exist as oracles for the analytic formula.
Integer count_transformed(const TransformedMachine& tm, const std::string& input,
                          CountMode mode,
                          std::uint64_t enumeration_cap = std::uint64_t{1} << 24);

struct RcInputResult {
  std::string input;
  unsigned k = 0;               // #acc of the base machine
  Integer count;                // transformed count
  bool base_accepts = false;
  bool count_in_set = false;
  bool ok = false;              // zero when rejected / member when accepted
  bool budget_violation = false;  // k exceeded j(|x|)
  bool probabilistic = false;     // membership used Baillie-PSW
  std::optional<std::string> error;  // cap errors make the input inconclusive
};

struct RcMembershipReport {
  std::vector<RcInputResult> inputs;
  enum class Verdict { Pass, Fail, Inconclusive } verdict = Verdict::Pass;
};

// Per input: a rejected base input must give count 0; an accepted one must
// land in the set.
RcMembershipReport verify_rc_membership(const TransformedMachine& tm,
                                        const TargetSet& set,
                                        const std::vector<std::string>& inputs);

}  // namespace rcgap
