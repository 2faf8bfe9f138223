#include "rcgap/choice_machine.hpp"

#include <doctest.h>

#include <random>

#include "rcgap/errors.hpp"

using namespace rcgap;

namespace {

ChoiceMachine::GuessLengthFn fixed_len(unsigned len) {
  return [len](std::size_t) { return len; };
}

ChoiceMachine divisor_machine(unsigned guess_bits) {
  // Accept iff the guess, read as a number, divides the input read as a number.
  auto accept = [](const std::string& input, const std::string& guess) {
    unsigned long x = std::stoul(input, nullptr, 2);
    unsigned long g = std::stoul(guess, nullptr, 2);
    return g >= 1 && x % g == 0;
  };
  return ChoiceMachine(fixed_len(guess_bits), accept,
                       AmbiguityBudget::constant(16), "divisor");
}

}  // namespace

TEST_CASE("planted machines count their witnesses exactly") {
  PlantedSpec spec{{"01", {"101"}}};
  ChoiceMachine m = make_planted_machine(spec, fixed_len(3),
                                         AmbiguityBudget::constant(1));
  CHECK(count_accepting(m, "01") == 1);

  PlantedSpec spec2{{"0", {}}, {"1", {"0", "1"}}};
  ChoiceMachine m2 = make_planted_machine(spec2, fixed_len(1),
                                          AmbiguityBudget::constant(2));
  CHECK(count_accepting(m2, "0") == 0);
  CHECK(count_accepting(m2, "1") == 2);
}

TEST_CASE("planted machine construction validates lengths and budgets") {
  PlantedSpec bad_len{{"01", {"10"}}};
  CHECK_THROWS_AS(make_planted_machine(bad_len, fixed_len(3),
                                       AmbiguityBudget::constant(1)),
                  std::invalid_argument);

  // 3 witnesses against floor(log2(3+2)) = 2 allowed
  PlantedSpec over{{"111", {"000", "001", "010"}}};
  CHECK_THROWS_AS(
      make_planted_machine(over, fixed_len(3), AmbiguityBudget::log(1)),
      std::invalid_argument);

  PlantedSpec not_bits{{"1", {"x"}}};
  CHECK_THROWS_AS(make_planted_machine(not_bits, fixed_len(1),
                                       AmbiguityBudget::constant(1)),
                  std::invalid_argument);
}

TEST_CASE("count_accepting by full enumeration") {
  ChoiceMachine m = divisor_machine(4);
  CHECK(count_accepting(m, "1100") == 6);  // divisors of 12: 1,2,3,4,6,12
  CHECK(count_accepting(m, "0111") == 2);  // divisors of 7 visible in 4 bits
  CHECK_THROWS_AS(count_accepting(divisor_machine(30), "1100"),
                  EnumerationCapError);
}

TEST_CASE("transformed counts follow the analytic formula") {
  ConstantTable primes = build_constant_table(TargetSet::primes(), 6, 2);
  PlantedSpec spec{{"x0", {}},
                   {"x1", {"0001"}},
                   {"x2", {"0001", "0010"}},
                   {"x3", {"0001", "0010", "0100"}}};
  ChoiceMachine base = make_planted_machine(spec, fixed_len(4),
                                            AmbiguityBudget::constant(3));
  TransformedMachine tm = rc_transform(base, primes, AmbiguityBudget::constant(3));
  CHECK(count_transformed(tm, "x0", CountMode::Analytic) == 0);
  CHECK(count_transformed(tm, "x1", CountMode::Analytic) == 2);   // c_1
  CHECK(count_transformed(tm, "x2", CountMode::Analytic) == 5);   // a_2 = 2*2+1
  CHECK(count_transformed(tm, "x3", CountMode::Analytic) == 11);  // a_3
}

TEST_CASE("the three counting modes agree exactly") {
  ConstantTable primes = build_constant_table(TargetSet::primes(), 6, 2);
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned guess_bits = 2 + static_cast<unsigned>(rng() % 3);  // 4..16 guesses
    unsigned total = 1u << guess_bits;
    unsigned k = static_cast<unsigned>(rng() % std::min(7u, total + 1));
    std::set<std::string> witnesses;
    while (witnesses.size() < k) {
      unsigned g = static_cast<unsigned>(rng() % total);
      std::string gs(guess_bits, '0');
      for (unsigned b = 0; b < guess_bits; ++b) {
        if ((g >> b) & 1) gs[b] = '1';
      }
      witnesses.insert(gs);
    }
    PlantedSpec spec{{"in", witnesses}};
    ChoiceMachine base = make_planted_machine(spec, fixed_len(guess_bits),
                                              AmbiguityBudget::constant(6));
    TransformedMachine tm =
        rc_transform(base, primes, AmbiguityBudget::constant(6));
    Integer analytic = count_transformed(tm, "in", CountMode::Analytic);
    Integer subsets = count_transformed(tm, "in", CountMode::EnumAcceptingSubsets);
    Integer all = count_transformed(tm, "in", CountMode::EnumAllSubsets);
    CAPTURE(trial);
    CAPTURE(k);
    CHECK(analytic == subsets);
    CHECK(analytic == all);
    if (k == 0) CHECK(analytic == 0);
  }
}

TEST_CASE("rejecting guesses never change the count") {
  ConstantTable primes = build_constant_table(TargetSet::primes(), 6, 2);
  PlantedSpec narrow{{"x", {"01", "10"}}};
  PlantedSpec wide{{"x", {"0100", "1000"}}};
  auto base_narrow = make_planted_machine(narrow, fixed_len(2),
                                          AmbiguityBudget::constant(4));
  auto base_wide = make_planted_machine(wide, fixed_len(4),
                                        AmbiguityBudget::constant(4));
  auto tm_narrow = rc_transform(base_narrow, primes, AmbiguityBudget::constant(4));
  auto tm_wide = rc_transform(base_wide, primes, AmbiguityBudget::constant(4));
  for (auto mode : {CountMode::Analytic, CountMode::EnumAcceptingSubsets}) {
    CHECK(count_transformed(tm_narrow, "x", mode) ==
          count_transformed(tm_wide, "x", mode));
  }
}

TEST_CASE("budget truncation caps the guessed cardinality") {
  ConstantTable primes = build_constant_table(TargetSet::primes(), 6, 2);
  PlantedSpec spec{{"abc", {"001", "010", "100"}}};  // k = 3
  ChoiceMachine base = make_planted_machine(spec, fixed_len(3),
                                            AmbiguityBudget::constant(3));
  // Transform declared with j = 2 < k: the machine only guesses pairs.
  TransformedMachine tm = rc_transform(base, primes, AmbiguityBudget::constant(2));
  // c_1 * C(3,1) + c_2 * C(3,2) = 2*3 + 1*3
  CHECK(count_transformed(tm, "abc", CountMode::Analytic) == 9);
  CHECK(count_transformed(tm, "abc", CountMode::EnumAllSubsets) == 9);

  RcMembershipReport report =
      verify_rc_membership(tm, TargetSet::primes(), {"abc"});
  CHECK(report.inputs[0].budget_violation);
  CHECK_FALSE(report.inputs[0].ok);  // 9 is not prime
  CHECK(report.verdict == RcMembershipReport::Verdict::Fail);
}

TEST_CASE("a table shorter than the budget is a range error at count time") {
  ConstantTable primes = build_constant_table(TargetSet::primes(), 2, 2);
  PlantedSpec spec{{"abcd", {"001"}}};
  ChoiceMachine base = make_planted_machine(spec, fixed_len(3),
                                            AmbiguityBudget::constant(3));
  TransformedMachine tm = rc_transform(base, primes, AmbiguityBudget::constant(3));
  CHECK_THROWS_AS(count_transformed(tm, "abcd", CountMode::Analytic),
                  std::out_of_range);
}

TEST_CASE("rc membership over planted UP machines") {
  PlantedSpec spec{{"a", {}},
                   {"bb", {"0011"}},
                   {"cc", {"0011", "1100"}},
                   {"ddd", {"0001", "0010", "0100"}}};
  ChoiceMachine base = make_planted_machine(spec, fixed_len(4),
                                            AmbiguityBudget::constant(3));

  ConstantTable primes = build_constant_table(TargetSet::primes(), 6, 2);
  auto tm = rc_transform(base, primes, AmbiguityBudget::constant(3));
  RcMembershipReport r1 =
      verify_rc_membership(tm, TargetSet::primes(), {"a", "bb", "cc", "ddd"});
  CHECK(r1.verdict == RcMembershipReport::Verdict::Pass);
  std::vector<Integer> counts;
  for (const auto& in : r1.inputs) counts.push_back(in.count);
  CHECK(counts == std::vector<Integer>{0, 2, 5, 11});

  ConstantTable mersenne = build_constant_table(TargetSet::mersenne_primes(), 6, 2);
  auto tm2 = rc_transform(base, mersenne, AmbiguityBudget::constant(3));
  RcMembershipReport r2 = verify_rc_membership(tm2, TargetSet::mersenne_primes(),
                                               {"a", "bb", "cc", "ddd"});
  CHECK(r2.verdict == RcMembershipReport::Verdict::Pass);
  counts.clear();
  for (const auto& in : r2.inputs) counts.push_back(in.count);
  CHECK(counts == std::vector<Integer>{0, 3, 7, 31});
}
