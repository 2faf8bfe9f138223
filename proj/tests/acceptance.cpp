// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: rcgap_acceptance <path-to-rcgap-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "rcgap/json_io.hpp"
#include "rcgap/star_functions.hpp"
#include "rcgap/theorem_checks.hpp"

using namespace rcgap;

namespace {

std::string g_cli_path;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fixture(const std::string& name) {
  return std::string(RCGAP_FIXTURE_DIR) + "/" + name;
}

// ---- criterion 1: golden constant tables ----------------------------------

void golden_tables() {
  // Recompute both tables with the brute-force oracle before comparing.
  oracle::SmallTable expect_p = oracle::build_table(oracle::Kind::Primes, 6, 2);
  require(expect_p.a == std::vector<std::uint64_t>{2, 5, 11, 23, 47, 97},
          "oracle prime table drifted");
  oracle::SmallTable expect_m = oracle::build_table(oracle::Kind::Mersenne, 5, 2);
  require(expect_m.a == std::vector<std::uint64_t>{3, 7, 31, 127, 8191},
          "oracle mersenne table drifted");

  TargetSet primes = TargetSet::primes();
  ConstantTable tp = build_constant_table(primes, 6, 2);
  require(tp.a == std::vector<Integer>{2, 5, 11, 23, 47, 97}, "prime a-sequence");
  require(tp.c == std::vector<Integer>{2, 1, 2, 1, 2, 3}, "prime c-sequence");
  for (const Integer& a : tp.a) require(primes.is_member(a), "prime a_i member");

  TargetSet mersenne = TargetSet::mersenne_primes();
  ConstantTable tm = build_constant_table(mersenne, 5, 2);
  require(tm.a == std::vector<Integer>{3, 7, 31, 127, 8191}, "mersenne a-sequence");
  require(tm.c == std::vector<Integer>{3, 1, 19, 33, 7811}, "mersenne c-sequence");
  for (const Integer& a : tm.a) require(mersenne.is_member(a), "mersenne a_i member");
}

// ---- criterion 2: transform oracle equivalence -----------------------------

void transform_equivalence() {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::pair<TargetSet, ConstantTable>> targets;
  targets.emplace_back(TargetSet::primes(),
                       build_constant_table(TargetSet::primes(), 6, 2));
  targets.emplace_back(TargetSet::mersenne_primes(),
                       build_constant_table(TargetSet::mersenne_primes(), 6, 2));
  TargetSet odd = load_target_set(fixture("odd_numbers.txt"));
  targets.emplace_back(odd, build_constant_table(odd, 6, 1));

  const unsigned machines = 216;
  for (unsigned trial = 0; trial < machines; ++trial) {
    unsigned guess_bits = 2 + static_cast<unsigned>(rng() % 3);  // 4..16 guesses
    unsigned total = 1u << guess_bits;
    unsigned k_cap = std::min(6u, total);
    unsigned k = static_cast<unsigned>(rng() % (k_cap + 1));
    std::set<std::string> witnesses;
    while (witnesses.size() < k) {
      unsigned g = static_cast<unsigned>(rng() % total);
      std::string gs(guess_bits, '0');
      for (unsigned b = 0; b < guess_bits; ++b) {
        if ((g >> b) & 1) gs[b] = '1';
      }
      witnesses.insert(gs);
    }
    PlantedSpec spec{{"accepted", witnesses}, {"rejected!", {}}};
    ChoiceMachine base = make_planted_machine(
        spec, [guess_bits](std::size_t) { return guess_bits; },
        AmbiguityBudget::constant(6));
    const auto& [set, table] = targets[trial % targets.size()];
    TransformedMachine tm = rc_transform(base, table, AmbiguityBudget::constant(6));

    Integer analytic = count_transformed(tm, "accepted", CountMode::Analytic);
    Integer subsets = count_transformed(tm, "accepted", CountMode::EnumAcceptingSubsets);
    Integer all = count_transformed(tm, "accepted", CountMode::EnumAllSubsets);
    require(analytic == subsets && analytic == all,
            "mode disagreement at trial " + std::to_string(trial));
    require(count_transformed(tm, "rejected!", CountMode::Analytic) == 0 &&
                count_transformed(tm, "rejected!", CountMode::EnumAllSubsets) == 0,
            "rejected input must count 0");
    if (k == 0) {
      require(analytic == 0, "k=0 must count 0");
    } else {
      require(set.is_member(analytic),
              "count " + to_decimal(analytic) + " not in " + set.description());
    }
  }
}

// ---- criterion 3: hard-coded constant-budget regime ------------------------

void appendix_a_regime() {
  TargetSet set = load_target_set(fixture("appendixa_prefix.txt"));
  ConstantTable table = build_constant_table(set, 4, 2);
  require(table.size() == 4, "table length");
  require(table.a == std::vector<Integer>{5, 11, 29, 83}, "file-backed a-sequence");
  for (unsigned k = 1; k <= 4; ++k) {
    require(set.is_member(acceptance_value(table, k)), "acceptance value in set");
  }

  PlantedSpec spec;
  spec["k0"] = {};
  spec["k1"] = {"000"};
  spec["k2"] = {"000", "001"};
  spec["k3"] = {"000", "001", "010"};
  spec["k4"] = {"000", "001", "010", "100"};
  ChoiceMachine base = make_planted_machine(
      spec, [](std::size_t) { return 3u; }, AmbiguityBudget::constant(4));
  TransformedMachine tm = rc_transform(base, table, AmbiguityBudget::constant(4));
  RcMembershipReport report =
      verify_rc_membership(tm, set, {"k0", "k1", "k2", "k3", "k4"});
  require(report.verdict == RcMembershipReport::Verdict::Pass,
          "rc membership over the file-backed prefix");
  require(report.inputs[4].count == 83, "k=4 count is a_4");
}

// ---- criterion 4: nongappiness scans ---------------------------------------

void nongappy_scans() {
  NongappyReport primes =
      verify_nongappy(TargetSet::primes(), GapFunction::add_const(1), 32);
  require(primes.pass, "primes fail addconst:1 through length 32");

  NongappyReport mersenne =
      verify_nongappy(TargetSet::mersenne_primes(), GapFunction::exp2(), 13);
  require(mersenne.pass, "mersenne primes fail exp2 through length 13");
  require(mersenne.witnesses.back().element == 8191, "scan must reach 8191");
}

// ---- criterion 5: metatheorem condition suites ------------------------------

void meta_condition_suites() {
  {
    TheoremCheckSpec spec(GapFunction::linear(2), AmbiguityBudget::constant(1));
    MetaConditionReport r = check_meta_conditions(spec.f, spec);
    require(r.pass && r.variant == "meta1", "linear:k=2 meta1");
    require(r.scaling_always_equal, "linear:k=2 scaling law must be an equality");
  }
  for (auto f : {GapFunction::power(2.0), GapFunction::n_log_n(1),
                 GapFunction::n_pow_log_n(), GapFunction::n_pow_log_pow_k(2),
                 GapFunction::exp2()}) {
    TheoremCheckSpec spec(f, AmbiguityBudget::constant(1));
    MetaConditionReport r = check_meta_conditions(f, spec);
    require(r.pass && r.variant == "meta2", f.describe() + " meta2");
    require(r.counterexamples.empty(), f.describe() + " counterexamples");
  }
}

// ---- criterion 6: growth bounds --------------------------------------------

void growth_bounds() {
  {
    TheoremCheckSpec spec(GapFunction::linear(2), AmbiguityBudget::log(1));
    spec.lambda = 6;
    Envelope env = default_envelope(spec.f, spec.j, spec.lambda);
    require(env.beta.to_double() == 5.0, "kn-theorem beta");
    spec.alpha = env.alpha;
    spec.beta = env.beta;
    spec.n_range = default_n_range(spec.j, 2, 1000000);
    require(check_growth_bound(spec).pass, "linear growth bound over [2,1e6]");
  }
  {
    TheoremCheckSpec spec(GapFunction::power(2.0), AmbiguityBudget::loglog_over(1, 2.0));
    spec.lambda = 9;
    spec.variant = MetaVariant::Meta2;
    Envelope env = default_envelope(spec.f, spec.j, spec.lambda);
    require(env.beta.to_double() == 4.0, "n^k-theorem beta");
    spec.alpha = env.alpha;
    spec.beta = env.beta;
    spec.n_range = default_n_range(spec.j, 16, 1000000);
    require(check_growth_bound(spec).pass, "power growth bound over [16,1e6]");
  }
  {
    TheoremCheckSpec spec(GapFunction::exp2(), AmbiguityBudget::log_circled_star(6));
    spec.lambda = 6;
    spec.variant = MetaVariant::Meta2;
    Envelope env = default_envelope(spec.f, spec.j, spec.lambda);
    require(env.beta.to_double() == 1.0, "tradeoff-part-4 beta");
    spec.alpha = env.alpha;
    spec.beta = env.beta;
    spec.n_range = default_n_range(spec.j, 2, pow2(64));
    require(check_growth_bound(spec).pass, "exp2 growth bound over [2,2^64]");
  }
}

// ---- criterion 7: star functions -------------------------------------------

void star_functions() {
  std::vector<TowerReal> alphas;
  for (unsigned i = 0; i <= 10000; ++i) alphas.push_back(1e6 * i / 10000.0);
  for (unsigned n = 0; n <= 6; ++n) alphas.push_back(TowerReal::power_tower_of_two(n));
  IlogBoundsReport ilog = check_ilog_bounds(alphas);
  require(ilog.pass, "ilog bounds violated on the grid");

  for (unsigned n = 2; n <= 6; ++n) {
    SeparationReport r = check_separation(n);
    require(r.lemma_consistent, "separation lemma mismatch at n=" + std::to_string(n));
    require(r.bound_holds, "separation bound fails at n=" + std::to_string(n));
    require(r.pass, "separation fails at n=" + std::to_string(n));
  }

  for (unsigned n = 0; n <= 4; ++n) {
    require(slog2(tetration2(double(n))) == double(n), "slog round trip at small n");
  }
  require(slog2(TowerReal::power_tower_of_two(5)) == 5.0, "slog at ^5 2");
  require(slog2(TowerReal::power_tower_of_two(6)) == 6.0, "slog at ^6 2");
  for (double y = 1.0; y <= 1e6; y = y * 1.31 + 0.17) {
    if (std::abs(tetration2(slog2(y)) - y) > 1e-6 * y) {
      throw Failure("tet(slog(y)) drift at y=" + std::to_string(y));
    }
  }
  for (double n = 1.0; n <= 64.0; n += 0.5) {
    double s = s_frak(n);
    if (std::abs(s + slog2(s) - n) > 1e-8) {
      throw Failure("s_frak round trip at n=" + std::to_string(n));
    }
  }
}

// ---- criterion 8: mersenne density -----------------------------------------

void mersenne_density() {
  MersenneDensityReport report = mersenne_density_report(12);
  require(report.exponents == std::vector<unsigned>{2, 3, 5, 7, 13, 17, 19, 31,
                                                    61, 89, 107, 127},
          "first 12 Mersenne exponents");
  require(!report.truncated, "report must not truncate");
  for (unsigned i = 0; i < report.mu_table.size(); ++i) {
    require(report.mu_table[i].mu == i + 1, "mu(|M_i|) = i");
  }
}

// ---- criterion 9: CLI determinism ------------------------------------------

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw Failure("cannot spawn: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  return {rc, out};
}

void cli_determinism() {
  require(!g_cli_path.empty(), "CLI path missing (pass it as argv[1])");
  std::vector<std::string> commands = {
      "--json gaps --set primes --fn addconst:c=1 --max-length 32",
      "--json gaps --set mersenne --fn exp2 --max-length 13",
      "--json verify rc --planted " + fixture("planted_demo.json") +
          " --budget const:3 --set mersenne --m 6",
      "--json verify rc --planted " + fixture("planted_demo.json") +
          " --budget const:3 --set primes --m 6",
      "--json constants --set primes --m 6 --check-fn addconst:c=1"
      " --check-budget const:5 --check-n 65536",
      "--json check meta --fn linear:k=2",
      "--json check growth --fn exp2 --budget lcstar:lambda=6 --n-max 2^64",
      "--json check ilog --grid-points 2000",
      "--json check separation --n 4",
      "--json mersenne-density --count 8",
  };
  for (const std::string& args : commands) {
    auto [rc1, out1] = run_cli(args);
    auto [rc2, out2] = run_cli(args);
    require(rc1 == rc2, "exit codes differ for: " + args);
    require(rc1 == 0, "command failed (exit " + std::to_string(rc1) + "): " + args);
    require(!out1.empty(), "no output for: " + args);
    require(out1 == out2, "output differs between runs for: " + args);
  }
}

struct Criterion {
  std::string name;
  std::function<void()> run;
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  std::vector<Criterion> criteria = {
      {"1-constant-setting-golden-tables", golden_tables, 1.0},
      {"2-rc-transform-oracle-equivalence", transform_equivalence, 30.0},
      {"3-appendix-a-constant-budget", appendix_a_regime, 10.0},
      {"4-nongappiness-scans", nongappy_scans, 5.0},
      {"5-metatheorem-conditions", meta_condition_suites, 10.0},
      {"6-growth-bounds", growth_bounds, 10.0},
      {"7-star-functions", star_functions, 5.0},
      {"8-mersenne-density", mersenne_density, 20.0},
      {"9-cli-determinism", cli_determinism, 60.0},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (verdict == "PASS" && seconds > criterion.limit_seconds) {
      verdict = "FAIL";
      detail = "runtime " + std::to_string(seconds) + "s exceeds " +
               std::to_string(criterion.limit_seconds) + "s";
      ++failures;
    }
    std::printf("%s  %-38s (%.2fs)%s%s\n", verdict.c_str(), criterion.name.c_str(),
                seconds, detail.empty() ? "" : "  -- ", detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
