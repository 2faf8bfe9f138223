// rcgap: build and check iterative constant-setting constructions over
// nongappy target sets, and the star-function machinery behind their
// growth bounds.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rcgap/json_io.hpp"
#include "rcgap/primality.hpp"
#include "rcgap/star_functions.hpp"

using namespace rcgap;

namespace {

enum class Status { Data, Pass, Fail, Inconclusive };

const char* status_name(Status s) {
  switch (s) {
    case Status::Data: return "DATA";
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

int status_exit_code(Status s) {
  switch (s) {
    case Status::Data:
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 3;
  }
  return 2;
}

// ---- human rendering ------------------------------------------------------

bool is_scalar(const Json& j) {
  return j.is_primitive();
}

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void print_table(const Json& rows, std::ostream& os, int indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      (void)value;
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string cell = row.contains(cols[i]) ? scalar_str(row[cols[i]]) : "";
      width[i] = std::max(width[i], cell.size());
      line.push_back(cell);
    }
    cells.push_back(line);
  }
  std::string pad(indent, ' ');
  os << pad;
  for (std::size_t i = 0; i < cols.size(); ++i)
    os << std::left << std::setw(static_cast<int>(width[i]) + 2) << cols[i];
  os << "\n";
  for (const auto& line : cells) {
    os << pad;
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << std::left << std::setw(static_cast<int>(width[i]) + 2) << line[i];
    os << "\n";
  }
}

void print_human(const Json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (is_scalar(j)) {
    os << pad << scalar_str(j) << "\n";
    return;
  }
  if (j.is_array()) {
    if (!j.empty() && j.front().is_object()) {
      print_table(j, os, indent);
    } else {
      std::ostringstream line;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) line << ", ";
        line << scalar_str(j[i]);
      }
      os << pad << "[" << line.str() << "]\n";
    }
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (is_scalar(value)) {
      os << pad << key << ": " << scalar_str(value) << "\n";
    } else if (value.is_array() && (value.empty() || !value.front().is_object()) ) {
      std::ostringstream line;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) line << ", ";
        line << scalar_str(value[i]);
      }
      os << pad << key << ": [" << line.str() << "]\n";
    } else {
      os << pad << key << ":\n";
      print_human(value, os, indent + 2);
    }
  }
}

// ---- shared option helpers ------------------------------------------------

TargetSet resolve_set(const std::string& name) {
  if (name == "primes") return TargetSet::primes();
  if (name == "mersenne") return TargetSet::mersenne_primes();
  if (name == "composites") return TargetSet::composites();
  if (name == "pow2") return TargetSet::powers_of_two();
  if (name == "odd") return TargetSet::odd_numbers();
  if (name.rfind("file:", 0) == 0) return TargetSet::from_file(name.substr(5));
  throw std::domain_error(
      "unknown set '" + name +
      "' (expected primes|mersenne|composites|pow2|odd|file:PATH)");
}

// Accepts "123456" or "2^64".
Integer parse_big(const std::string& text) { return parse_integer_expr(text); }

// Infers the guess-length function of a planted spec: inputs with witnesses
// pin the length for their input size; witness-free sizes fall back to the
// longest witness seen anywhere (or 1).
ChoiceMachine::GuessLengthFn planted_guess_lengths(const PlantedSpec& spec) {
  std::map<std::size_t, unsigned> by_input_len;
  unsigned fallback = 1;
  for (const auto& [input, witnesses] : spec) {
    for (const auto& w : witnesses) {
      unsigned len = static_cast<unsigned>(w.size());
      auto [it, inserted] = by_input_len.emplace(input.size(), len);
      if (!inserted && it->second != len) {
        throw std::domain_error("planted spec: inputs of length " +
                                std::to_string(input.size()) +
                                " mix witness lengths " +
                                std::to_string(it->second) + " and " +
                                std::to_string(len));
      }
      fallback = std::max(fallback, len);
    }
  }
  return [by_input_len, fallback](std::size_t n) {
    auto it = by_input_len.find(n);
    return it == by_input_len.end() ? fallback : it->second;
  };
}

struct Emitter {
  bool json = false;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int emit(Status status, const Json& payload) const {
    if (json) {
      Json doc;
      doc["command"] = command;
      doc["status"] = status_name(status);
      doc["payload"] = payload;
      std::cout << doc.dump(2) << "\n";
    } else {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      std::cout << command << ": " << status_name(status) << " (" << elapsed
                << " ms)\n";
      print_human(payload, std::cout);
    }
    return status_exit_code(status);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restricted-counting constructions over nongappy target sets"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = false;
  const char* env_mode = std::getenv("RCGAP_OUTPUT");
  if (env_mode != nullptr && std::string(env_mode) == "json") json_flag = true;
  app.add_flag("--json,!--human", json_flag, "emit machine-readable JSON");

  // print
  auto* cmd_print = app.add_subcommand("print", "query a target set");
  std::string print_set, print_geq, print_member;
  unsigned print_len = 8, print_min_length = 0, print_ll = 0;
  cmd_print->add_option("--set", print_set, "target set")->required();
  cmd_print->add_option("--max-length", print_len, "largest bit-length to enumerate");
  cmd_print->add_option("--geq", print_geq, "least element at or above this bound");
  cmd_print->add_option("--min-length", print_min_length,
                        "smallest element with at least this bit-length");
  cmd_print->add_option("--member", print_member, "membership test for this value");
  cmd_print->add_option("--lucas-lehmer", print_ll, "Lucas-Lehmer test of 2^p - 1");

  // gaps
  auto* cmd_gaps = app.add_subcommand("gaps", "verify nongappiness / successor profile");
  std::string gaps_set, gaps_fn = "addconst:c=1";
  unsigned gaps_len = 16;
  bool gaps_profile = false;
  cmd_gaps->add_option("--set", gaps_set, "target set")->required();
  cmd_gaps->add_option("--fn", gaps_fn, "gap function, e.g. linear:k=2");
  cmd_gaps->add_option("--max-length", gaps_len, "scan window");
  cmd_gaps->add_flag("--profile", gaps_profile, "emit the raw successor profile");

  // mersenne-density
  auto* cmd_density = app.add_subcommand("mersenne-density", "Mersenne prime density data");
  unsigned density_count = 12, density_ceiling = 10000;
  cmd_density->add_option("--count", density_count, "number of Mersenne primes");
  cmd_density->add_option("--exp-ceiling", density_ceiling, "exponent search ceiling");

  // constants
  auto* cmd_constants = app.add_subcommand("constants", "build a constant table");
  std::string const_set, const_check_fn, const_check_budget;
  unsigned const_m = 6, const_n0 = 2;
  std::string const_check_n = "65536";
  cmd_constants->add_option("--set", const_set, "target set")->required();
  cmd_constants->add_option("--m", const_m, "table length");
  cmd_constants->add_option("--n0", const_n0, "length threshold for c_1");
  cmd_constants->add_option("--check-fn", const_check_fn, "verify length bounds for this gap function");
  cmd_constants->add_option("--check-budget", const_check_budget, "budget for the length-bound check");
  cmd_constants->add_option("--check-n", const_check_n, "input length n for the check");
  int const_value_at = -1;
  cmd_constants->add_option("--value-at", const_value_at,
                            "also report the accepting-path value at this k");

  // simulate
  auto* cmd_sim = app.add_subcommand("simulate", "count accepting paths");
  std::string sim_planted, sim_budget = "const:3", sim_set, sim_input, sim_mode = "analytic";
  unsigned sim_m = 6, sim_n0 = 2;
  std::uint64_t sim_cap = std::uint64_t{1} << 24;
  cmd_sim->add_option("--planted,--spec", sim_planted, "planted-spec JSON file")->required();
  cmd_sim->add_option("--budget", sim_budget, "ambiguity budget");
  cmd_sim->add_option("--set", sim_set, "transform against this set's table");
  cmd_sim->add_option("--m", sim_m, "table length for the transform");
  cmd_sim->add_option("--n0", sim_n0, "table n0");
  cmd_sim->add_option("--input", sim_input, "input string")->required();
  cmd_sim->add_option("--mode", sim_mode, "analytic|subsets|all");
  cmd_sim->add_option("--enum-cap", sim_cap, "guess enumeration cap");

  // verify rc
  auto* cmd_verify = app.add_subcommand("verify", "verification suites");
  cmd_verify->require_subcommand(1);
  auto* cmd_rc = cmd_verify->add_subcommand("rc", "restricted-counting membership");
  std::string rc_planted, rc_budget = "const:3", rc_set;
  unsigned rc_m = 6, rc_n0 = 2;
  std::vector<std::string> rc_inputs;
  cmd_rc->add_option("--planted,--spec", rc_planted, "planted-spec JSON file")->required();
  cmd_rc->add_option("--budget", rc_budget, "ambiguity budget");
  cmd_rc->add_option("--set", rc_set, "target set")->required();
  cmd_rc->add_option("--m", rc_m, "table length");
  cmd_rc->add_option("--n0", rc_n0, "table n0");
  cmd_rc->add_option("--input", rc_inputs, "inputs (default: all in the file)");

  // star
  auto* cmd_star = app.add_subcommand("star", "star-function evaluation");
  std::string star_fn, star_x;
  int star_tower = -1;
  std::size_t star_bit_cap = std::size_t{1} << 20;
  cmd_star->add_option("--fn", star_fn, "logstar|logcstar|tet|slog|sfrak")->required();
  cmd_star->add_option("--x", star_x, "argument");
  cmd_star->add_option("--tower", star_tower, "use ^n 2 as the argument");
  cmd_star->add_option("--bit-cap", star_bit_cap, "bit cap for exact tetration");

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "evaluate budgets and gap-function iterates");
  std::string eval_budget, eval_fn, eval_n = "0", eval_seed = "6";
  unsigned eval_iterations = 1;
  cmd_eval->add_option("--budget", eval_budget, "ambiguity budget to evaluate");
  cmd_eval->add_option("--n", eval_n, "budget argument (accepts 2^64)");
  cmd_eval->add_option("--fn", eval_fn, "gap function to iterate");
  cmd_eval->add_option("--iterations", eval_iterations, "iteration count j");
  cmd_eval->add_option("--seed", eval_seed, "iteration seed");

  // check
  auto* cmd_check = app.add_subcommand("check", "theorem condition checkers");
  cmd_check->require_subcommand(1);

  auto* cmd_meta = cmd_check->add_subcommand("meta", "metatheorem conditions");
  std::string meta_fn;
  double meta_tmax = 1e6;
  unsigned meta_cmax = 64;
  cmd_meta->add_option("--fn", meta_fn, "gap function")->required();
  cmd_meta->add_option("--t-max", meta_tmax, "t grid upper end");
  cmd_meta->add_option("--c-max", meta_cmax, "c grid upper end");

  auto* cmd_growth = cmd_check->add_subcommand("growth", "iterated growth bound");
  std::string growth_fn, growth_budget, growth_nmin = "2", growth_nmax = "1000000";
  std::string growth_alpha, growth_beta;
  unsigned growth_lambda = 6;
  cmd_growth->add_option("--fn", growth_fn, "gap function")->required();
  cmd_growth->add_option("--budget", growth_budget, "ambiguity budget")->required();
  cmd_growth->add_option("--lambda", growth_lambda, "lambda seed");
  cmd_growth->add_option("--n-min", growth_nmin, "range start");
  cmd_growth->add_option("--n-max", growth_nmax, "range end (accepts 2^64)");
  cmd_growth->add_option("--alpha", growth_alpha, "envelope constant (default: proof value)");
  cmd_growth->add_option("--beta", growth_beta, "envelope exponent (default: proof value)");

  auto* cmd_ilog = cmd_check->add_subcommand("ilog", "log-star vs log-circled-star bounds");
  double ilog_max = 1e6;
  unsigned ilog_points = 10000, ilog_towers = 6;
  cmd_ilog->add_option("--grid-max", ilog_max, "grid upper end");
  cmd_ilog->add_option("--grid-points", ilog_points, "grid size");
  cmd_ilog->add_option("--towers", ilog_towers, "also check ^n 2 for n up to this");

  auto* cmd_sep = cmd_check->add_subcommand("separation", "tower-height separation");
  unsigned sep_n = 4;
  cmd_sep->add_option("--n", sep_n, "tower height (>= 2)");

  auto* cmd_spec = cmd_check->add_subcommand("spec", "run a theorem-check spec document");
  std::string spec_file;
  cmd_spec->add_option("--file", spec_file, "TheoremCheckSpec JSON document")->required();

  CLI11_PARSE(app, argc, argv);

  Emitter emitter;
  emitter.json = json_flag;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--json" || arg == "--human") continue;
    if (!emitter.command.empty()) emitter.command += " ";
    emitter.command += arg;
  }

  try {
    if (cmd_print->parsed()) {
      TargetSet set = resolve_set(print_set);
      Json payload;
      payload["set"] = set.description();
      if (!print_geq.empty()) {
        payload["geq"] = print_geq;
        payload["least_element"] = to_decimal(set.least_element_geq(parse_big(print_geq)));
      } else if (print_min_length > 0) {
        payload["min_length"] = print_min_length;
        payload["smallest_element"] =
            to_decimal(set.smallest_element_with_min_length(print_min_length));
      } else if (!print_member.empty()) {
        MembershipCheck mc = set.check_member(parse_big(print_member));
        payload["value"] = print_member;
        payload["member"] = mc.member;
        payload["probabilistic"] = mc.probabilistic;
      } else if (print_ll > 0) {
        payload["exponent"] = print_ll;
        payload["mersenne_prime"] = lucas_lehmer(print_ll);
      } else {
        payload["max_length"] = print_len;
        Json elems = Json::array();
        for (const Integer& v : set.elements_up_to_length(print_len)) {
          elems.push_back(to_decimal(v));
        }
        payload["elements"] = elems;
      }
      return emitter.emit(Status::Data, payload);
    }

    if (cmd_gaps->parsed()) {
      TargetSet set = resolve_set(gaps_set);
      if (gaps_profile) {
        return emitter.emit(Status::Data,
                            render(successor_length_profile(set, gaps_len)));
      }
      GapFunction f = GapFunction::parse(gaps_fn);
      NongappyReport report = verify_nongappy(set, f, gaps_len);
      return emitter.emit(report.pass ? Status::Pass : Status::Fail, render(report));
    }

    if (cmd_density->parsed()) {
      MersenneDensityReport report =
          mersenne_density_report(density_count, density_ceiling);
      return emitter.emit(Status::Data, render(report));
    }

    if (cmd_constants->parsed()) {
      TargetSet set = resolve_set(const_set);
      ConstantTable table = build_constant_table(set, const_m, const_n0);
      Json payload = render(table);
      if (const_value_at >= 0) {
        payload["value_at"] = {
            {"k", const_value_at},
            {"value", to_decimal(acceptance_value(
                          table, static_cast<unsigned>(const_value_at)))}};
      }
      if (!const_check_fn.empty()) {
        if (const_check_budget.empty()) {
          throw std::domain_error("--check-fn needs --check-budget");
        }
        LengthBoundReport report = verify_length_bounds(
            table, GapFunction::parse(const_check_fn),
            AmbiguityBudget::parse(const_check_budget), parse_big(const_check_n));
        Json combined;
        combined["table"] = payload;
        combined["length_bounds"] = render(report);
        return emitter.emit(report.pass ? Status::Pass : Status::Fail, combined);
      }
      return emitter.emit(Status::Data, payload);
    }

    if (cmd_sim->parsed()) {
      PlantedSpec spec = parse_planted_spec(sim_planted);
      AmbiguityBudget budget = AmbiguityBudget::parse(sim_budget);
      ChoiceMachine base =
          make_planted_machine(spec, planted_guess_lengths(spec), budget);
      Json payload;
      payload["input"] = sim_input;
      Integer k = count_accepting(base, sim_input, sim_cap);
      payload["k"] = to_decimal(k);
      if (!sim_set.empty()) {
        TargetSet set = resolve_set(sim_set);
        ConstantTable table = build_constant_table(set, sim_m, sim_n0);
        TransformedMachine tm = rc_transform(base, table, budget);
        CountMode mode = sim_mode == "analytic" ? CountMode::Analytic
                       : sim_mode == "subsets"  ? CountMode::EnumAcceptingSubsets
                       : sim_mode == "all"      ? CountMode::EnumAllSubsets
                                                : throw std::domain_error(
                                                      "unknown mode '" + sim_mode + "'");
        payload["mode"] = sim_mode;
        payload["count"] = to_decimal(count_transformed(tm, sim_input, mode, sim_cap));
      }
      return emitter.emit(Status::Data, payload);
    }

    if (cmd_rc->parsed()) {
      PlantedSpec spec = parse_planted_spec(rc_planted);
      AmbiguityBudget budget = AmbiguityBudget::parse(rc_budget);
      ChoiceMachine base =
          make_planted_machine(spec, planted_guess_lengths(spec), budget);
      TargetSet set = resolve_set(rc_set);
      ConstantTable table = build_constant_table(set, rc_m, rc_n0);
      TransformedMachine tm = rc_transform(base, table, budget);
      std::vector<std::string> inputs = rc_inputs;
      if (inputs.empty()) {
        for (const auto& [input, witnesses] : spec) {
          (void)witnesses;
          inputs.push_back(input);
        }
      }
      RcMembershipReport report = verify_rc_membership(tm, set, inputs);
      Status status = report.verdict == RcMembershipReport::Verdict::Pass
                          ? Status::Pass
                      : report.verdict == RcMembershipReport::Verdict::Fail
                          ? Status::Fail
                          : Status::Inconclusive;
      return emitter.emit(status, render(report));
    }

    if (cmd_star->parsed()) {
      Json payload;
      payload["fn"] = star_fn;
      TowerReal arg = 0.0;
      bool have_tower = star_tower >= 0;
      if (have_tower) {
        arg = TowerReal::power_tower_of_two(static_cast<unsigned>(star_tower));
        payload["x"] = "^" + std::to_string(star_tower) + " 2";
      } else if (!star_x.empty()) {
        if (star_fn != "tet") arg = TowerReal(std::stod(star_x));
        payload["x"] = star_x;
      } else {
        throw std::domain_error("star: need --x or --tower");
      }
      if (star_fn == "logstar") {
        payload["value"] = log_star(arg);
      } else if (star_fn == "logcstar") {
        payload["value"] = log_circled_star(arg);
      } else if (star_fn == "slog") {
        payload["value"] = slog2(arg);
      } else if (star_fn == "sfrak") {
        payload["value"] = s_frak(arg.to_double());
      } else if (star_fn == "tet") {
        double h = have_tower ? double(star_tower) : std::stod(star_x);
        if (h >= 0 && h == std::floor(h)) {
          payload["value"] = to_decimal(
              tetration2_exact(static_cast<unsigned>(h), star_bit_cap));
        } else {
          payload["value"] = tetration2(h);
        }
      } else {
        throw std::domain_error("unknown star function '" + star_fn + "'");
      }
      return emitter.emit(Status::Data, payload);
    }

    if (cmd_eval->parsed()) {
      Json payload;
      if (!eval_budget.empty()) {
        AmbiguityBudget j = AmbiguityBudget::parse(eval_budget);
        payload["budget"] = j.describe();
        payload["n"] = eval_n;
        payload["value"] = j.eval(parse_big(eval_n));
      } else if (!eval_fn.empty()) {
        GapFunction f = GapFunction::parse(eval_fn);
        payload["fn"] = f.describe();
        payload["iterations"] = eval_iterations;
        payload["seed"] = eval_seed;
        payload["value"] =
            iterate_gap(f, eval_iterations, TowerReal(std::stod(eval_seed))).str();
      } else {
        throw std::domain_error("eval: need --budget or --fn");
      }
      return emitter.emit(Status::Data, payload);
    }

    if (cmd_meta->parsed()) {
      GapFunction f = GapFunction::parse(meta_fn);
      TheoremCheckSpec spec(f, AmbiguityBudget::constant(1));
      spec.t_range = default_t_range(f, meta_tmax);
      spec.c_range = default_c_range(meta_cmax);
      MetaConditionReport report = check_meta_conditions(f, spec);
      return emitter.emit(report.pass ? Status::Pass : Status::Fail, render(report));
    }

    if (cmd_growth->parsed()) {
      GapFunction f = GapFunction::parse(growth_fn);
      AmbiguityBudget j = AmbiguityBudget::parse(growth_budget);
      TheoremCheckSpec spec(f, j);
      spec.lambda = growth_lambda;
      Envelope env = default_envelope(f, j, growth_lambda);
      spec.alpha = growth_alpha.empty() ? env.alpha : TowerReal(std::stod(growth_alpha));
      spec.beta = growth_beta.empty() ? env.beta : TowerReal(std::stod(growth_beta));
      spec.n_range = default_n_range(j, parse_big(growth_nmin), parse_big(growth_nmax));
      GrowthBoundReport report = check_growth_bound(spec);
      Status status = report.violations > 0      ? Status::Fail
                      : report.inconclusive > 0  ? Status::Inconclusive
                                                 : Status::Pass;
      return emitter.emit(status, render(report));
    }

    if (cmd_ilog->parsed()) {
      std::vector<TowerReal> alphas;
      for (unsigned i = 0; i <= ilog_points; ++i) {
        alphas.push_back(ilog_max * i / ilog_points);
      }
      for (unsigned n = 0; n <= ilog_towers; ++n) {
        alphas.push_back(TowerReal::power_tower_of_two(n));
      }
      IlogBoundsReport report = check_ilog_bounds(alphas);
      // the full grid is large; report violations plus a digest
      Json payload;
      payload["points"] = alphas.size();
      payload["violations"] = report.violations;
      payload["pass"] = report.pass;
      Json bad = Json::array();
      for (const auto& row : report.rows) {
        if (!row.ok) {
          bad.push_back({{"alpha", row.alpha},
                         {"log_star", row.log_star},
                         {"log_circled_star", row.log_circled_star},
                         {"lower", row.lower}});
        }
      }
      payload["failures"] = bad;
      return emitter.emit(report.pass ? Status::Pass : Status::Fail, payload);
    }

    if (cmd_sep->parsed()) {
      SeparationReport report = check_separation(sep_n);
      return emitter.emit(report.pass ? Status::Pass : Status::Fail, render(report));
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  std::cerr << "error: no subcommand executed\n";
  return 2;
}
