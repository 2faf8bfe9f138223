#include "rcgap/json_io.hpp"

#include <fstream>

#include "rcgap/errors.hpp"

namespace rcgap {

namespace {

Json decimals(const std::vector<Integer>& values) {
  Json arr = Json::array();
  for (const Integer& v : values) arr.push_back(to_decimal(v));
  return arr;
}

}  // namespace

Json render(const ConstantTable& table) {
  Json j;
  j["set"] = table.set_description;
  j["n0"] = table.n0;
  j["lambda"] = table.lambda;
  j["m"] = table.size();
  j["a"] = decimals(table.a);
  // b starts at b_2; b_1 does not exist in the construction.
  Json b = Json::array();
  for (std::size_t i = 1; i < table.b.size(); ++i) b.push_back(to_decimal(table.b[i]));
  j["b"] = b;
  j["c"] = decimals(table.c);
  return j;
}

Json render(const LengthBoundReport& report) {
  Json j;
  j["budget_value"] = report.budget_value;
  j["variant"] = report.variant;
  j["max_c_bits"] = report.max_c_bits;
  j["overall_bound"] = report.overall_bound;
  j["overall_ok"] = report.overall_ok;
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"i", s.i},
                     {"c_bits", s.c_bits},
                     {"b_bits", s.b_bits},
                     {"step_bound", s.step_bound},
                     {"ok", s.ok}});
  }
  j["steps"] = steps;
  j["pass"] = report.pass;
  return j;
}

Json render(const std::vector<SuccessorEntry>& profile) {
  Json rows = Json::array();
  for (const auto& e : profile) {
    rows.push_back({{"element", to_decimal(e.element)},
                    {"successor", to_decimal(e.successor)},
                    {"length", e.length},
                    {"successor_length", e.successor_length}});
  }
  return Json{{"profile", rows}};
}

Json render(const NongappyReport& report) {
  Json j;
  j["set"] = report.set_description;
  j["gap_function"] = report.gap_function;
  j["n0"] = report.n0;
  j["max_length"] = report.max_length;
  j["pass"] = report.pass;
  Json pairs = Json::array();
  for (const auto& w : report.witnesses) {
    Json row;
    row["element"] = to_decimal(w.element);
    row["length"] = w.length;
    if (w.successor_length != 0) {
      row["successor"] = to_decimal(w.successor);
      row["successor_length"] = w.successor_length;
    }
    row["bound"] = w.bound;
    row["checked"] = w.checked;
    row["ok"] = w.ok;
    pairs.push_back(row);
  }
  j["witness_pairs"] = pairs;
  if (report.first_violation) {
    const auto& v = *report.first_violation;
    Json fv{{"element", to_decimal(v.element)},
            {"length", v.length},
            {"required_bound", v.required_bound},
            {"actual_next_length", v.actual_next_length}};
    if (!v.note.empty()) fv["note"] = v.note;
    j["first_violation"] = fv;
  }
  return j;
}

Json render(const MersenneDensityReport& report) {
  Json j;
  j["exponents"] = report.exponents;
  Json mu = Json::array();
  for (const auto& row : report.mu_table) {
    mu.push_back({{"length", row.length},
                  {"mu", row.mu},
                  {"e_gamma_log", row.reference}});
  }
  j["mu_table"] = mu;
  j["successor_ratios"] = report.successor_ratios;
  j["truncated"] = report.truncated;
  j["exponent_ceiling"] = report.exponent_ceiling;
  return j;
}

Json render(const RcMembershipReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.inputs) {
    Json row;
    row["input"] = r.input;
    if (r.error) {
      row["error"] = *r.error;
    } else {
      row["k"] = r.k;
      row["count"] = to_decimal(r.count);
      row["base_accepts"] = r.base_accepts;
      row["member"] = r.count_in_set;
      row["ok"] = r.ok;
      if (r.budget_violation) row["budget_violation"] = true;
      if (r.probabilistic) row["probabilistic"] = true;
    }
    rows.push_back(row);
  }
  const char* verdict = report.verdict == RcMembershipReport::Verdict::Pass
                            ? "pass"
                            : report.verdict == RcMembershipReport::Verdict::Fail
                                  ? "fail"
                                  : "inconclusive";
  return Json{{"verdict", verdict}, {"inputs", rows}};
}

Json render(const MetaConditionReport& report) {
  Json j;
  j["gap_function"] = report.gap_function;
  j["variant"] = report.variant;
  j["nondecreasing"] = report.nondecreasing;
  j["growth_floor"] = report.growth_floor;
  j["scaling"] = report.scaling;
  j["scaling_always_equal"] = report.scaling_always_equal;
  Json ces = Json::array();
  for (const auto& c : report.counterexamples) {
    ces.push_back({{"condition", c.condition},
                   {"t", c.t},
                   {"c", c.c},
                   {"lhs", c.lhs},
                   {"rhs", c.rhs}});
  }
  j["counterexamples"] = ces;
  j["pass"] = report.pass;
  return j;
}

Json render(const GrowthBoundReport& report) {
  Json j;
  j["gap_function"] = report.gap_function;
  j["budget"] = report.budget;
  j["variant"] = report.variant;
  j["lambda"] = report.lambda;
  j["alpha"] = report.alpha;
  j["beta"] = report.beta;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["n"] = to_decimal(r.n);
    row["j_n"] = r.j_n;
    if (r.error) {
      row["error"] = *r.error;
    } else {
      row["iterate"] = r.iterate;
      row["bound"] = r.bound;
      row["ok"] = r.ok;
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["max_ratio"] = report.max_ratio;
  j["violations"] = report.violations;
  j["inconclusive"] = report.inconclusive;
  j["pass"] = report.pass;
  return j;
}

Json render(const IlogBoundsReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"alpha", r.alpha},
                    {"log_star", r.log_star},
                    {"log_circled_star", r.log_circled_star},
                    {"lower", r.lower},
                    {"ok", r.ok}});
  }
  return Json{{"rows", rows},
              {"violations", report.violations},
              {"pass", report.pass}};
}

Json render(const SeparationReport& report) {
  Json j;
  j["n"] = report.n;
  j["log_star"] = report.log_star_value;
  j["log_circled_star"] = report.log_circled_star_value;
  j["lhs"] = report.lhs;
  j["s"] = report.s_value;
  j["floor_s"] = report.floor_s;
  j["lemma_rhs"] = report.lemma_rhs;
  j["theorem_bound"] = report.theorem_bound;
  j["lemma_consistent"] = report.lemma_consistent;
  j["floor_consistent"] = report.floor_consistent;
  j["bound_holds"] = report.bound_holds;
  j["pass"] = report.pass;
  return j;
}

PlantedSpec parse_planted_spec_text(const std::string& text) {
  Json doc = Json::parse(text);
  if (!doc.is_object())
    throw ParseError("planted spec must be a JSON object mapping inputs to witness lists");
  PlantedSpec spec;
  for (const auto& [input, witnesses] : doc.items()) {
    if (!witnesses.is_array())
      throw ParseError("planted spec: witnesses for '" + input + "' must be an array");
    std::set<std::string> set;
    for (const auto& w : witnesses) {
      if (!w.is_string())
        throw ParseError("planted spec: witness for '" + input + "' must be a string");
      set.insert(w.get<std::string>());
    }
    spec[input] = std::move(set);
  }
  return spec;
}

PlantedSpec parse_planted_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read planted spec: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_planted_spec_text(text);
}

Integer parse_integer_expr(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    Integer base(text.substr(0, caret));
    unsigned long exp = std::stoul(text.substr(caret + 1));
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
  }
  return Integer(text);
}

TheoremSpecDoc parse_theorem_spec_text(const std::string& text) {
  Json doc = Json::parse(text);
  if (!doc.is_object() || !doc.contains("fn") || !doc.contains("budget")) {
    throw ParseError("theorem spec must be an object with 'fn' and 'budget'");
  }
  GapFunction f = GapFunction::parse(doc["fn"].get<std::string>());
  AmbiguityBudget j = AmbiguityBudget::parse(doc["budget"].get<std::string>());
  TheoremSpecDoc out{TheoremCheckSpec(f, j), "both"};
  TheoremCheckSpec& spec = out.spec;
  spec.lambda = doc.value("lambda", 6u);
  if (doc.contains("variant")) {
    std::string v = doc["variant"].get<std::string>();
    if (v == "meta1") {
      spec.variant = MetaVariant::Meta1;
    } else if (v == "meta2") {
      spec.variant = MetaVariant::Meta2;
    } else {
      throw ParseError("variant must be meta1 or meta2, got '" + v + "'");
    }
  }
  Envelope env = default_envelope(f, j, spec.lambda);
  spec.alpha = doc.contains("alpha") ? TowerReal(doc["alpha"].get<double>())
                                     : env.alpha;
  spec.beta = doc.contains("beta") ? TowerReal(doc["beta"].get<double>())
                                   : env.beta;
  Integer n_min = doc.contains("n_min")
                      ? parse_integer_expr(doc["n_min"].get<std::string>())
                      : Integer(2);
  Integer n_max = doc.contains("n_max")
                      ? parse_integer_expr(doc["n_max"].get<std::string>())
                      : Integer(1000000);
  spec.n_range = default_n_range(j, n_min, n_max);
  spec.t_range = default_t_range(f, doc.value("t_max", 1e6));
  spec.c_range = default_c_range(doc.value("c_max", 64u));
  if (doc.contains("check")) {
    out.check = doc["check"].get<std::string>();
    if (out.check != "meta" && out.check != "growth" && out.check != "both") {
      throw ParseError("check must be meta, growth, or both");
    }
  }
  return out;
}

TheoremSpecDoc parse_theorem_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read theorem spec: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_theorem_spec_text(text);
}

}  // namespace rcgap
