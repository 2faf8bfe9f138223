#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "rcgap/choice_machine.hpp"
#include "rcgap/constant_table.hpp"
#include "rcgap/gap_scan.hpp"
#include "rcgap/theorem_checks.hpp"

namespace rcgap {

using Json = nlohmann::ordered_json;

// Every big integer serializes as a decimal string.
Json render(const ConstantTable& table);
Json render(const LengthBoundReport& report);
Json render(const std::vector<SuccessorEntry>& profile);
Json render(const NongappyReport& report);
Json render(const MersenneDensityReport& report);
Json render(const RcMembershipReport& report);
Json render(const MetaConditionReport& report);
Json render(const GrowthBoundReport& report);
Json render(const IlogBoundsReport& report);
Json render(const SeparationReport& report);

// PlantedSpec file: a JSON object mapping each input string to its list of
// witness guess bit-strings.
PlantedSpec parse_planted_spec(const std::filesystem::path& path);
PlantedSpec parse_planted_spec_text(const std::string& text);

// Decimal, or base^exponent as "2^64".
Integer parse_integer_expr(const std::string& text);

// TheoremCheckSpec as a JSON document:
//   {"fn": "linear:k=2", "budget": "log:d=1", "lambda": 6,
//    "variant": "meta1"?, "alpha": 1.0?, "beta": 5.0?,
//    "check": "meta"|"growth"|"both"?,
//    "n_min": "2"?, "n_max": "1000000"?, "t_max": 1e6?, "c_max": 64?}
// Omitted alpha/beta default to the proof envelopes; omitted variant to the
// gap function's own; omitted grids to the documented defaults.
struct TheoremSpecDoc {
  TheoremCheckSpec spec;
  std::string check;  // "meta", "growth", or "both"
};
TheoremSpecDoc parse_theorem_spec(const std::filesystem::path& path);
TheoremSpecDoc parse_theorem_spec_text(const std::string& text);

}  // namespace rcgap
