#include "rcgap/json_io.hpp"

#include <doctest.h>

#include <fstream>

using namespace rcgap;

namespace {

Json read_fixture(const std::string& name) {
  std::ifstream in(std::string(RCGAP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("constant tables serialize to the golden fixtures") {
  ConstantTable primes = build_constant_table(TargetSet::primes(), 6, 2);
  CHECK(render(primes) == read_fixture("constants_primes_m6.json"));

  ConstantTable mersenne = build_constant_table(TargetSet::mersenne_primes(), 5, 2);
  CHECK(render(mersenne) == read_fixture("constants_mersenne_m5.json"));
}

TEST_CASE("integers serialize as decimal strings") {
  ConstantTable mersenne = build_constant_table(TargetSet::mersenne_primes(), 5, 2);
  Json j = render(mersenne);
  CHECK(j["c"].back() == "7811");
  CHECK(j["a"].back().is_string());
}

TEST_CASE("rendering is deterministic") {
  NongappyReport report =
      verify_nongappy(TargetSet::primes(), GapFunction::add_const(1), 16);
  CHECK(render(report).dump() == render(report).dump());

  MersenneDensityReport density = mersenne_density_report(8);
  CHECK(render(density).dump() == render(density).dump());
}

TEST_CASE("planted specs parse from the documented map format") {
  PlantedSpec spec = parse_planted_spec(std::string(RCGAP_FIXTURE_DIR) +
                                        "/planted_demo.json");
  CHECK(spec.size() == 4);
  CHECK(spec.at("0").empty());
  CHECK(spec.at("101") == std::set<std::string>{"001", "010", "100"});
  CHECK_THROWS_AS(parse_planted_spec_text("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_planted_spec_text("{\"x\": \"y\"}"), ParseError);
}
