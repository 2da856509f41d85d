#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "gravab/budget.hpp"
#include "gravab/error.hpp"
#include "oracle.hpp"

using namespace gravab;

TEST_CASE("baseline budget rows") {
  const BudgetReport r = build_budget(paper_baseline());
  REQUIRE(r.entries.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(r.entries[i].row == i + 1);
  CHECK(r.entries[0].agreement == Agreement::rounded_match);
  CHECK(r.entries[1].agreement == Agreement::match);
  CHECK(r.entries[2].agreement == Agreement::rounded_match);
  CHECK(r.entries[3].agreement == Agreement::discrepant);
  CHECK(r.entries[4].agreement == Agreement::rounded_match);
  CHECK(r.entries[5].agreement == Agreement::discrepant);
  CHECK(r.entries[6].agreement == Agreement::rounded_match);
  CHECK(r.entries[7].agreement == Agreement::derived_input);
  CHECK(r.entries[8].agreement == Agreement::discrepant);
  for (int row : {4, 6, 8, 9}) CHECK_FALSE(r.entries[row - 1].note.empty());

  // tags
  for (int row : {2, 4, 5}) CHECK(r.entries[row - 1].mass_independent);
  for (int row : {3, 6}) CHECK(r.entries[row - 1].common_arm);
  CHECK(r.entries[0].tags().empty());

  CHECK(r.delta_u_over_c2 == doctest::Approx(1.6e-27).epsilon(0.05));
  CHECK(r.saddle_separation * 100 == doctest::Approx(1.38).epsilon(0.01));
  CHECK(r.margin.signal_to_threshold == doctest::Approx(r.entries[0].computed_rad / 0.03));
  CHECK(r.margin.within_threshold);

  // row 8: pull of one sphere at the center point
  const double gm = oracle::G * 1e4 * 4.0 / 3.0 * oracle::pi * 1e-6;
  CHECK(r.single_mass_force == doctest::Approx(oracle::m_cs * gm / (0.015 * 0.015)).epsilon(1e-12));
}

TEST_CASE("missing parameters") {
  BudgetParams p = paper_baseline();
  p.species.reset();
  try {
    build_budget(p);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::incomplete_baseline);
  }
  BudgetParams q = paper_baseline();
  q.lattice.reset();
  CHECK_THROWS_AS(build_budget(q), Error);
}

TEST_CASE("rendering") {
  const BudgetReport r = build_budget(paper_baseline());
  const std::string csv = render_budget(r, "csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kBudgetCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9);
  CHECK(csv.find("mass-independent") != std::string::npos);

  const auto doc = nlohmann::json::parse(render_budget(r, "json"));
  REQUIRE(doc["rows"].size() == 9);
  CHECK(doc["rows"][0]["row"] == 1);
  CHECK(doc["rows"][1]["tags"][0] == "mass-independent");
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc["rows"][0].items()) keys.push_back(k);
  CHECK(keys.size() == 7);

  const std::string table = render_budget(r, "aligned-table");
  CHECK(table.find("Gravitostatic AB") != std::string::npos);
  CHECK(table.find("Earth's gravity**") != std::string::npos);
  CHECK(table.find("Lattice Shift*") != std::string::npos);
  try {
    render_budget(r, "xml");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_format);
  }
}
