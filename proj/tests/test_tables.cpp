#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyptri/error.hpp"
#include "hyptri/tables.hpp"

using namespace hyptri;

TEST_CASE("every populated cell reproduces its tabulated pair") {
  for (double d : {0.05, 0.3, 0.7, 1.3, 2.9}) {
    for (const auto& c : table_cases("all", d)) {
      INFO(c.name << " d=" << d);
      CHECK(c.pass);
      CHECK(c.quanta_match);
      CHECK(c.re_error <= 1e-12);
      CHECK(c.im_error <= 1e-12);
    }
  }
}

TEST_CASE("real-ideal cell with d = 0.3") {
  const auto cells = table_cases("T1:RId", 0.3);
  REQUIRE(cells.size() == 1);
  const auto& c = cells[0];
  CHECK(c.actual.first.re.value() == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(c.actual.first.im == kHalfPi);
  CHECK(c.actual.second.re.value() == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK(c.actual.second.im == kHalfPi);
}

TEST_CASE("domain and name errors") {
  CHECK_THROWS_AS(table_cases("T3:RR-R", 4.0), Error);
  CHECK_THROWS_AS(table_cases("T1:RR", -1.0), Error);
  CHECK_THROWS_AS(table_cases("nope", 0.5), Error);
  CHECK(table_case_names().size() == 19);
}

TEST_CASE("cell json") {
  const nlohmann::json j = table_cases("T2:IdId", 0.5)[0];
  CHECK(j.at("case") == "T2:IdId");
  CHECK(j.at("pass") == true);
  CHECK(j.at("expected").size() == 2);
}
