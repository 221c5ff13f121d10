#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hyptri/error.hpp"
#include "hyptri/harness.hpp"

using namespace hyptri;

namespace {

TriangleData equilateral() {
  GenConstraints c;
  c.shape = Shape::Equilateral;
  return gen_triangle(1, c);
}

bool same_triangle(const TriangleData& x, const TriangleData& y) {
  for (int i = 0; i < 3; ++i) {
    if (!(x.verts()[i].h == y.verts()[i].h)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("registry covers exactly the expected identities") {
  const std::vector<std::string> expected{
      "LS",  "LC1", "LC2", "AR1", "AR2", "HER", "LQ1", "LQ2", "LQ3", "LQ4", "LQ5", "LQ6", "LQ7", "ST1",
      "ST2", "ST3", "ST4", "AS1", "AS2", "AS3", "AS4", "AS5", "AS6", "AS7", "CE1", "CE2", "CE3", "CE4",
      "CE5", "CR1", "CR2", "CR3", "IN1", "IN2", "IN3", "IN4", "IN5", "IN6", "IN7", "RI1", "RI2", "RI3",
      "RI4", "RI5", "RI6", "OI1", "OR1", "OR2", "OR3", "OR4", "OR5", "OR6", "STW", "STW-EU", "ORP", "IS1",
      "IS2", "IS3", "IS4", "MIN1", "MIN2", "SY1", "SY2", "LE1", "LE2", "PM1", "PM2", "CG1", "CG2", "CG3",
      "PMF", "EU1", "EU0", "TBL1", "TBL2", "TBL3", "FIG2"};
  const auto ids = registry_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()) == std::set<std::string>(expected.begin(), expected.end()));
  CHECK(ids.size() == expected.size());  // no duplicates
  for (const auto& s : registry()) {
    INFO(s.id);
    CHECK(!s.anchor.empty());
    const double tol = s.id == "EU1" ? 1e-8 : (s.id == "STW-EU" ? 1e-6 : 1e-9);
    CHECK(s.tolerance == tol);
  }
}

TEST_CASE("generator: determinism and constraints") {
  CHECK(same_triangle(gen_triangle(1), gen_triangle(1)));
  const TriangleData a = gen_triangle(1), b = gen_triangle(2);
  CHECK(!same_triangle(a, b));
  for (const TriangleData& t : {a, b}) {
    for (const auto& v : t.verts()) {
      const auto k = to_klein(v);
      CHECK(std::hypot(k[0], k[1]) <= 0.95);
    }
    CHECK(std::min({t.alpha, t.beta, t.gamma}) >= 0.05);
    CHECK(std::min({t.a, t.b, t.c}) >= 0.05);
  }

  const TriangleData e = equilateral();
  const auto& v = e.verts();
  double r0 = 0;
  for (int i = 0; i < 3; ++i) {
    const auto k = to_klein(v[i]);
    const double r = std::hypot(k[0], k[1]);
    if (i == 0) r0 = r;
    CHECK(r == doctest::Approx(r0).epsilon(1e-14));
    const auto kn = to_klein(v[(i + 1) % 3]);
    const double turn = std::remainder(std::atan2(kn[1], kn[0]) - std::atan2(k[1], k[0]), 2 * kPi);
    CHECK(std::abs(turn) == doctest::Approx(2 * kPi / 3).epsilon(1e-12));
  }

  GenConstraints iso;
  iso.shape = Shape::Isosceles;
  const TriangleData ti = gen_triangle(3, iso);
  CHECK(std::min({std::abs(ti.a - ti.b), std::abs(ti.b - ti.c), std::abs(ti.c - ti.a)}) < 1e-10);
  GenConstraints right;
  right.shape = Shape::Right;
  const TriangleData tr = gen_triangle(3, right);
  CHECK(tr.gamma == doctest::Approx(kPi / 2).epsilon(1e-10));
  GenConstraints acute;
  acute.shape = Shape::Acute;
  for (std::uint64_t s = 1; s <= 50; ++s) CHECK(std::max({gen_triangle(s, acute).alpha, gen_triangle(s, acute).beta,
                                                          gen_triangle(s, acute).gamma}) < kPi / 2);

  GenConstraints impossible;
  impossible.max_radius = 0.05;
  impossible.min_side = 2.0;
  CHECK_THROWS_AS(gen_triangle(1, impossible), Error);
}

TEST_CASE("spot checks of single identities") {
  const IdentityRecord her = run_identity("HER", equilateral());
  CHECK(her.status == Status::Pass);
  CHECK(her.residual < 1e-12);
  const IdentityRecord eu = run_identity("EU1", gen_triangle(7), 7);
  CHECK(eu.status == Status::Pass);
  const IdentityRecord oi = run_identity("OI1", gen_triangle(3), 3);
  CHECK(oi.status == Status::Pass);
  CHECK(oi.residual < 1e-9);
  CHECK_THROWS_AS(run_identity("NOPE", equilateral()), Error);
}

TEST_CASE("property: record status invariants over seeds") {
  SuiteOptions opt;
  const auto reports = run_seeds(1, 60, opt, 2);
  REQUIRE(reports.size() == 60);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].seed == i + 1);
    CHECK(reports[i].records.size() == registry().size());
    for (const auto& r : reports[i].records) {
      INFO(r.id << " seed " << r.seed);
      if (r.status == Status::Skipped) {
        CHECK(!r.reason.empty());
      } else {
        CHECK((r.status == Status::Pass) == (r.residual < r.tolerance));
      }
    }
  }
}

TEST_CASE("property: reports are identical at any parallelism") {
  SuiteOptions opt;
  const std::string one = report_lines(run_seeds(1, 40, opt, 1));
  CHECK(one == report_lines(run_seeds(1, 40, opt, 3)));
  CHECK(one == report_lines(run_seeds(1, 40, opt, 8)));
  CHECK(one == report_lines(run_seeds(1, 40, opt, 1)));
}

TEST_CASE("suite options") {
  SuiteOptions opt;
  opt.ids = {"LS", "HER"};
  const TrialReport r = run_suite(gen_triangle(5), 5, opt);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].id == "LS");
  opt.ids = {"MIN1", "LS"};
  opt.fail_fast = true;
  const auto reps = run_seeds(1, 5, opt, 2);
  // MIN1 fails on every seed, so the fail-fast run stops at the first seed and record.
  CHECK(reps.size() == 1);
  CHECK(reps[0].records.size() == 1);
  opt.ids = {"BOGUS"};
  CHECK_THROWS_AS(run_seeds(1, 2, opt, 2), Error);
}

TEST_CASE("summary and json lines") {
  SuiteOptions opt;
  opt.ids = {"LS", "MIN1"};
  const auto reps = run_seeds(1, 3, opt, 1);
  const Summary s = summarize(reps);
  CHECK(s.trials == 3);
  CHECK(s.pass + s.fail + s.skipped == 6);
  const std::string text = report_lines(reps);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 7);
  const auto first = nlohmann::json::parse(text.substr(0, text.find('\n')));
  for (const char* key : {"seed", "id", "anchor", "residual", "tolerance", "status", "reason"}) CHECK(first.contains(key));
  const auto last = nlohmann::json::parse(text.substr(text.rfind('\n', text.size() - 2) + 1));
  CHECK(last.at("summary").at("trials") == 3);
}

TEST_CASE("center table") {
  const auto rows = center_table(gen_triangle(4), {"all"});
  CHECK(rows.size() == center_names().size());
  for (const auto& r : rows) CHECK((r.result.has_value() || !r.error.empty()));
  CHECK_THROWS_AS(center_table(gen_triangle(4), {"Q"}), Error);
}

TEST_CASE("triangle json round trip in every model") {
  const TriangleData t = gen_triangle(9);
  for (Model m : {Model::Klein, Model::Poincare, Model::Hyperboloid}) {
    const nlohmann::json j = triangle_to_json(t, 9, m);
    const LoadedTriangle back = triangle_from_json(j);
    CHECK(back.seed == 9);
    CHECK(back.triangle.a == doctest::Approx(t.a).epsilon(1e-12));
    CHECK(back.triangle.beta == doctest::Approx(t.beta).epsilon(1e-12));
  }
  CHECK_THROWS_AS(triangle_from_json(nlohmann::json{{"vertices", {1, 2}}}), Error);
  CHECK_THROWS_AS(read_triangle("/nonexistent/tri.json"), Error);
}
