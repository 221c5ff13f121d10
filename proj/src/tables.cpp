#include "hyptri/tables.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "hyptri/error.hpp"

namespace hyptri {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ExtComplex cx(ExtReal re, double im = 0.0) { return ExtComplex{re, im}; }
ExtPair pair_of(ExtComplex a, ExtComplex b) { return ExtPair{a, b}; }
ExtPair pair_of(const DistanceResult& r) { return ExtPair{r.ab, r.ba}; }
ExtPair pair_of(const std::pair<ExtLength, ExtLength>& p) {
  return ExtPair{ExtComplex::from(p.first), ExtComplex::from(p.second)};
}

const ExtPair kInfinitePair{cx(ExtReal::pos_inf()), cx(ExtReal::neg_inf())};

double re_gap(const ExtReal& x, const ExtReal& y) {
  if (x.is_finite() && y.is_finite()) return std::abs(x.value() - y.value());
  return x.kind() == y.kind() ? 0.0 : kInf;
}

void require(bool ok, const std::string& name, const char* range) {
  if (!ok) throw Error(ErrorCode::OutOfDomain, name + " needs " + range);
}

HPoint pt(double x, double y, double w) { return HPoint{{x, y, w}}; }
HLine ln(double x, double y, double w) { return HLine{{x, y, w}}; }

struct CaseDef {
  std::string configuration;
  bool is_length;
  std::function<void(double, const std::string&, ExtPair&, ExtPair&)> build;
};

const std::vector<std::pair<std::string, CaseDef>>& cases() {
  static const std::vector<std::pair<std::string, CaseDef>> defs = {
      {"T1:RR",
       {"origin and the real point at distance d on the x-axis", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          a = pair_of(distance_ext(pt(0, 0, 1), pt(std::sinh(d), 0, std::cosh(d))));
          e = pair_of(cx(d), cx(-d, kPi));
        }}},
      {"T1:RIn",
       {"real point at distance d from the origin and the end (1,0) of the x-axis", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          a = pair_of(distance_ext(pt(std::sinh(d), 0, std::cosh(d)), pt(1, 0, 1)));
          e = kInfinitePair;
        }}},
      {"T1:RId",
       {"real point at signed distance d from the polar x = tanh 1 of an ideal point on the x-axis", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(std::abs(d) < 20, n, "|d| < 20");
          a = pair_of(distance_ext(pt(std::sinh(1 - d), 0, std::cosh(1 - d)), pt(std::cosh(1.0), 0, std::sinh(1.0))));
          e = pair_of(cx(d, kHalfPi), cx(-d, kHalfPi));
        }}},
      {"T1:InIn",
       {"the two ends of the x-axis", true,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = pair_of(distance_ext(pt(1, 0, 1), pt(-1, 0, 1)));
          e = kInfinitePair;
        }}},
      {"T1:InId",
       {"end (1,0) of the x-axis and the ideal point whose polar is x = tanh d", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          a = pair_of(distance_ext(pt(1, 0, 1), pt(std::cosh(d), 0, std::sinh(d))));
          e = kInfinitePair;
        }}},
      {"T1:IdId",
       {"ideal points on the x-axis with polars x = ±tanh(d/2) crossing the segment", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          const double p = 0.5 * d;
          a = pair_of(distance_ext(pt(std::cosh(p), 0, std::sinh(p)), pt(-std::cosh(p), 0, std::sinh(p))));
          e = pair_of(cx(d, kPi), cx(-d));
        }}},
      {"T2:InIn",
       {"two points at infinity of one tangent line (not realizable; lengths taken from the rule)", true,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = pair_of(segment_lengths(LineKind::AtInfinity, PointKind::Infinite, PointKind::Infinite, 0.0));
          e = pair_of(cx(0.0), cx(0.0, kPi));
        }}},
      {"T2:InId",
       {"tangency point (1,0) and the ideal point (1,d) of the tangent x = 1", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d != 0, n, "d != 0");
          a = pair_of(distance_ext(pt(1, 0, 1), pt(1, d, 1)));
          e = pair_of(cx(0.0, kHalfPi), cx(0.0, kHalfPi));
        }}},
      {"T2:IdId",
       {"ideal points (1,d) and (1,2d) of the tangent x = 1", true,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d != 0, n, "d != 0");
          a = pair_of(distance_ext(pt(1, d, 1), pt(1, 2 * d, 1)));
          e = pair_of(cx(0.0), cx(0.0, kPi));
        }}},
      {"IL:IdId",
       {"directions 0 and d on the ideal line w = 0", false,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0 && d < kPi, n, "0 < d < pi");
          a = pair_of(distance_ext(pt(1, 0, 0), pt(std::cos(d), std::sin(d), 0)));
          e = pair_of(cx(0.0, d), cx(0.0, kPi - d));
        }}},
      {"T3:RR-R",
       {"x-axis and the diameter at angle d", false,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0 && d < kPi, n, "0 < d < pi");
          a = angle_ext(ln(0, 1, 0), ln(-std::sin(d), std::cos(d), 0));
          e = pair_of(cx(d), cx(kPi - d));
        }}},
      {"T3:RR-In",
       {"x-axis and a line through its end (1,0)", false,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = angle_ext(ln(0, 1, 0), join(pt(1, 0, 1), pt(0, 0.5, 1)));
          e = pair_of(cx(0.0), cx(kPi));
        }}},
      {"T3:RR-Id",
       {"ultraparallel lines x = ±tanh(d/2)", false,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          const double p = 0.5 * d;
          a = angle_ext(polar(pt(std::cosh(p), 0, std::sinh(p))), polar(pt(-std::cosh(p), 0, std::sinh(p))));
          e = pair_of(cx(0.0, -d), cx(kPi, d));
        }}},
      {"T3:RIn-In",
       {"x-axis and the tangent at its end (1,0)", false,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = angle_ext(ln(0, 1, 0), polar(pt(1, 0, 1)));
          e = pair_of(cx(kHalfPi), cx(kHalfPi));
        }}},
      {"T3:RIn-Id",
       {"x-axis and the tangent y = 1", false,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = angle_ext(ln(0, 1, 0), polar(pt(0, 1, 1)));
          e = kInfinitePair;
        }}},
      {"T3:RId-Id",
       {"y-axis and the polar of the real point at distance d on the x-axis", false,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          a = angle_ext(ln(1, 0, 0), polar(pt(std::sinh(d), 0, std::cosh(d))));
          e = pair_of(cx(kHalfPi, -d), cx(kHalfPi, d));
        }}},
      {"T3:InIn-Id",
       {"tangents x = 1 and y = 1", false,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = angle_ext(polar(pt(1, 0, 1)), polar(pt(0, 1, 1)));
          e = kInfinitePair;
        }}},
      {"T3:InId-Id",
       {"tangent x = 1 and the polar of the origin", false,
        [](double, const std::string&, ExtPair& e, ExtPair& a) {
          a = angle_ext(polar(pt(1, 0, 1)), polar(pt(0, 0, 1)));
          e = kInfinitePair;
        }}},
      {"T3:IdId-Id",
       {"polars of the origin and of the real point at distance d", false,
        [](double d, const std::string& n, ExtPair& e, ExtPair& a) {
          require(d > 0, n, "d > 0");
          a = angle_ext(polar(pt(0, 0, 1)), polar(pt(std::sinh(d), 0, std::cosh(d))));
          e = pair_of(cx(0.0, -d), cx(kPi, d));
        }}},
  };
  return defs;
}

bool quantum_exact(const ExtComplex& x, const ExtComplex& y) {
  if (!x.re.is_finite() || !y.re.is_finite()) return true;  // infinities carry no imaginary part
  return x.im == y.im;
}

TableCell evaluate(const std::string& name, const CaseDef& def, double d) {
  TableCell c;
  c.name = name;
  c.configuration = def.configuration;
  c.is_length = def.is_length;
  def.build(d, name, c.expected, c.actual);
  c.re_error = std::max(re_gap(c.expected.first.re, c.actual.first.re), re_gap(c.expected.second.re, c.actual.second.re));
  c.im_error = std::max(std::abs(c.expected.first.im - c.actual.first.im),
                        std::abs(c.expected.second.im - c.actual.second.im));
  c.quanta_match = !c.is_length ||
                   (quantum_exact(c.expected.first, c.actual.first) && quantum_exact(c.expected.second, c.actual.second));
  c.pass = c.re_error <= 1e-12 && c.im_error <= 1e-12 && c.quanta_match;
  return c;
}

}  // namespace

std::vector<std::string> table_case_names() {
  std::vector<std::string> out;
  for (const auto& [name, def] : cases()) out.push_back(name);
  return out;
}

std::vector<TableCell> table_cases(const std::string& name, double d) {
  std::vector<TableCell> out;
  for (const auto& [n, def] : cases()) {
    if (name == "all" || name == n) out.push_back(evaluate(n, def, d));
  }
  if (out.empty()) throw Error(ErrorCode::UnknownIdentity, "unknown table case: " + name);
  return out;
}

void to_json(nlohmann::json& j, const TableCell& c) {
  j = {{"case", c.name},
       {"configuration", c.configuration},
       {"expected", {c.expected.first, c.expected.second}},
       {"actual", {c.actual.first, c.actual.second}},
       {"re_error", c.re_error},
       {"im_error", c.im_error},
       {"quanta_match", c.quanta_match},
       {"pass", c.pass}};
}

}  // namespace hyptri
