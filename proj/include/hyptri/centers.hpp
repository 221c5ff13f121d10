#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hyptri/trig.hpp"

namespace hyptri {

// `point` is always the constructive (incidence) result; `coords` is the
// closed-form triangular coordinate triple where one exists, otherwise the
// measured one.
struct CenterResult {
  std::string name;
  HPoint point;
  TriCoords coords{};
  PointKind kind = PointKind::Real;
  std::map<std::string, double> aux;
};

// |tanh| of the extended distance from a center to a real point of its
// cycle; valid for real, infinite and ideal centers.
double tanh_radius(const HPoint& center, const HPoint& on_cycle);
// |tanh| of the extended distance from a point of any kind to a real line.
double tanh_point_line(const HPoint& p, const HLine& l);

// Midpoint of the real segment between two real points.
HPoint midpoint(const HPoint& p, const HPoint& q);
// Point at distance r from a real point x, in direction theta measured from
// the ray toward `ref`.
HPoint offset_point(const HPoint& x, const HPoint& ref, double r, double theta);

CenterResult centroid(const TriangleData& t);
// O, O_A, O_B, O_C.
std::array<CenterResult, 4> circumcenters(const TriangleData& t);
// I, I_A, I_B, I_C.
std::array<CenterResult, 4> incenter_excenters(const TriangleData& t);
CenterResult orthocenter(const TriangleData& t);

struct IsogonalResult {
  HPoint point;          // meet of the reflected cevians
  TriCoords coords{};    // sinh²a/n_A(X) : sinh²b/n_B(X) : sinh²c/n_C(X)
  PointKind kind = PointKind::Real;
  bool at_infinity = false;  // reflected cevians meet in a non-real point
  double concurrency = 0.0;  // incidence residual of the third reflected cevian
};

IsogonalResult isogonal_conjugate(const HPoint& x, const TriangleData& t);
CenterResult symmedian_point(const TriangleData& t);
CenterResult lemoine_point(const TriangleData& t);

struct PseudoCenter {
  CenterResult center;
  std::array<HPoint, 3> feet;            // on BC, CA, AB
  std::array<double, 3> foot_params{};   // arclength from the first vertex of the side
  std::array<bool, 3> inside{true, true, true};
};

PseudoCenter pseudo_centroid(const TriangleData& t);

// Foot on line PQ of the pseudoaltitude from V (signed arclength from P).
struct PseudoFoot {
  double u;
  HPoint point;
  bool inside;
};
PseudoFoot pseudo_altitude_foot(const HPoint& v, const HPoint& p, const HPoint& q);
PseudoCenter pseudo_orthocenter(const TriangleData& t);

struct EulerReport {
  double det_OFS = 0, det_OFZ = 0, det_OSZ = 0, det_FSZ = 0;
  double max_det = 0;
  double det_OFbis_S = 0;  // with F taken from the bisector feet instead
  double det_OMH = 0;
  double isosceles_measure = 0;  // |a-b|·|b-c|·|c-a|
  bool z_found = true;
  std::string z_error;
};

EulerReport euler_line(const TriangleData& t);

struct MinimalityReport {
  bool incenter_minimal = false;
  double incenter_margin = 0;          // min over grid of f(P) - f(I)
  double incenter_closed_form = 0;     // max relative |f(P) - (N/2) cosh PI|
  double pair_identity = 0;            // max relative residual of the fixed-Q identity
  bool centroid_minimal = false;
  double centroid_margin = 0;
  double centroid_closed_form = 0;     // max relative residual of the cosh YM identity
  bool circumcenter_real = false;
  bool circumcenter_minimal = false;
  double circumcenter_margin = 0;
  double circumcenter_closed_form = 0; // max relative |f(P) - n cosh PO / cosh R|
};

// Perturbation grid of 8 directions × radii {1e-3, 1e-2, 1e-1}; `samples`
// random points for the closed forms, drawn from `seed`.
MinimalityReport incenter_minimality(const TriangleData& t, int samples, std::uint64_t seed);

void to_json(nlohmann::json& j, const CenterResult& c);

}  // namespace hyptri
