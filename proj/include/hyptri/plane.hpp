#pragma once

// The extended projective hyperbolic plane in homogeneous coordinates (x, y, w)
// with the form <P,Q> = w w' - x x' - y y'. Points and lines share the same
// triple type; P lies on l iff <P,l> = 0.

#include <array>
#include <utility>

#include <json.hpp>

#include "hyptri/ext_scalar.hpp"

namespace hyptri {

struct Vec3 {
  double x = 0.0, y = 0.0, w = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : w); }
  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.w + b.w}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.w - b.w}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.w}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.w}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

double mink(const Vec3& a, const Vec3& b);
inline double quad(const Vec3& a) { return mink(a, a); }
// Euclidean helpers on raw triples.
double euclid_norm(const Vec3& a);
double max_norm(const Vec3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
double det3(const Vec3& a, const Vec3& b, const Vec3& c);
// |det| of the three triples after scaling each to unit Euclidean length.
double normalized_det(const Vec3& a, const Vec3& b, const Vec3& c);
// Distance between the projective classes of a and b (0 iff proportional).
double projective_gap(const Vec3& a, const Vec3& b);
// |<p,l>| / (|p| |l|); zero iff p is incident with l.
double incidence_residual(const Vec3& p, const Vec3& l);

inline constexpr double kClassifyEps = 1e-9;

struct HPoint {
  Vec3 h;
};

struct HLine {
  Vec3 h;
};

HPoint klein_point(double x, double y);
PointKind classify(const HPoint& p);
LineKind line_kind(const HLine& l);
// Real point scaled to Q = 1, w > 0. Throws OutOfDomain for non-real input.
Vec3 normalized(const HPoint& p);
std::array<double, 2> to_klein(const HPoint& p);

HLine join(const HPoint& p, const HPoint& q);
HPoint meet(const HLine& l, const HLine& m);
HLine polar(const HPoint& p);
HPoint pole(const HLine& l);

// Hyperbolic distance of two real points; accurate for nearby points.
double real_distance(const HPoint& p, const HPoint& q);
// Signed distance of a real point to a real line (sign of <P,l>).
double signed_distance(const HPoint& p, const HLine& l);
// Point at signed arclength u from p toward q along the geodesic pq.
HPoint along(const HPoint& p, const HPoint& q, double u);
// Signed arclength coordinate of a real point x on line pq, measured from p.
double arc_param(const HPoint& p, const HPoint& q, const HPoint& x);
// Angle at real vertex v between the rays toward p and q, in [0, π].
double vertex_angle(const HPoint& v, const HPoint& p, const HPoint& q);

struct DistanceResult {
  ExtComplex ab;
  ExtComplex ba;
  LineKind carrier;
};

// Extended lengths of the two segments AB, BA. The first component belongs to
// the segment that is bounded in the Klein chart.
DistanceResult distance_ext(const HPoint& a, const HPoint& b);
// Angle pair of two lines, dispatched on the kinds of a, b and their meet.
ExtPair angle_ext(const HLine& a, const HLine& b);

HPoint foot_of_perpendicular(const HPoint& p, const HLine& l);
HLine perpendicular_bisector(const HPoint& p, const HPoint& q);
// Returns (internal, external) bisectors of the angle p1-v-p2.
std::pair<HLine, HLine> angle_bisectors(const HPoint& v, const HPoint& p1, const HPoint& p2);
HPoint reflect(const HPoint& p, const HLine& l);

enum class CycleKind { Circle, Paracycle, Hypercycle };
const char* to_string(CycleKind k);

struct Cycle {
  HPoint center;
  ExtLength radius;
  CycleKind kind;
};

Cycle cycle_through(const HPoint& p, const HPoint& q, const HPoint& r);

enum class Model { Klein, Poincare, Hyperboloid };
const char* to_string(Model m);
Model parse_model(const std::string& s);

struct ModelPoint {
  Model model;
  std::array<double, 3> coords;  // (x, y) for disks, (x, y, w) for the hyperboloid
};

ModelPoint model_convert(const ModelPoint& p, Model to);
HPoint from_model(const ModelPoint& p);
ModelPoint to_model(const HPoint& p, Model m);

void to_json(nlohmann::json& j, const HPoint& p);
void from_json(const nlohmann::json& j, HPoint& p);
void to_json(nlohmann::json& j, const Cycle& c);

}  // namespace hyptri
