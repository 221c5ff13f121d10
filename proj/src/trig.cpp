#include "hyptri/trig.hpp"

#include <cmath>
#include <string>

#include "hyptri/error.hpp"

namespace hyptri {

const std::array<HPoint, 3>& TriangleData::verts() const {
  if (!vertices) throw Error(ErrorCode::MissingVertices, "triangle was solved without vertices");
  return *vertices;
}

double staudtian(double a, double b, double c) {
  const double s = 0.5 * (a + b + c);
  return std::sqrt(std::sinh(s) * std::sinh(s - a) * std::sinh(s - b) * std::sinh(s - c));
}

double angular_staudtian(double alpha, double beta, double gamma) {
  const double d = 0.5 * (kPi - alpha - beta - gamma);
  return std::sqrt(std::sin(d) * std::sin(d + alpha) * std::sin(d + beta) * std::sin(d + gamma));
}

namespace {

void check_sides(double a, double b, double c) {
  if (!(a > 0 && b > 0 && c > 0)) throw Error(ErrorCode::DegenerateTriangle, "side lengths must be positive");
  if (a > kMaxSide || b > kMaxSide || c > kMaxSide) throw Error(ErrorCode::OverflowRisk, "side longer than 50");
  if (!(a < b + c && b < a + c && c < a + b)) throw Error(ErrorCode::DegenerateTriangle, "triangle inequality");
}

void finish(TriangleData& t) {
  t.s = 0.5 * (t.a + t.b + t.c);
  t.delta = 0.5 * (kPi - t.alpha - t.beta - t.gamma);
  if (!(t.delta > 0)) throw Error(ErrorCode::DegenerateTriangle, "non-positive defect");
  t.n = staudtian(t.a, t.b, t.c);
  t.N = angular_staudtian(t.alpha, t.beta, t.gamma);
}

// Angle opposite side x from the half-angle formulas.
double half_angle_solve(double x, double y, double z) {
  const double s = 0.5 * (x + y + z);
  const double den = std::sinh(y) * std::sinh(z);
  const double sn = std::sqrt(std::sinh(s - y) * std::sinh(s - z) / den);
  const double cs = std::sqrt(std::sinh(s) * std::sinh(s - x) / den);
  return 2.0 * std::atan2(sn, cs);
}

double half_side_solve(double xi, double eta, double zeta) {
  const double d = 0.5 * (kPi - xi - eta - zeta);
  return 2.0 * std::asinh(std::sqrt(std::sin(d) * std::sin(d + xi) / (std::sin(eta) * std::sin(zeta))));
}

Vec3 unit(const HPoint& p) { return normalized(p); }

}  // namespace

TriangleData solve_from_sides(double a, double b, double c) {
  check_sides(a, b, c);
  TriangleData t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.alpha = half_angle_solve(a, b, c);
  t.beta = half_angle_solve(b, c, a);
  t.gamma = half_angle_solve(c, a, b);
  finish(t);
  return t;
}

TriangleData solve_from_angles(double alpha, double beta, double gamma) {
  if (!(alpha > 0 && beta > 0 && gamma > 0)) throw Error(ErrorCode::DegenerateTriangle, "angles must be positive");
  if (!(alpha + beta + gamma < kPi)) throw Error(ErrorCode::DegenerateTriangle, "angle sum must be below pi");
  TriangleData t;
  t.alpha = alpha;
  t.beta = beta;
  t.gamma = gamma;
  t.a = half_side_solve(alpha, beta, gamma);
  t.b = half_side_solve(beta, gamma, alpha);
  t.c = half_side_solve(gamma, alpha, beta);
  if (t.a > kMaxSide || t.b > kMaxSide || t.c > kMaxSide) throw Error(ErrorCode::OverflowRisk, "side longer than 50");
  finish(t);
  return t;
}

TriangleData from_vertices(const HPoint& A, const HPoint& B, const HPoint& C) {
  for (const HPoint* p : {&A, &B, &C}) {
    if (classify(*p) != PointKind::Real) throw Error(ErrorCode::DegenerateTriangle, "vertices must be real");
  }
  if (normalized_det(unit(A), unit(B), unit(C)) < 1e-12) throw Error(ErrorCode::DegenerateTriangle, "collinear");
  TriangleData t;
  t.a = real_distance(B, C);
  t.b = real_distance(C, A);
  t.c = real_distance(A, B);
  check_sides(t.a, t.b, t.c);
  t.alpha = vertex_angle(A, B, C);
  t.beta = vertex_angle(B, C, A);
  t.gamma = vertex_angle(C, A, B);
  finish(t);
  t.vertices = std::array<HPoint, 3>{HPoint{unit(A)}, HPoint{unit(B)}, HPoint{unit(C)}};
  return t;
}

std::array<HPoint, 3> place_triangle(double a, double b, double c) {
  const TriangleData t = solve_from_sides(a, b, c);
  const HPoint A{{0.0, 0.0, 1.0}};
  const HPoint B{{std::sinh(c), 0.0, std::cosh(c)}};
  const HPoint C{{std::sinh(b) * std::cos(t.alpha), std::sinh(b) * std::sin(t.alpha), std::cosh(b)}};
  return {A, B, C};
}

double area(const TriangleData& t) { return 2.0 * t.delta; }

TriCoords tri_coords(const HPoint& x, const TriangleData& t) {
  const auto& v = t.verts();
  const double sides[3] = {t.a, t.b, t.c};
  TriCoords out{};
  for (int i = 0; i < 3; ++i) {
    const HLine side = join(v[(i + 1) % 3], v[(i + 2) % 3]);
    const double eps = signed_distance(v[i], side) > 0 ? 1.0 : -1.0;
    out[i] = 0.5 * std::sinh(eps * signed_distance(x, side)) * std::sinh(sides[i]);
  }
  return out;
}

TriCoords tri_coords_projective(const HPoint& x, const TriangleData& t) {
  const auto& v = t.verts();
  const Vec3 A = unit(v[0]);
  const Vec3 B = unit(v[1]);
  const Vec3 C = unit(v[2]);
  const Vec3 X = classify(x) == PointKind::Real ? unit(x) : (1.0 / max_norm(x.h)) * x.h;
  const double orient = det3(A, B, C) > 0 ? 0.5 : -0.5;
  return {orient * det3(X, B, C), orient * det3(A, X, C), orient * det3(A, B, X)};
}

HPoint combine(const TriCoords& k, const TriangleData& t) {
  const auto& v = t.verts();
  return HPoint{k[0] * unit(v[0]) + k[1] * unit(v[1]) + k[2] * unit(v[2])};
}

namespace {

// sinh u / sinh(L - u) = num / den, solved about the midpoint of the segment.
double solve_ratio(double L, double num, double den) {
  const double sum = num + den;
  if (sum == 0.0) throw Error(ErrorCode::NoSolution, "ratio -1 has no finite foot");
  const double arg = std::tanh(0.5 * L) * (num - den) / sum;
  if (!(std::abs(arg) < 1.0)) throw Error(ErrorCode::NoSolution, "foot is not a real point of the side line");
  return 0.5 * L + std::atanh(arg);
}

}  // namespace

double solve_sinh_ratio(double L, double rho) { return solve_ratio(L, rho, 1.0); }

HPoint point_from_coords(const TriCoords& k, const TriangleData& t) {
  const auto& v = t.verts();
  const double sides[3] = {t.a, t.b, t.c};
  int nonzero = 0;
  int nonpositive = 0;
  for (double x : k) {
    nonzero += x != 0.0;
    nonpositive += !(x > 0.0);
  }
  if (nonzero == 0) throw Error(ErrorCode::ZeroVector, "point_from_coords");
  if (nonzero == 1) {
    for (int i = 0; i < 3; ++i) {
      if (k[i] != 0.0) return v[i];
    }
  }
  if (nonpositive > 1) throw Error(ErrorCode::NoSolution, "more than one non-positive coordinate");

  // Cevian from vertex i meets the opposite side (i+1, i+2) where
  // sinh(V_{i+1} X) / sinh(X V_{i+2}) = k_{i+2} / k_{i+1}.
  std::array<std::optional<HLine>, 3> cevians;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int l = (i + 2) % 3;
    try {
      const double u = solve_ratio(sides[i], k[l], k[j]);
      cevians[i] = join(v[i], along(v[j], v[l], u));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSolution) throw;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!cevians[i] || !cevians[j]) continue;
      HPoint p;
      try {
        p = meet(*cevians[i], *cevians[j]);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CoincidentArguments) throw;
        continue;
      }
      const int third = 3 - i - j;
      if (cevians[third] && incidence_residual(p.h, cevians[third]->h) > 1e-9) {
        throw Error(ErrorCode::InconsistentCoords, "third cevian misses the meet of the other two");
      }
      return p;
    }
  }
  throw Error(ErrorCode::NoSolution, "fewer than two constructible cevians");
}

double cevian_ratio(const HPoint& x, const TriangleData& t, int side) {
  if (side < 0 || side > 2) throw Error(ErrorCode::OutOfDomain, "side index");
  const auto& v = t.verts();
  const double sides[3] = {t.a, t.b, t.c};
  const HPoint& p = v[(side + 1) % 3];
  const HPoint& q = v[(side + 2) % 3];
  const HPoint foot = meet(join(v[side], x), join(p, q));
  if (classify(foot) != PointKind::Real) throw Error(ErrorCode::CevianParallel, "cevian misses the side line");
  const double u = arc_param(p, q, foot);
  return std::sinh(u) / std::sinh(sides[side] - u);
}

double stewart_residual(const TriangleData& t, const HPoint& a_prime) {
  const auto& v = t.verts();
  if (classify(a_prime) != PointKind::Real) throw Error(ErrorCode::FootOutsideSegment, "foot is not real");
  if (incidence_residual(a_prime.h, join(v[1], v[2]).h) > 1e-12) {
    throw Error(ErrorCode::FootOutsideSegment, "point is off the line BC");
  }
  const double u = arc_param(v[1], v[2], a_prime);
  if (u < -1e-12 || u > t.a + 1e-12) throw Error(ErrorCode::FootOutsideSegment, "point is outside the segment BC");
  const double ba = u;
  const double ac = t.a - u;
  const double aa = real_distance(v[0], a_prime);
  return std::abs(std::cosh(t.c) * std::sinh(ac) + std::cosh(t.b) * std::sinh(ba) - std::cosh(aa) * std::sinh(t.a));
}

LambertQuad make_lambert(double a, double d) {
  if (!(a > 0 && d > 0)) throw Error(ErrorCode::DegenerateTriangle, "Lambert sides must be positive");
  if (!(std::sinh(a) * std::sinh(d) < 1.0)) throw Error(ErrorCode::NoSolution, "fourth vertex is not real");
  const HPoint A{{0.0, 0.0, 1.0}};
  const HPoint B{{std::sinh(a), 0.0, std::cosh(a)}};
  const HPoint D{{0.0, std::sinh(d), std::cosh(d)}};
  const HLine perp_b = join(B, pole(join(A, B)));
  const HLine perp_d = join(D, pole(join(A, D)));
  const HPoint C{normalized(meet(perp_b, perp_d))};
  return {a, real_distance(B, C), real_distance(C, D), d, vertex_angle(C, B, D), {A, B, C, D}};
}

double coords_gap(const TriCoords& u, const TriCoords& v) {
  return projective_gap({u[0], u[1], u[2]}, {v[0], v[1], v[2]});
}

void to_json(nlohmann::json& j, const TriangleData& t) {
  j = {{"a", t.a},         {"b", t.b}, {"c", t.c}, {"alpha", t.alpha}, {"beta", t.beta},
       {"gamma", t.gamma}, {"s", t.s}, {"delta", t.delta}, {"n", t.n}, {"N", t.N}};
  if (t.vertices) j["vertices"] = {(*t.vertices)[0], (*t.vertices)[1], (*t.vertices)[2]};
}

}  // namespace hyptri
