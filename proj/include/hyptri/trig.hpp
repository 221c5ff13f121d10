#pragma once

#include <array>
#include <optional>

#include <json.hpp>

#include "hyptri/plane.hpp"

namespace hyptri {

inline constexpr double kMaxSide = 50.0;

struct TriangleData {
  double a = 0, b = 0, c = 0;
  double alpha = 0, beta = 0, gamma = 0;
  double s = 0;      // semiperimeter
  double delta = 0;  // half defect
  double n = 0;      // Staudtian
  double N = 0;      // angular Staudtian
  std::optional<std::array<HPoint, 3>> vertices;

  // Vertices or MissingVertices.
  const std::array<HPoint, 3>& verts() const;
};

using TriCoords = std::array<double, 3>;

TriangleData solve_from_sides(double a, double b, double c);
TriangleData solve_from_angles(double alpha, double beta, double gamma);
// Sides and angles measured on the given real vertices.
TriangleData from_vertices(const HPoint& A, const HPoint& B, const HPoint& C);
// Real vertices realizing the given side lengths: A at the origin, B on the
// positive x-axis, C above it.
std::array<HPoint, 3> place_triangle(double a, double b, double c);

double area(const TriangleData& t);
double staudtian(double a, double b, double c);
double angular_staudtian(double alpha, double beta, double gamma);

// Signed Staudtian coordinates of a real point from distances to the sides.
TriCoords tri_coords(const HPoint& x, const TriangleData& t);
// Same quantities from determinants; defined for points of any kind.
TriCoords tri_coords_projective(const HPoint& x, const TriangleData& t);
// Direct linear combination n_A·A + n_B·B + n_C·C of the normalized vertices.
HPoint combine(const TriCoords& k, const TriangleData& t);

// Root u of sinh u / sinh(L - u) = rho, u in (-∞, ∞). NoSolution if the foot
// is not a real point of the line.
double solve_sinh_ratio(double L, double rho);

HPoint point_from_coords(const TriCoords& k, const TriangleData& t);

// Side index i is the side opposite vertex i: 0 = BC, 1 = CA, 2 = AB.
// Returns sinh(V1 X_i)/sinh(X_i V2) with (V1, V2) = (B, C), (C, A), (A, B).
double cevian_ratio(const HPoint& x, const TriangleData& t, int side);

// |cosh AB sinh A'C + cosh AC sinh BA' - cosh AA' sinh BC| for A' on segment BC.
double stewart_residual(const TriangleData& t, const HPoint& a_prime);

// Right-angled quadrangle with AB = a, DA = d; vertex angle phi at C.
struct LambertQuad {
  double a, b, c, d, phi;
  std::array<HPoint, 4> vertices;
};

LambertQuad make_lambert(double a, double d);

// Projective closeness of two triples up to a nonzero factor.
double coords_gap(const TriCoords& u, const TriCoords& v);

void to_json(nlohmann::json& j, const TriangleData& t);

}  // namespace hyptri
