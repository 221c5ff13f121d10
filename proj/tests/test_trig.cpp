#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyptri/error.hpp"
#include "hyptri/rng.hpp"
#include "hyptri/trig.hpp"

using namespace hyptri;

namespace {

TriangleData t0() { return from_vertices(klein_point(0, 0), klein_point(0.5, 0), klein_point(0, 0.5)); }

// Angle at a vertex from Euclidean vectors in the hyperboloid tangent plane.
double oracle_angle(const Vec3& v, const Vec3& p, const Vec3& q) {
  const auto tangent = [&](const Vec3& x) {
    const double k = mink(v, x) / mink(v, v);
    return x - k * v;
  };
  const Vec3 tp = tangent(p), tq = tangent(q);
  return std::acos(-mink(tp, tq) / std::sqrt(mink(tp, tp) * mink(tq, tq)));
}

TriangleData random_triangle(Rng& rng) {
  for (;;) {
    std::array<HPoint, 3> v;
    for (auto& p : v) {
      for (;;) {
        const double x = rng.uniform(-0.9, 0.9), y = rng.uniform(-0.9, 0.9);
        if (x * x + y * y < 0.81) {
          p = klein_point(x, y);
          break;
        }
      }
    }
    try {
      TriangleData t = from_vertices(v[0], v[1], v[2]);
      if (std::min({t.alpha, t.beta, t.gamma}) > 0.02) return t;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("right isosceles reference triangle") {
  const double leg = std::atanh(0.5);
  const TriangleData t = solve_from_sides(std::acosh(4.0 / 3.0), leg, leg);
  CHECK(t.alpha == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(t.beta == doctest::Approx(t.gamma).epsilon(1e-14));
  const Vec3 a{0, 0, 1}, b = klein_point(0.5, 0).h, c = klein_point(0, 0.5).h;
  CHECK(t.beta == doctest::Approx(oracle_angle(b, c, a)).epsilon(1e-13));
  CHECK(area(t) == doctest::Approx(kPi - (kPi / 2 + 2 * t.beta)).epsilon(1e-14));
  CHECK(t.n == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  const TriangleData tv = t0();
  CHECK(tv.a == doctest::Approx(t.a).epsilon(1e-14));
  CHECK(tv.n == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("equilateral triangle from its angles") {
  const TriangleData t = solve_from_angles(kPi / 6, kPi / 6, kPi / 6);
  const double expect = (std::sqrt(3.0) / 2 + 0.75) / 0.25;
  CHECK(std::cosh(t.a) == doctest::Approx(expect).epsilon(1e-13));
  CHECK(t.b == doctest::Approx(t.a).epsilon(1e-13));
  CHECK(staudtian(t.a, t.b, t.c) == doctest::Approx(staudtian(t.c, t.a, t.b)).epsilon(1e-14));
  CHECK_THROWS_AS(solve_from_angles(1.0, 1.0, kPi - 2.0), Error);
  CHECK_THROWS_AS(solve_from_sides(1.0, 1.0, 2.5), Error);
}

TEST_CASE("tiny triangles have vanishing area") {
  const TriangleData t = from_vertices(klein_point(0, 0), klein_point(1e-5, 0), klein_point(0, 1e-5));
  CHECK(area(t) < 1e-9);
}

TEST_CASE("triangular coordinates of vertices, incenter and centroid") {
  const TriangleData t = from_vertices(klein_point(-0.3, -0.2), klein_point(0.5, -0.1), klein_point(0.1, 0.6));
  const auto& v = t.verts();
  CHECK(coords_gap(tri_coords(v[0], t), {1, 0, 0}) < 1e-14);
  const HPoint m = point_from_coords({1, 1, 1}, t);
  CHECK(coords_gap(tri_coords(m, t), {1, 1, 1}) < 1e-12);
  const HPoint i = point_from_coords({std::sinh(t.a), std::sinh(t.b), std::sinh(t.c)}, t);
  const double d0 = std::abs(signed_distance(i, join(v[1], v[2])));
  CHECK(std::abs(signed_distance(i, join(v[2], v[0]))) == doctest::Approx(d0).epsilon(1e-12));
  CHECK(std::abs(signed_distance(i, join(v[0], v[1]))) == doctest::Approx(d0).epsilon(1e-12));
  const HPoint a = point_from_coords({1, 0, 0}, t);
  CHECK(projective_gap(a.h, v[0].h) < 1e-12);
}

TEST_CASE("cevian ratios") {
  const TriangleData t = from_vertices(klein_point(-0.3, -0.2), klein_point(0.5, -0.1), klein_point(0.1, 0.6));
  const auto& v = t.verts();
  const HPoint m = point_from_coords({1, 1, 1}, t);
  for (int s = 0; s < 3; ++s) CHECK(cevian_ratio(m, t, s) == doctest::Approx(1.0).epsilon(1e-12));
  // Bisector foot constructed by brute force: the point of BC equidistant from AB and AC.
  const HLine ab = join(v[0], v[1]), ac = join(v[0], v[2]);
  double lo = 0, hi = t.a;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const HPoint x = along(v[1], v[2], mid);
    (std::abs(signed_distance(x, ab)) < std::abs(signed_distance(x, ac)) ? lo : hi) = mid;
  }
  const double brute = std::sinh(lo) / std::sinh(t.a - lo);
  const HPoint i = point_from_coords({std::sinh(t.a), std::sinh(t.b), std::sinh(t.c)}, t);
  CHECK(cevian_ratio(i, t, 0) == doctest::Approx(brute).epsilon(1e-10));
  CHECK(cevian_ratio(i, t, 0) == doctest::Approx(std::sinh(t.c) / std::sinh(t.b)).epsilon(1e-12));
}

TEST_CASE("cevian ratio of the orthocenter against the altitude foot") {
  const TriangleData t = from_vertices(klein_point(-0.4, -0.3), klein_point(0.5, -0.2), klein_point(0.05, 0.5));
  const auto& v = t.verts();
  const HLine bc = join(v[1], v[2]);
  const HPoint foot = foot_of_perpendicular(v[0], bc);
  const HPoint h = meet(join(v[0], pole(bc)), join(v[1], pole(join(v[2], v[0]))));
  const double u = arc_param(v[1], v[2], foot);
  CHECK(cevian_ratio(h, t, 0) == doctest::Approx(std::sinh(u) / std::sinh(t.a - u)).epsilon(1e-10));
}

TEST_CASE("Stewart residual") {
  const TriangleData t = t0();
  const auto& v = t.verts();
  CHECK(stewart_residual(t, v[1]) < 1e-15);
  CHECK(stewart_residual(t, along(v[1], v[2], t.a / 2)) < 1e-12);
  CHECK_THROWS_AS(stewart_residual(t, along(v[1], v[2], -0.2)), Error);
}

TEST_CASE("property: classical relations on seeded triangles") {
  Rng rng(31);
  for (int i = 0; i < 2000; ++i) {
    const TriangleData t = random_triangle(rng);
    const double k = std::sinh(t.a) / std::sin(t.alpha);
    CHECK(std::sinh(t.b) / std::sin(t.beta) == doctest::Approx(k).epsilon(1e-10));
    CHECK(std::sinh(t.c) / std::sin(t.gamma) == doctest::Approx(k).epsilon(1e-10));
    const double lhs = std::sin(t.alpha / 2) * std::sin(t.beta / 2) * std::sin(t.gamma / 2) * std::sinh(t.s) *
                       std::sinh(t.a) * std::sinh(t.b) * std::sinh(t.c);
    CHECK(lhs == doctest::Approx(t.n * t.n).epsilon(1e-10));
    CHECK(2 * t.n * t.n == doctest::Approx(t.N * std::sinh(t.a) * std::sinh(t.b) * std::sinh(t.c)).epsilon(1e-10));
    CHECK(std::sinh(t.c / 2) ==
          doctest::Approx(std::sqrt(std::sin(t.delta) * std::sin(t.delta + t.gamma) / (std::sin(t.alpha) * std::sin(t.beta))))
              .epsilon(1e-10));
    CHECK(std::cosh(t.a / 2) * std::cosh(t.b / 2) * std::cosh(t.c / 2) ==
          doctest::Approx(t.N * t.N / (std::sin(t.alpha) * std::sin(t.beta) * std::sin(t.gamma) * std::sin(t.delta)))
              .epsilon(1e-10));
    // Sides solved back from the angles reproduce the vertices' sides.
    const TriangleData back = solve_from_angles(t.alpha, t.beta, t.gamma);
    CHECK(back.a == doctest::Approx(t.a).epsilon(1e-8));
  }
}

TEST_CASE("property: Lambert quadrangle relations") {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const double a = rng.uniform(0.05, 1.2);
    const double d = rng.uniform(0.05, 0.9 * std::asinh(1 / std::sinh(a)));
    const LambertQuad q = make_lambert(a, d);
    const auto& v = q.vertices;
    CHECK(real_distance(v[0], v[1]) == doctest::Approx(q.a).epsilon(1e-10));
    CHECK(real_distance(v[3], v[0]) == doctest::Approx(q.d).epsilon(1e-10));
    CHECK(vertex_angle(v[2], v[1], v[3]) == doctest::Approx(q.phi).epsilon(1e-10));
    CHECK(std::tanh(q.b) == doctest::Approx(std::tanh(q.d) * std::cosh(q.a)).epsilon(1e-10));
    CHECK(std::tanh(q.c) == doctest::Approx(std::tanh(q.a) * std::cosh(q.d)).epsilon(1e-10));
    CHECK(std::sinh(q.b) == doctest::Approx(std::sinh(q.d) * std::cosh(q.c)).epsilon(1e-10));
    CHECK(std::sinh(q.c) == doctest::Approx(std::sinh(q.a) * std::cosh(q.b)).epsilon(1e-10));
    CHECK(std::cos(q.phi) == doctest::Approx(std::sinh(q.a) * std::sinh(q.d)).epsilon(1e-10));
    CHECK(std::sin(q.phi) == doctest::Approx(std::cosh(q.d) / std::cosh(q.b)).epsilon(1e-10));
    CHECK(std::tan(q.phi) == doctest::Approx(1 / (std::tanh(q.a) * std::sinh(q.b))).epsilon(1e-10));
  }
}

TEST_CASE("property: coordinate round trip is the projective identity") {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const TriangleData t = random_triangle(rng);
    const TriCoords k{rng.uniform(0.1, 1), rng.uniform(0.1, 1), rng.uniform(0.1, 1)};
    CHECK(coords_gap(tri_coords(point_from_coords(k, t), t), k) < 1e-9);
  }
}

TEST_CASE("property: Stewart holds on the open segment") {
  Rng rng(34);
  for (int i = 0; i < 1000; ++i) {
    const TriangleData t = random_triangle(rng);
    const auto& v = t.verts();
    const HPoint ap = along(v[1], v[2], rng.uniform(0.01, 0.99) * t.a);
    const double scale = std::cosh(t.b) * std::sinh(t.a);
    CHECK(stewart_residual(t, ap) < 1e-12 * std::max(1.0, scale));
  }
}

TEST_CASE("sinh ratio solver") {
  Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    const double L = rng.uniform(0.01, 6.0), rho = rng.uniform(0.05, 20.0);
    const double u = solve_sinh_ratio(L, rho);
    CHECK(std::sinh(u) / std::sinh(L - u) == doctest::Approx(rho).epsilon(1e-10));
  }
}
