#include "hyptri/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "hyptri/error.hpp"
#include "hyptri/rng.hpp"

namespace hyptri {

Shape parse_shape(const std::string& s) {
  if (s == "any") return Shape::Any;
  if (s == "acute") return Shape::Acute;
  if (s == "isosceles") return Shape::Isosceles;
  if (s == "equilateral") return Shape::Equilateral;
  if (s == "right") return Shape::Right;
  throw Error(ErrorCode::ParseError, "unknown shape: " + s);
}

const char* to_string(Shape s) {
  switch (s) {
    case Shape::Any: return "any";
    case Shape::Acute: return "acute";
    case Shape::Isosceles: return "isosceles";
    case Shape::Equilateral: return "equilateral";
    case Shape::Right: return "right";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Generation

namespace {

Vec3 at_distance(double r, double theta) {
  return {std::sinh(r) * std::cos(theta), std::sinh(r) * std::sin(theta), std::cosh(r)};
}

// Boost of rapidity eta along direction theta.
Vec3 boost(const Vec3& p, double eta, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double u = c * p.x + s * p.y;
  const double v = -s * p.x + c * p.y;
  const double u2 = std::cosh(eta) * u + std::sinh(eta) * p.w;
  const double w2 = std::sinh(eta) * u + std::cosh(eta) * p.w;
  return {c * u2 - s * v, s * u2 + c * v, w2};
}

std::optional<TriangleData> accept(const std::array<Vec3, 3>& pts, const GenConstraints& c) {
  for (const Vec3& p : pts) {
    if (std::hypot(p.x / p.w, p.y / p.w) > c.max_radius) return std::nullopt;
  }
  TriangleData t;
  try {
    t = from_vertices(HPoint{pts[0]}, HPoint{pts[1]}, HPoint{pts[2]});
  } catch (const Error&) {
    return std::nullopt;
  }
  if (std::min({t.alpha, t.beta, t.gamma}) < c.min_angle) return std::nullopt;
  if (std::min({t.a, t.b, t.c}) < c.min_side) return std::nullopt;
  if (c.shape == Shape::Acute && std::max({t.alpha, t.beta, t.gamma}) >= kHalfPi) return std::nullopt;
  if (c.min_side_difference > 0 &&
      std::min({std::abs(t.a - t.b), std::abs(t.b - t.c), std::abs(t.c - t.a)}) < c.min_side_difference) {
    return std::nullopt;
  }
  return t;
}

std::array<Vec3, 3> draw(Rng& rng, const GenConstraints& c) {
  const auto moved = [&](std::array<Vec3, 3> pts) {
    const double eta = rng.uniform(0.0, 1.0);
    const double dir = rng.uniform(0.0, 2.0 * kPi);
    for (auto& p : pts) p = boost(p, eta, dir);
    return pts;
  };
  switch (c.shape) {
    case Shape::Equilateral: {
      const double r = rng.uniform(0.05, c.max_radius);
      const double phase = rng.uniform(0.0, 2.0 * kPi);
      std::array<Vec3, 3> pts;
      for (int k = 0; k < 3; ++k) {
        const double th = phase + 2.0 * kPi * k / 3.0;
        pts[k] = {r * std::cos(th), r * std::sin(th), 1.0};
      }
      return pts;
    }
    case Shape::Isosceles: {
      const double apex = rng.uniform(c.min_angle, kPi - 2.0 * c.min_angle);
      const double leg = rng.uniform(c.min_side, 1.8);
      const double phase = rng.uniform(0.0, 2.0 * kPi);
      return moved({Vec3{0, 0, 1}, at_distance(leg, phase - apex / 2), at_distance(leg, phase + apex / 2)});
    }
    case Shape::Right: {
      // The right angle sits at C.
      const double p = rng.uniform(c.min_side, 1.8);
      const double q = rng.uniform(c.min_side, 1.8);
      const double phase = rng.uniform(0.0, 2.0 * kPi);
      return moved({at_distance(p, phase), at_distance(q, phase + kHalfPi), Vec3{0, 0, 1}});
    }
    default: {
      std::array<Vec3, 3> pts;
      for (auto& p : pts) {
        for (;;) {
          const double x = rng.uniform(-c.max_radius, c.max_radius);
          const double y = rng.uniform(-c.max_radius, c.max_radius);
          if (x * x + y * y < c.max_radius * c.max_radius) {
            p = {x, y, 1.0};
            break;
          }
        }
      }
      return pts;
    }
  }
}

}  // namespace

TriangleData gen_triangle(std::uint64_t seed, const GenConstraints& c) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (auto t = accept(draw(rng, c), c)) return *t;
  }
  throw Error(ErrorCode::ExhaustedAttempts, "no triangle met the constraints for seed " + std::to_string(seed));
}

// ---------------------------------------------------------------------------
// Identity evaluation

namespace {

double rel(double lhs, double rhs) {
  const double diff = std::abs(lhs - rhs);
  if (std::abs(lhs) > 1e-6 && std::abs(rhs) > 1e-6) return diff / std::max(std::abs(lhs), std::abs(rhs));
  return diff;
}

// NaN-propagating max, so a broken evaluation can never pass.
double worst(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) {
    if (std::isnan(x)) return x;
    m = std::max(m, x);
  }
  return m;
}

double cross_gap(const TriCoords& u, const TriCoords& v) {
  const double nu = std::hypot(u[0], u[1], u[2]);
  const double nv = std::hypot(v[0], v[1], v[2]);
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) m = std::max(m, std::abs(u[i] * v[j] - u[j] * v[i]) / (nu * nv));
  }
  return m;
}

double tri_area(const HPoint& p, const HPoint& q, const HPoint& r) {
  return kPi - vertex_angle(p, q, r) - vertex_angle(q, r, p) - vertex_angle(r, p, q);
}

HPoint random_disk_point(Rng& rng, double radius = 0.6) {
  for (;;) {
    const double x = rng.uniform(-radius, radius);
    const double y = rng.uniform(-radius, radius);
    if (x * x + y * y < radius * radius) return klein_point(x, y);
  }
}

HPoint random_interior_point(Rng& rng, const TriangleData& t) {
  return HPoint{normalized(combine({rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)}, t))};
}

bool is_real(const HPoint& p) { return classify(p) == PointKind::Real; }

struct Outcome {
  Outcome(double r = 0.0, std::string why = {}) : residual(r), skip(std::move(why)) {}
  double residual;
  std::string skip;
};

Outcome skip(std::string why) { return Outcome{0.0, std::move(why)}; }

// Lazily built centers shared by the identities of one trial.
class Context {
 public:
  Context(const TriangleData& t, std::uint64_t seed) : t(t), v(t.verts()), seed(seed) {}

  const TriangleData& t;
  const std::array<HPoint, 3> v;
  const std::uint64_t seed;

  const CenterResult& M() { return get(m_, [&] { return centroid(t); }); }
  const std::array<CenterResult, 4>& circ() { return get(circ_, [&] { return circumcenters(t); }); }
  const std::array<CenterResult, 4>& inc() { return get(inc_, [&] { return incenter_excenters(t); }); }
  const CenterResult& H() { return get(h_, [&] { return orthocenter(t); }); }
  const PseudoCenter& S() { return get(s_, [&] { return pseudo_centroid(t); }); }
  const EulerReport& euler() { return get(euler_, [&] { return euler_line(t); }); }
  const MinimalityReport& minimality() {
    return get(min_, [&] { return incenter_minimality(t, 8, mix_seed(seed, 0xFFFF)); });
  }

  bool O_real() { return circ()[0].kind == PointKind::Real; }
  bool H_real() { return H().kind == PointKind::Real; }
  double R() { return circ()[0].aux.at("R"); }
  double tanh_R(int i) { return circ()[i].aux.at("tanh_R"); }
  double tanh_r(int i) { return inc()[i].aux.at("tanh_r"); }
  double sides(int i) const { return i == 0 ? t.a : (i == 1 ? t.b : t.c); }
  double angles(int i) const { return i == 0 ? t.alpha : (i == 1 ? t.beta : t.gamma); }
  HLine side_line(int i) const { return join(v[(i + 1) % 3], v[(i + 2) % 3]); }
  bool right_angle() const {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(angles(i) - kHalfPi) < 1e-9) return true;
    }
    return false;
  }

  struct Ortho {
    std::array<double, 3> h, hh, hx;  // heights, signed HH_X, signed HX
    std::array<HPoint, 3> feet;
  };
  const Ortho& ortho() {
    return get(ortho_, [&] {
      Ortho o;
      const HPoint& H0 = H().point;
      for (int i = 0; i < 3; ++i) {
        const HLine l = side_line(i);
        const double sv = signed_distance(v[i], l);
        o.h[i] = std::abs(sv);
        o.feet[i] = foot_of_perpendicular(v[i], l);
        if (is_real(H0)) {
          o.hh[i] = (sv > 0 ? 1.0 : -1.0) * signed_distance(H0, l);
          o.hx[i] = o.h[i] - o.hh[i];
        }
      }
      return o;
    });
  }

 private:
  template <class T, class F>
  const T& get(std::optional<T>& slot, F&& make) {
    if (!slot) slot = make();
    return *slot;
  }

  std::optional<CenterResult> m_, h_;
  std::optional<std::array<CenterResult, 4>> circ_, inc_;
  std::optional<PseudoCenter> s_;
  std::optional<EulerReport> euler_;
  std::optional<MinimalityReport> min_;
  std::optional<Ortho> ortho_;
};

using Eval = std::function<Outcome(Context&, Rng&)>;

struct Entry {
  IdentitySpec spec;
  Eval eval;
};

constexpr double kTol = 1e-9;
constexpr const char* kHNotReal = "orthocenter is not a real point";
constexpr const char* kONotReal = "circumcenter is not a real point";
constexpr const char* kRightAngle = "right angle: the orthocenter is a vertex";

// Cyclic max of f(i) over the three vertices.
template <class F>
double cyclic(F&& f) {
  return worst({f(0), f(1), f(2)});
}

const std::vector<Entry>& entries() {
  using std::cos, std::cosh, std::sin, std::sinh, std::tan, std::tanh, std::sqrt;
  static const std::vector<Entry> list = {
      // --- classical trigonometry
      {{"LS", "law of sines", kTol},
       [](Context& x, Rng&) {
         const auto& t = x.t;
         const double k = sinh(t.a) / sin(t.alpha);
         return Outcome{worst({rel(k, sinh(t.b) / sin(t.beta)), rel(k, sinh(t.c) / sin(t.gamma))})};
       }},
      {{"LC1", "law of cosines", kTol},
       [](Context& x, Rng&) {
         return Outcome{cyclic([&](int i) {
           const double p = x.sides((i + 1) % 3), q = x.sides((i + 2) % 3);
           return rel(cosh(x.sides(i)), cosh(p) * cosh(q) - sinh(p) * sinh(q) * cos(x.angles(i)));
         })};
       }},
      {{"LC2", "law of cosines on the angles", kTol},
       [](Context& x, Rng&) {
         return Outcome{cyclic([&](int i) {
           const double p = x.angles((i + 1) % 3), q = x.angles((i + 2) % 3);
           return rel(cos(x.angles(i)), -cos(p) * cos(q) + sin(p) * sin(q) * cosh(x.sides(i)));
         })};
       }},
      {{"AR1", "area as angle defect, additive over a split at the centroid", kTol},
       [](Context& x, Rng&) {
         const HPoint& m = x.M().point;
         const auto& v = x.v;
         const double parts = tri_area(m, v[1], v[2]) + tri_area(v[0], m, v[2]) + tri_area(v[0], v[1], m);
         return Outcome{worst({rel(area(x.t), parts), rel(area(x.t), tri_area(v[0], v[1], v[2]))})};
       }},
      {{"AR2", "area from the height and the signed base segments", kTol},
       [](Context& x, Rng&) {
         const auto& v = x.v;
         const HPoint foot = foot_of_perpendicular(v[0], x.side_line(0));
         const double a1 = arc_param(v[1], v[2], foot);
         const double a2 = x.t.a - a1;
         const double m = real_distance(v[0], foot);
         const double t1 = tanh(a1 / 2) * tanh(m / 2);
         const double t2 = tanh(a2 / 2) * tanh(m / 2);
         return Outcome{rel(tan(x.t.delta), (t1 + t2) / (1 - t1 * t2))};
       }},
      {{"HER", "Heron-type formula for the quarter defect", kTol},
       [](Context& x, Rng&) {
         const auto& t = x.t;
         const double rhs = sqrt(tanh(t.s / 2) * tanh((t.s - t.a) / 2) * tanh((t.s - t.b) / 2) * tanh((t.s - t.c) / 2));
         return Outcome{rel(tan(t.delta / 2), rhs)};
       }},
  };
  static const std::vector<Entry> all = [] {
    std::vector<Entry> out = list;
    const auto add = [&](std::vector<Entry> more) { out.insert(out.end(), more.begin(), more.end()); };

    // --- Lambert quadrangle, drawn per trial
    const auto lambert = [](Rng& g) {
      const double a = g.uniform(0.05, 1.2);
      const double dmax = std::asinh(1.0 / sinh(a));
      return make_lambert(a, g.uniform(0.05, 0.9 * dmax));
    };
    add({
        {{"LQ1", "Lambert quadrangle: tanh b from d and a", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{rel(tanh(q.b), tanh(q.d) * cosh(q.a))};
         }},
        {{"LQ2", "Lambert quadrangle: tanh c from a and d", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{rel(tanh(q.c), tanh(q.a) * cosh(q.d))};
         }},
        {{"LQ3", "Lambert quadrangle: sinh b from d and c", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{rel(sinh(q.b), sinh(q.d) * cosh(q.c))};
         }},
        {{"LQ4", "Lambert quadrangle: sinh c from a and b", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{rel(sinh(q.c), sinh(q.a) * cosh(q.b))};
         }},
        {{"LQ5", "Lambert quadrangle: cosine of the acute angle", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{worst({rel(cos(q.phi), tanh(q.b) * tanh(q.c)), rel(cos(q.phi), sinh(q.a) * sinh(q.d))})};
         }},
        {{"LQ6", "Lambert quadrangle: sine of the acute angle", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{worst({rel(sin(q.phi), cosh(q.d) / cosh(q.b)), rel(sin(q.phi), cosh(q.a) / cosh(q.c))})};
         }},
        {{"LQ7", "Lambert quadrangle: tangent of the acute angle", kTol},
         [=](Context&, Rng& g) {
           const auto q = lambert(g);
           return Outcome{worst({rel(tan(q.phi), 1.0 / (tanh(q.a) * sinh(q.b))),
                                 rel(tan(q.phi), 1.0 / (tanh(q.d) * sinh(q.c)))})};
         }},
    });

    // --- Staudtian
    add({
        {{"ST1", "product of half-angle sines through the Staudtian", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{rel(sin(t.alpha / 2) * sin(t.beta / 2) * sin(t.gamma / 2),
                              t.n * t.n / (sinh(t.s) * sinh(t.a) * sinh(t.b) * sinh(t.c)))};
         }},
        {{"ST2", "sine of each angle through the Staudtian", kTol},
         [](Context& x, Rng&) {
           return Outcome{cyclic([&](int i) {
             return rel(sin(x.angles(i)), 2 * x.t.n / (sinh(x.sides((i + 1) % 3)) * sinh(x.sides((i + 2) % 3))));
           })};
         }},
        {{"ST3", "Staudtian from two sides or from a height", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double hc = std::abs(signed_distance(x.v[2], x.side_line(2)));
           return Outcome{worst({rel(t.n, 0.5 * sin(t.alpha) * sinh(t.b) * sinh(t.c)), rel(t.n, 0.5 * sinh(hc) * sinh(t.c))})};
         }},
        {{"ST4", "ratio of section of a cevian from triangular coordinates", kTol},
         [](Context& x, Rng& g) {
           const HPoint p = random_interior_point(g, x.t);
           const TriCoords k = tri_coords(p, x.t);
           return Outcome{cyclic([&](int i) { return rel(cevian_ratio(p, x.t, i), k[(i + 2) % 3] / k[(i + 1) % 3]); })};
         }},
    });

    // --- angular Staudtian
    add({
        {{"AS1", "half-side sine from the angles", kTol},
         [](Context& x, Rng&) {
           const double d = x.t.delta;
           return Outcome{cyclic([&](int i) {
             return rel(sinh(x.sides(i) / 2), sqrt(sin(d) * sin(d + x.angles(i)) /
                                                   (sin(x.angles((i + 1) % 3)) * sin(x.angles((i + 2) % 3)))));
           })};
         }},
        {{"AS2", "half-side cosine from the angles", kTol},
         [](Context& x, Rng&) {
           const double d = x.t.delta;
           return Outcome{cyclic([&](int i) {
             const double p = x.angles((i + 1) % 3), q = x.angles((i + 2) % 3);
             return rel(cosh(x.sides(i) / 2), sqrt(sin(d + p) * sin(d + q) / (sin(p) * sin(q))));
           })};
         }},
        {{"AS3", "product of half-side cosines through the angular Staudtian", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{rel(cosh(t.a / 2) * cosh(t.b / 2) * cosh(t.c / 2),
                              t.N * t.N / (sin(t.alpha) * sin(t.beta) * sin(t.gamma) * sin(t.delta)))};
         }},
        {{"AS4", "side sines through the angular Staudtian", kTol},
         [](Context& x, Rng&) {
           return Outcome{cyclic([&](int i) {
             return rel(sinh(x.sides(i)), 2 * x.t.N / (sin(x.angles((i + 1) % 3)) * sin(x.angles((i + 2) % 3))));
           })};
         }},
        {{"AS5", "angular Staudtian from a side or a height", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double hc = std::abs(signed_distance(x.v[2], x.side_line(2)));
           return Outcome{
               worst({rel(t.N, 0.5 * sinh(t.a) * sin(t.beta) * sin(t.gamma)), rel(t.N, 0.5 * sinh(hc) * sin(t.gamma))})};
         }},
        {{"AS6", "connection between the two Staudtians", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{rel(2 * t.n * t.n, t.N * sinh(t.a) * sinh(t.b) * sinh(t.c))};
         }},
        {{"AS7", "ratio of the two Staudtians", kTol},
         [](Context& x, Rng&) { return Outcome{rel(x.t.N / x.t.n, sin(x.t.alpha) / sinh(x.t.a))}; }},
    });

    // --- centroid
    add({
        {{"CE1", "centroid has equal triangular coordinates", kTol},
         [](Context& x, Rng&) { return Outcome{coords_gap(tri_coords(x.M().point, x.t), {1, 1, 1})}; }},
        {{"CE2", "centroid divides each median by twice the half-side cosine", kTol},
         [](Context& x, Rng&) {
           const HPoint& m = x.M().point;
           return Outcome{cyclic([&](int i) {
             const HPoint mid = midpoint(x.v[(i + 1) % 3], x.v[(i + 2) % 3]);
             return rel(sinh(real_distance(x.v[i], m)) / sinh(real_distance(m, mid)), 2 * cosh(x.sides(i) / 2));
           })};
         }},
        {{"CE3", "median ratio through the Staudtian of the centroid", kTol},
         [](Context& x, Rng&) {
           const HPoint& m = x.M().point;
           const TriCoords k = tri_coords(m, x.t);
           return Outcome{cyclic([&](int i) {
             const HPoint mid = midpoint(x.v[(i + 1) % 3], x.v[(i + 2) % 3]);
             return rel(sinh(real_distance(x.v[i], mid)) / sinh(real_distance(m, mid)), x.t.n / k[i]);
           })};
         }},
        {{"CE4", "center of gravity property for signed distances to a line", kTol},
         [](Context& x, Rng& g) {
           const HPoint p = random_disk_point(g);
           const HPoint q = random_disk_point(g);
           const HLine l = join(p, q);
           const auto& t = x.t;
           const double sum = sinh(signed_distance(x.v[0], l)) + sinh(signed_distance(x.v[1], l)) +
                              sinh(signed_distance(x.v[2], l));
           const double den = sqrt(1 + 2 * (1 + cosh(t.a) + cosh(t.b) + cosh(t.c)));
           return Outcome{rel(sinh(signed_distance(x.M().point, l)), sum / den)};
         }},
        {{"CE5", "minimality property of the centroid", kTol},
         [](Context& x, Rng& g) {
           const HPoint y = random_disk_point(g);
           const HPoint& m = x.M().point;
           const double ratio = x.t.n / tri_coords(m, x.t)[0];
           const double sum =
               cosh(real_distance(y, x.v[0])) + cosh(real_distance(y, x.v[1])) + cosh(real_distance(y, x.v[2]));
           return Outcome{rel(cosh(real_distance(y, m)), sum / ratio)};
         }},
    });

    // --- circumradii
    add({
        {{"CR1", "circumradii through the angular Staudtian", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{worst({rel(x.tanh_R(0), sin(t.delta) / t.N), rel(x.tanh_R(1), sin(t.delta + t.alpha) / t.N),
                                 rel(x.tanh_R(2), sin(t.delta + t.beta) / t.N),
                                 rel(x.tanh_R(3), sin(t.delta + t.gamma) / t.N)})};
         }},
        {{"CR2", "circumradii through the Staudtian and half sides", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double sa = sinh(t.a / 2), sb = sinh(t.b / 2), sc = sinh(t.c / 2);
           const double ca = cosh(t.a / 2), cb = cosh(t.b / 2), cc = cosh(t.c / 2);
           return Outcome{worst({rel(x.tanh_R(0), 2 * sa * sb * sc / t.n), rel(x.tanh_R(1), 2 * sa * cb * cc / t.n),
                                 rel(x.tanh_R(2), 2 * ca * sb * cc / t.n), rel(x.tanh_R(3), 2 * ca * cb * sc / t.n)})};
         }},
        {{"CR3", "triangular coordinates of the circumcenter", kTol},
         [](Context& x, Rng&) {
           const auto& o = x.circ()[0];
           return Outcome{cross_gap(tri_coords_projective(o.point, x.t), o.coords)};
         }},
    });

    // --- in- and excircles
    add({
        {{"IN1", "inradius and exradii through the Staudtian", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{worst({rel(x.tanh_r(0), t.n / sinh(t.s)), rel(x.tanh_r(1), t.n / sinh(t.s - t.a)),
                                 rel(x.tanh_r(2), t.n / sinh(t.s - t.b)), rel(x.tanh_r(3), t.n / sinh(t.s - t.c))})};
         }},
        {{"IN2", "inradius through the angular Staudtian", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{rel(x.tanh_r(0), t.N / (2 * cos(t.alpha / 2) * cos(t.beta / 2) * cos(t.gamma / 2)))};
         }},
        {{"IN3", "cotangent of the inradius from the angle sums", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double d = t.delta;
           return Outcome{rel(1 / x.tanh_r(0), (sin(d + t.alpha) + sin(d + t.beta) + sin(d + t.gamma) + sin(d)) / (2 * t.N))};
         }},
        {{"IN4", "cotangent of the exradii from the angle sums", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double d = t.delta;
           const double s0 = sin(d), sa = sin(d + t.alpha), sb = sin(d + t.beta), sc = sin(d + t.gamma);
           return Outcome{worst({rel(1 / x.tanh_r(1), (-sa + sb + sc - s0) / (2 * t.N)),
                                 rel(1 / x.tanh_r(2), (sa - sb + sc - s0) / (2 * t.N)),
                                 rel(1 / x.tanh_r(3), (sa + sb - sc - s0) / (2 * t.N))})};
         }},
        {{"IN5", "relations between circumradii and in/exradii", kTol},
         [](Context& x, Rng&) {
           const double R = x.tanh_R(0), RA = x.tanh_R(1), RB = x.tanh_R(2), RC = x.tanh_R(3);
           const double r = 1 / x.tanh_r(0), rA = 1 / x.tanh_r(1), rB = 1 / x.tanh_r(2), rC = 1 / x.tanh_r(3);
           return Outcome{worst({rel(RA - R, rB + rC), rel(RB + RC, r + rA), rel(r, 0.5 * (R + RA + RB + RC))})};
         }},
        {{"IN6", "triangular coordinates of the incenter", kTol},
         [](Context& x, Rng&) {
           const auto& i = x.inc()[0];
           return Outcome{coords_gap(tri_coords(i.point, x.t), i.coords)};
         }},
        {{"IN7", "triangular coordinates of the excenters", kTol},
         [](Context& x, Rng&) {
           return Outcome{cyclic([&](int k) {
             const auto& e = x.inc()[k + 1];
             return coords_gap(tri_coords_projective(e.point, x.t), e.coords);
           })};
         }},
    });

    // --- radius relations
    add({
        {{"RI1", "signed sum of cotangents of the in/exradii", kTol},
         [](Context& x, Rng&) {
           return Outcome{
               rel(-1 / x.tanh_r(1) - 1 / x.tanh_r(2) - 1 / x.tanh_r(3) + 1 / x.tanh_r(0), 2 * x.tanh_R(0))};
         }},
        {{"RI2", "pairwise products of exradius cotangents", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double rA = 1 / x.tanh_r(1), rB = 1 / x.tanh_r(2), rC = 1 / x.tanh_r(3);
           const double rhs =
               1 / (sinh(t.s) * sinh(t.s - t.a)) + 1 / (sinh(t.s) * sinh(t.s - t.b)) + 1 / (sinh(t.s) * sinh(t.s - t.c));
           return Outcome{rel(rA * rB + rA * rC + rB * rC, rhs)};
         }},
        {{"RI3", "pairwise products of exradius tangents", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double rA = x.tanh_r(1), rB = x.tanh_r(2), rC = x.tanh_r(3);
           const double rhs = 0.5 * (cosh(t.a + t.b) + cosh(t.a + t.c) + cosh(t.b + t.c) - cosh(t.a) - cosh(t.b) - cosh(t.c));
           return Outcome{rel(rA * rB + rA * rC + rB * rC, rhs)};
         }},
        {{"RI4", "sum of exradius cotangents from the sides", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double rhs = (cosh(t.a) + cosh(t.b) + cosh(t.c) - (sinh(t.a) + sinh(t.b) + sinh(t.c)) / tanh(t.s)) /
                              x.tanh_r(0);
           return Outcome{rel(1 / x.tanh_r(1) + 1 / x.tanh_r(2) + 1 / x.tanh_r(3), rhs)};
         }},
        {{"RI5", "sum of exradius tangents from the sides", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double rhs = (cosh(t.a) + cosh(t.b) + cosh(t.c) - cosh(t.b - t.a) - cosh(t.c - t.a) - cosh(t.c - t.b)) /
                              (2 * x.tanh_r(0));
           return Outcome{rel(x.tanh_r(1) + x.tanh_r(2) + x.tanh_r(3), rhs)};
         }},
        {{"RI6", "pairwise side sine products from the radius tangents", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const double r = x.tanh_r(0), rA = x.tanh_r(1), rB = x.tanh_r(2), rC = x.tanh_r(3);
           const double lhs = sinh(t.a) * sinh(t.b) + sinh(t.a) * sinh(t.c) + sinh(t.b) * sinh(t.c);
           return Outcome{rel(lhs, r * (rA + rB + rC) + rA * rB + rA * rC + rB * rC)};
         }},
        {{"OI1", "distance of the incenter and the circumcenter", kTol},
         [](Context& x, Rng&) {
           if (!x.O_real()) return skip(kONotReal);
           const auto& t = x.t;
           const double R = x.R();
           const double r = std::atanh(x.tanh_r(0));
           const double oi = real_distance(x.circ()[0].point, x.inc()[0].point);
           const double rhs = 2 * cosh(t.a / 2) * cosh(t.b / 2) * cosh(t.c / 2) * cosh(r) * cosh(R) - cosh(t.s) * cosh(R - r);
           return Outcome{rel(cosh(oi), rhs)};
         }},
    });

    // --- orthocenter
    add({
        {{"OR1", "orthocenter splits the altitudes with a common tanh product", kTol},
         [](Context& x, Rng&) {
           if (!x.H_real()) return skip(kHNotReal);
           const auto& o = x.ortho();
           const auto p = [&](int i) { return tanh(o.hx[i]) * tanh(o.hh[i]); };
           return Outcome{worst({rel(p(0), p(1)), rel(p(0), p(2))})};
         }},
        {{"OR2", "orthocenter sinh products proportional to cosh of heights", kTol},
         [](Context& x, Rng&) {
           if (x.right_angle()) return skip(kRightAngle);
           if (!x.H_real()) return skip(kHNotReal);
           const auto& o = x.ortho();
           return Outcome{coords_gap({sinh(o.hx[0]) * sinh(o.hh[0]), sinh(o.hx[1]) * sinh(o.hh[1]), sinh(o.hx[2]) * sinh(o.hh[2])},
                                     {cosh(o.h[0]), cosh(o.h[1]), cosh(o.h[2])})};
         }},
        {{"OR3", "triangular coordinates of the orthocenter", kTol},
         [](Context& x, Rng&) {
           const auto& h = x.H();
           return Outcome{coords_gap(tri_coords_projective(h.point, x.t), h.coords)};
         }},
        {{"OR4", "weighted cosh sum through the orthocenter", kTol},
         [](Context& x, Rng& g) {
           if (!x.H_real()) return skip(kHNotReal);
           const HPoint p = random_disk_point(g);
           const HPoint& h = x.H().point;
           const TriCoords k = tri_coords(h, x.t);
           double lhs = 0;
           for (int i = 0; i < 3; ++i) lhs += k[i] * cosh(real_distance(p, x.v[i]));
           return Outcome{rel(lhs, x.t.n * cosh(real_distance(p, h)))};
         }},
        {{"OR5", "Stewart relation at the foot of each altitude", kTol},
         [](Context& x, Rng&) {
           const auto& o = x.ortho();
           return Outcome{cyclic([&](int i) {
             const HPoint& p = x.v[(i + 1) % 3];
             const HPoint& q = x.v[(i + 2) % 3];
             const double u = arc_param(p, q, o.feet[i]);
             const double side = x.sides(i);
             const double lhs = cosh(real_distance(x.v[i], p)) * sinh(side - u) + cosh(real_distance(x.v[i], q)) * sinh(u);
             return rel(lhs, cosh(o.h[i]) * sinh(side));
           })};
         }},
        {{"OR6", "distance of the orthocenter and the circumcenter", kTol},
         [](Context& x, Rng&) {
           if (x.right_angle()) return skip(kRightAngle);
           if (!x.H_real()) return skip(kHNotReal);
           if (!x.O_real()) return skip(kONotReal);
           const auto& o = x.ortho();
           const double h = tanh(o.hx[0]) * tanh(o.hh[0]);
           double sum = 0;
           for (int i = 0; i < 3; ++i) sum += 1 / (tanh(o.h[i]) * sinh(o.hx[i]));
           const double oh = real_distance(x.circ()[0].point, x.H().point);
           return Outcome{rel((h + 1) * cosh(oh), h * sum * cosh(x.R()))};
         }},
        {{"STW", "Stewart's theorem", kTol},
         [](Context& x, Rng& g) {
           const auto& v = x.v;
           const HPoint ap = along(v[1], v[2], g.uniform(0.05, 0.95) * x.t.a);
           const double lhs = cosh(x.t.c) * sinh(real_distance(ap, v[2])) + cosh(x.t.b) * sinh(real_distance(v[1], ap));
           return Outcome{rel(lhs, cosh(real_distance(v[0], ap)) * sinh(x.t.a))};
         }},
        {{"STW-EU", "Euclidean Stewart relation in the small-triangle limit", 1e-6},
         [](Context& x, Rng& g) {
           std::array<HPoint, 3> small;
           for (int i = 0; i < 3; ++i) {
             const auto k = to_klein(x.v[i]);
             small[i] = klein_point(1e-4 * k[0], 1e-4 * k[1]);
           }
           const double a = real_distance(small[1], small[2]);
           const double b = real_distance(small[2], small[0]);
           const double c = real_distance(small[0], small[1]);
           const HPoint ap = along(small[1], small[2], g.uniform(0.05, 0.95) * a);
           const double ba = real_distance(small[1], ap), ac = real_distance(ap, small[2]);
           const double aa = real_distance(small[0], ap);
           const double euclid = (aa * aa + ba * ac) * a - b * b * ba - c * c * ac;
           return Outcome{std::abs(euclid) / (a * a * a)};
         }},
        {{"ORP", "orthocenter cosh sum evaluated at the circumcenter", kTol},
         [](Context& x, Rng&) {
           if (!x.H_real()) return skip(kHNotReal);
           if (!x.O_real()) return skip(kONotReal);
           const TriCoords k = tri_coords(x.H().point, x.t);
           const double oh = real_distance(x.circ()[0].point, x.H().point);
           return Outcome{rel((k[0] + k[1] + k[2]) * cosh(x.R()), x.t.n * cosh(oh))};
         }},
    });

    // --- isogonal conjugation
    const auto reflected_cevian = [](Context& x, const HPoint& p, int i) {
      const HLine bis = angle_bisectors(x.v[i], x.v[(i + 1) % 3], x.v[(i + 2) % 3]).first;
      return join(x.v[i], reflect(p, bis));
    };
    add({
        {{"IS1", "inverse connection of the section ratios of isogonal cevians", kTol},
         [=](Context& x, Rng& g) {
           const HPoint p = random_interior_point(g, x.t);
           return Outcome{cyclic([&](int i) {
             const HPoint& q = x.v[(i + 1) % 3];
             const HPoint& r = x.v[(i + 2) % 3];
             const HLine side = x.side_line(i);
             const double L = x.sides(i);
             const double u = arc_param(q, r, meet(join(x.v[i], p), side));
             const double w = arc_param(q, r, meet(reflected_cevian(x, p, i), side));
             const double ratio = (sinh(u) / sinh(L - u)) * (sinh(w) / sinh(L - w));
             const double sq = sinh(real_distance(x.v[i], q)) / sinh(real_distance(x.v[i], r));
             return rel(ratio, sq * sq);
           })};
         }},
        {{"IS2", "triangular coordinates of the isogonal conjugate", kTol},
         [](Context& x, Rng& g) {
           const IsogonalResult c = isogonal_conjugate(random_interior_point(g, x.t), x.t);
           return Outcome{worst({coords_gap(tri_coords_projective(c.point, x.t), c.coords), c.concurrency})};
         }},
        {{"IS3", "isogonal conjugate of the orthocenter", kTol},
         [](Context& x, Rng&) {
           if (x.right_angle()) return skip(kRightAngle);
           const IsogonalResult c = isogonal_conjugate(x.H().point, x.t);
           const auto& t = x.t;
           return Outcome{coords_gap(tri_coords_projective(c.point, t), {sin(2 * t.alpha), sin(2 * t.beta), sin(2 * t.gamma)})};
         }},
        {{"IS4", "weighted cosh sum for an arbitrary fixed point", kTol},
         [](Context& x, Rng& g) {
           const HPoint p = random_disk_point(g);
           const HPoint q = random_disk_point(g);
           const TriCoords k = tri_coords(q, x.t);
           double lhs = 0;
           for (int i = 0; i < 3; ++i) lhs += k[i] * cosh(real_distance(p, x.v[i]));
           return Outcome{rel(lhs, x.t.n * cosh(real_distance(p, q)))};
         }},
        {{"MIN1", "coordinate sum minimal at the incenter with the stated closed form", kTol},
         [](Context& x, Rng&) {
           const auto& m = x.minimality();
           return Outcome{worst({m.incenter_closed_form, std::max(0.0, -m.incenter_margin)})};
         }},
        {{"MIN2", "coordinate sum minimal at the circumcenter, corrected closed form", kTol},
         [](Context& x, Rng&) {
           const auto& m = x.minimality();
           if (!m.circumcenter_real) return skip(kONotReal);
           return Outcome{worst({m.circumcenter_closed_form, std::max(0.0, -m.circumcenter_margin)})};
         }},
        {{"SY1", "symmedian point as conjugate of the centroid", kTol},
         [](Context& x, Rng&) {
           const CenterResult k = symmedian_point(x.t);
           return Outcome{worst({coords_gap(tri_coords_projective(k.point, x.t), k.coords), k.aux.at("concurrency")})};
         }},
        {{"SY2", "symmedian distances to the sides follow the side sines", kTol},
         [](Context& x, Rng&) {
           const HPoint k = symmedian_point(x.t).point;
           TriCoords d{};
           for (int i = 0; i < 3; ++i) d[i] = sinh(std::abs(signed_distance(k, x.side_line(i))));
           return Outcome{coords_gap(d, {sinh(x.t.a), sinh(x.t.b), sinh(x.t.c)})};
         }},
        {{"LE1", "triangular coordinates of the Lemoine point (corrected third entry)", kTol},
         [](Context& x, Rng&) {
           const CenterResult l = lemoine_point(x.t);
           return Outcome{worst({coords_gap(tri_coords_projective(l.point, x.t), l.coords), l.aux.at("concurrency")})};
         }},
        {{"LE2", "symmedian and Lemoine point coincidence condition factorizes", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           const auto f = [](double p, double q) {
             const double cp = cosh(p), cq = cosh(q);
             return rel((cp - 1) * sinh(q) * sinh(q) - (cq - 1) * sinh(p) * sinh(p), (cp - 1) * (cq - 1) * (cq - cp));
           };
           return Outcome{worst({f(t.a, t.b), f(t.a, t.c)})};
         }},
    });

    // --- pseudo-centers
    add({
        {{"PM1", "feet of the pseudo-medians halve the area", kTol},
         [](Context& x, Rng&) {
           const auto& s = x.S();
           return Outcome{cyclic([&](int i) {
             const HPoint& p = x.v[(i + 1) % 3];
             const HPoint& q = x.v[(i + 2) % 3];
             const HPoint& f = s.feet[i];
             const double half = rel(tri_area(p, f, x.v[i]), x.t.delta);
             const double ratio = sinh(real_distance(p, f) / 2) / sinh(real_distance(f, q) / 2);
             return worst({half, rel(ratio, cosh(x.sides((i + 2) % 3) / 2) / cosh(x.sides((i + 1) % 3) / 2))});
           })};
         }},
        {{"PM2", "triangular coordinates of the pseudo-centroid", kTol},
         [](Context& x, Rng&) {
           const auto& s = x.S().center;
           return Outcome{worst({coords_gap(tri_coords_projective(s.point, x.t), s.coords), s.aux.at("concurrency")})};
         }},
        {{"CG1", "analogue of Cagnoli's theorem", kTol},
         [](Context& x, Rng&) {
           const auto& t = x.t;
           return Outcome{rel(sin(t.delta), t.n / (2 * cosh(t.a / 2) * cosh(t.b / 2) * cosh(t.c / 2)))};
         }},
        {{"CG2", "companion of Cagnoli's theorem at each vertex", kTol},
         [](Context& x, Rng&) {
           return Outcome{cyclic([&](int i) {
             const double den = 2 * cosh(x.sides(i) / 2) * sinh(x.sides((i + 1) % 3) / 2) * sinh(x.sides((i + 2) % 3) / 2);
             return rel(sin(x.t.delta + x.angles(i)), x.t.n / den);
           })};
         }},
        {{"CG3", "product of semi hyperbolic tangents from area and angle", kTol},
         [](Context& x, Rng&) {
           const double d = x.t.delta;
           return Outcome{cyclic([&](int i) {
             const double al = x.angles(i);
             const double lhs = sin(d + al) / sin(d);
             const double rhs = 1 / (tanh(x.sides((i + 1) % 3) / 2) * tanh(x.sides((i + 2) % 3) / 2));
             return worst({rel(lhs, cos(al) + sin(al) / tan(d)), rel(lhs, rhs)});
           })};
         }},
        {{"PMF", "product identities of the pseudo-median foot segments", kTol},
         [](Context& x, Rng&) {
           const auto& s = x.S();
           double h1 = 1, h2 = 1, f1 = 1, f2 = 1;
           for (int i = 0; i < 3; ++i) {
             const double near = real_distance(x.v[(i + 1) % 3], s.feet[i]);
             const double far = real_distance(s.feet[i], x.v[(i + 2) % 3]);
             h1 *= sinh(near / 2);
             h2 *= sinh(far / 2);
             f1 *= sinh(near);
             f2 *= sinh(far);
           }
           return Outcome{worst({rel(h1, h2), rel(f1, f2)})};
         }},
        {{"EU1", "O, F, S and Z are on the same line", 1e-8},
         [](Context& x, Rng&) {
           const auto& e = x.euler();
           if (!e.z_found) return skip("pseudo-orthocenter not constructed: " + e.z_error);
           return Outcome{e.max_det};
         }},
        {{"EU0", "O, M, H collinear for the isosceles companion triangle", kTol},
         [](Context& x, Rng&) {
           const double leg = 0.5 * (x.t.b + x.t.c);
           const auto p = place_triangle(x.t.a, leg, leg);
           const TriangleData iso = from_vertices(p[0], p[1], p[2]);
           return Outcome{normalized_det(circumcenters(iso)[0].point.h, centroid(iso).point.h, orthocenter(iso).point.h)};
         }},
    });

    // --- extended distance and angle tables on triangle-derived configurations
    const auto pair_err = [](const ExtPair& got, ExtComplex e1, ExtComplex e2) {
      const auto gap = [](const ExtComplex& p, const ExtComplex& q) {
        if (p.re.is_finite() != q.re.is_finite() || p.re.kind() != q.re.kind()) return 1.0;
        const double re = p.re.is_finite() ? std::abs(p.re.value() - q.re.value()) : 0.0;
        return std::max(re, std::abs(p.im - q.im));
      };
      return std::min(std::max(gap(got.first, e1), gap(got.second, e2)),
                      std::max(gap(got.first, e2), gap(got.second, e1)));
    };
    add({
        {{"TBL1", "distances on a real line", 1e-9},
         [=](Context& x, Rng&) {
           const auto& v = x.v;
           const auto dr = [](const DistanceResult& r) { return ExtPair{r.ab, r.ba}; };
           const double c = x.t.c;
           double err = pair_err(dr(distance_ext(v[0], v[1])), {c, 0.0}, {-c, kPi});
           // Ideal points of BC: poles of the altitude from A and of the perpendicular at B.
           const HLine bc = x.side_line(0);
           const HPoint pa = pole(join(v[0], pole(bc)));
           const double bh = std::abs(arc_param(v[1], v[2], x.ortho().feet[0]));
           const ExtPair ri = dr(distance_ext(v[1], pa));
           const double d = std::abs(ri.first.re.value());
           err = worst({err, pair_err(ri, {d, kHalfPi}, {-d, kHalfPi}), std::abs(d - bh)});
           if (bh > 1e-6) {
             const HPoint pb = pole(join(v[1], pole(bc)));
             // The sign of the real part follows the orientation of the pair.
             const ExtPair ii = dr(distance_ext(pa, pb));
             err = worst({err, std::min(pair_err(ii, {bh, kPi}, {-bh, 0.0}), pair_err(ii, {-bh, kPi}, {bh, 0.0}))});
           }
           return Outcome{err};
         }},
        {{"TBL2", "distances on a line at infinity", 1e-9},
         [=](Context& x, Rng&) {
           const auto& v = x.v;
           const Vec3 a = normalized(v[0]);
           const Vec3 toward = normalized(v[1]);
           Vec3 tv = toward - mink(a, toward) * a;
           tv = (1.0 / std::sqrt(-quad(tv))) * tv;
           const HPoint end{a + tv};  // end of the ray AB
           const HLine tangent = polar(end);
           const HPoint p = meet(tangent, x.side_line(0));
           const HPoint q = meet(tangent, x.side_line(1));
           if (classify(p) != PointKind::Ideal || classify(q) != PointKind::Ideal) {
             return skip("tangent meets a side line at its point of tangency");
           }
           const auto dr = [](const DistanceResult& r) { return ExtPair{r.ab, r.ba}; };
           return Outcome{worst({pair_err(dr(distance_ext(end, p)), {0.0, kHalfPi}, {0.0, kHalfPi}),
                                 pair_err(dr(distance_ext(p, q)), {0.0, 0.0}, {0.0, kPi})})};
         }},
        {{"TBL3", "angles of lines", 1e-9},
         [=](Context& x, Rng&) {
           const auto& v = x.v;
           const auto& t = x.t;
           const HLine bc = x.side_line(0);
           double err = pair_err(angle_ext(x.side_line(2), x.side_line(1)), {t.alpha, 0.0}, {kPi - t.alpha, 0.0});
           const double h = x.ortho().h[0];
           // Perpendicular to the altitude at A: ultraparallel to BC at distance h.
           const HLine alt = join(v[0], pole(bc));
           const ExtPair rr = angle_ext(bc, join(v[0], pole(alt)));
           err = worst({err, std::min(pair_err(rr, {0.0, -h}, {kPi, h}), pair_err(rr, {0.0, h}, {kPi, -h}))});
           const ExtPair ri = angle_ext(bc, polar(v[0]));
           err = worst({err, pair_err(ri, {kHalfPi, -h}, {kHalfPi, h})});
           return Outcome{err};
         }},
        {{"FIG2", "midpoint of a side with ideal endpoints", 1e-9},
         [](Context&, Rng& g) {
           std::array<HPoint, 3> p;
           for (int attempt = 0;; ++attempt) {
             const double base = g.uniform(0.0, 2.0 * kPi);
             for (int k = 0; k < 3; ++k) {
               const double th = base + 2.0 * kPi * k / 3.0 + g.uniform(-0.3, 0.3);
               const double rho = g.uniform(1.05, 1.6);
               p[k] = HPoint{{rho * std::cos(th), rho * std::sin(th), 1.0}};
             }
             bool ok = true;
             for (int k = 0; k < 3; ++k) ok = ok && line_kind(join(p[k], p[(k + 1) % 3])) == LineKind::Real;
             if (ok) break;
             if (attempt > 100) throw Error(ErrorCode::ExhaustedAttempts, "ideal triangle with real sides");
           }
           return Outcome{cyclic([&](int k) {
             const HPoint& a = p[k];
             const HPoint& b = p[(k + 1) % 3];
             const HLine side = join(a, b);
             const HPoint fa = meet(polar(a), side);
             const HPoint fb = meet(polar(b), side);
             const double d = real_distance(fa, fb);
             const HPoint mid = midpoint(fa, fb);
             const double am = std::abs(distance_ext(a, mid).ab.re.value());
             const double mb = std::abs(distance_ext(mid, b).ab.re.value());
             const double ab = std::abs(distance_ext(a, b).ab.re.value());
             return worst({rel(am, d / 2), rel(mb, d / 2), rel(ab, d)});
           })};
         }},
    });
    return out;
  }();
  return all;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> specs = [] {
    std::vector<IdentitySpec> out;
    for (const auto& e : entries()) out.push_back(e.spec);
    return out;
  }();
  return specs;
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.id);
  return out;
}

namespace {

IdentityRecord evaluate(std::size_t index, Context& ctx, std::uint64_t seed) {
  const Entry& e = entries()[index];
  IdentityRecord r;
  r.seed = seed;
  r.id = e.spec.id;
  r.anchor = e.spec.anchor;
  r.tolerance = e.spec.tolerance;
  Rng rng(mix_seed(seed, index));
  try {
    const Outcome o = e.eval(ctx, rng);
    if (!o.skip.empty()) {
      r.status = Status::Skipped;
      r.reason = o.skip;
      return r;
    }
    r.residual = o.residual;
    r.status = o.residual < r.tolerance ? Status::Pass : Status::Fail;
    if (std::isnan(o.residual)) r.reason = "residual is not a number";
  } catch (const Error& err) {
    r.status = Status::Fail;
    r.residual = std::numeric_limits<double>::quiet_NaN();
    r.reason = err.what();
  }
  return r;
}

std::size_t index_of(const std::string& id) {
  const auto& e = entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].spec.id == id) return i;
  }
  throw Error(ErrorCode::UnknownIdentity, id);
}

}  // namespace

IdentityRecord run_identity(const std::string& id, const TriangleData& t, std::uint64_t seed) {
  const std::size_t i = index_of(id);
  Context ctx(t, seed);
  return evaluate(i, ctx, seed);
}

std::vector<std::string> center_names() {
  return {"M", "O", "O_A", "O_B", "O_C", "I", "I_A", "I_B", "I_C", "H", "K", "L", "S", "Z", "F"};
}

std::vector<CenterEntry> center_table(const TriangleData& t, const std::vector<std::string>& which) {
  std::vector<std::string> names = which;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = center_names();
  const auto known = center_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw Error(ErrorCode::ParseError, "unknown center: " + n);
    }
  }
  Context ctx(t, 0);
  std::vector<CenterEntry> out;
  for (const auto& n : names) {
    CenterEntry e{n, std::nullopt, ""};
    try {
      if (n == "M") e.result = ctx.M();
      else if (n == "O") e.result = ctx.circ()[0];
      else if (n == "O_A") e.result = ctx.circ()[1];
      else if (n == "O_B") e.result = ctx.circ()[2];
      else if (n == "O_C") e.result = ctx.circ()[3];
      else if (n == "I") e.result = ctx.inc()[0];
      else if (n == "I_A") e.result = ctx.inc()[1];
      else if (n == "I_B") e.result = ctx.inc()[2];
      else if (n == "I_C") e.result = ctx.inc()[3];
      else if (n == "H") e.result = ctx.H();
      else if (n == "K") e.result = symmedian_point(t);
      else if (n == "L") e.result = lemoine_point(t);
      else if (n == "S") e.result = ctx.S().center;
      else if (n == "Z") e.result = pseudo_orthocenter(t).center;
      else if (n == "F") {
        const auto& s = ctx.S();
        const Cycle cyc = cycle_through(s.feet[0], s.feet[1], s.feet[2]);
        CenterResult f;
        f.name = "F";
        f.point = cyc.center;
        f.kind = classify(cyc.center);
        f.coords = tri_coords_projective(cyc.center, t);
        out.push_back({n, f, ""});
        continue;
      }
    } catch (const Error& err) {
      e.error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

TrialReport run_suite(const TriangleData& t, std::uint64_t seed, const SuiteOptions& opt) {
  TrialReport rep;
  rep.seed = seed;
  rep.triangle = t;
  Context ctx(t, seed);
  std::vector<std::size_t> order;
  if (opt.ids.empty()) {
    for (std::size_t i = 0; i < entries().size(); ++i) order.push_back(i);
  } else {
    for (const auto& id : opt.ids) order.push_back(index_of(id));
  }
  for (std::size_t i : order) {
    rep.records.push_back(evaluate(i, ctx, seed));
    if (opt.fail_fast && rep.records.back().status == Status::Fail) break;
  }
  if (opt.with_centers) rep.centers = center_table(t, {});
  return rep;
}

std::vector<TrialReport> run_seeds(std::uint64_t first, std::uint64_t last, const SuiteOptions& opt, int jobs,
                                   const GenConstraints& gen) {
  if (last < first) return {};
  for (const auto& id : opt.ids) index_of(id);  // reject unknown ids before spawning workers
  const std::size_t count = last - first + 1;
  std::vector<TrialReport> out(count);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::uint64_t seed = first + i;
      out[i] = run_suite(gen_triangle(seed, gen), seed, opt);
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (opt.fail_fast) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto& recs = out[i].records;
      if (std::any_of(recs.begin(), recs.end(), [](const IdentityRecord& r) { return r.status == Status::Fail; })) {
        out.resize(i + 1);
        break;
      }
    }
  }
  return out;
}

Summary summarize(const std::vector<TrialReport>& reports) {
  Summary s;
  s.trials = reports.size();
  for (const auto& rep : reports) {
    for (const auto& r : rep.records) {
      switch (r.status) {
        case Status::Pass: ++s.pass; break;
        case Status::Skipped: ++s.skipped; break;
        case Status::Fail:
          ++s.fail;
          s.failed.push_back(std::to_string(r.seed) + ":" + r.id);
          break;
      }
    }
  }
  return s;
}

void to_json(nlohmann::json& j, const IdentityRecord& r) {
  j = {{"seed", r.seed},           {"id", r.id},
       {"anchor", r.anchor},       {"residual", r.residual},
       {"tolerance", r.tolerance}, {"status", to_string(r.status)},
       {"reason", r.reason}};
}

void to_json(nlohmann::json& j, const CenterEntry& e) {
  if (e.result) {
    j = *e.result;
  } else {
    j = {{"name", e.name}, {"error", e.error}};
  }
}

void to_json(nlohmann::json& j, const Summary& s) {
  j = {{"summary",
        {{"trials", s.trials}, {"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"failed", s.failed}}}};
}

std::string report_lines(const std::vector<TrialReport>& reports) {
  std::string out;
  for (const auto& rep : reports) {
    for (const auto& r : rep.records) {
      out += nlohmann::json(r).dump();
      out += '\n';
    }
  }
  out += nlohmann::json(summarize(reports)).dump();
  out += '\n';
  return out;
}

nlohmann::json triangle_to_json(const TriangleData& t, std::uint64_t seed, Model model) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& p : t.verts()) {
    const ModelPoint mp = to_model(p, model);
    nlohmann::json coords = {mp.coords[0], mp.coords[1]};
    if (model == Model::Hyperboloid) coords.push_back(mp.coords[2]);
    verts.push_back({{"model", to_string(model)}, {"coords", coords}});
  }
  return {{"vertices", verts}, {"model", to_string(model)}, {"meta", {{"seed", seed}}}};
}

LoadedTriangle triangle_from_json(const nlohmann::json& j) {
  try {
    const auto& vs = j.at("vertices");
    if (!vs.is_array() || vs.size() != 3) throw Error(ErrorCode::ParseError, "expected three vertices");
    std::array<HPoint, 3> p;
    for (int i = 0; i < 3; ++i) {
      nlohmann::json v = vs.at(i);
      if (!v.contains("model")) v["model"] = j.value("model", "klein");
      p[i] = v.get<HPoint>();
    }
    LoadedTriangle out{from_vertices(p[0], p[1], p[2]), 0};
    if (j.contains("meta") && j["meta"].contains("seed")) out.seed = j["meta"]["seed"].get<std::uint64_t>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

LoadedTriangle read_triangle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return triangle_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

}  // namespace hyptri
