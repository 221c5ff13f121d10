#include "hyptri/centers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyptri/error.hpp"
#include "hyptri/rng.hpp"

namespace hyptri {

namespace {

Vec3 unit(const HPoint& p) { return normalized(p); }

Vec3 scaled(const HPoint& p) {
  return classify(p) == PointKind::Real ? normalized(p) : (1.0 / max_norm(p.h)) * p.h;
}

CenterResult make_center(std::string name, const HPoint& p, const TriCoords& coords) {
  CenterResult r;
  r.name = std::move(name);
  r.point = p;
  r.coords = coords;
  r.kind = classify(p);
  return r;
}

}  // namespace

double tanh_radius(const HPoint& center, const HPoint& on_cycle) {
  const Vec3 o = scaled(center);
  const Vec3 a = unit(on_cycle);
  const double ip = mink(o, a);
  return std::sqrt(std::max(0.0, 1.0 - quad(o) / (ip * ip)));
}

double tanh_point_line(const HPoint& p, const HLine& l) {
  const Vec3 x = scaled(p);
  const double ip = mink(x, l.h);
  return std::sqrt(ip * ip / (ip * ip - quad(x) * quad(l.h)));
}

HPoint midpoint(const HPoint& p, const HPoint& q) { return HPoint{unit(p) + unit(q)}; }

HPoint offset_point(const HPoint& x, const HPoint& ref, double r, double theta) {
  const Vec3 c = unit(x);
  const Vec3 toward = unit(ref);
  Vec3 e1 = toward - mink(c, toward) * c;
  e1 = (1.0 / std::sqrt(-quad(e1))) * e1;
  const Vec3 k = cross(c, e1);
  Vec3 e2{-k.x, -k.y, k.w};
  e2 = (1.0 / std::sqrt(-quad(e2))) * e2;
  return HPoint{std::cosh(r) * c + std::sinh(r) * (std::cos(theta) * e1 + std::sin(theta) * e2)};
}

CenterResult centroid(const TriangleData& t) {
  const auto& v = t.verts();
  const HLine med_a = join(v[0], along(v[1], v[2], 0.5 * t.a));
  const HLine med_b = join(v[1], along(v[2], v[0], 0.5 * t.b));
  const HLine med_c = join(v[2], along(v[0], v[1], 0.5 * t.c));
  CenterResult r = make_center("M", meet(med_a, med_b), {1.0, 1.0, 1.0});
  r.aux["concurrency"] = incidence_residual(r.point.h, med_c.h);
  return r;
}

std::array<CenterResult, 4> circumcenters(const TriangleData& t) {
  const auto& v = t.verts();
  const Vec3 A = unit(v[0]);
  const Vec3 B = unit(v[1]);
  const Vec3 C = unit(v[2]);
  const TriCoords o_coords{std::cos(t.delta + t.alpha) * std::sinh(t.a), std::cos(t.delta + t.beta) * std::sinh(t.b),
                           std::cos(t.delta + t.gamma) * std::sinh(t.c)};

  std::array<CenterResult, 4> out;
  out[0] = make_center("O", meet(perpendicular_bisector(v[0], v[1]), perpendicular_bisector(v[0], v[2])), o_coords);
  // With one real side kept, the other two sides use their complementary
  // segments; the bisector of such a segment is the polar of its midpoint.
  const HPoint oa = meet(HLine{B - C}, HLine{A + B});
  const HPoint ob = meet(HLine{C - A}, HLine{B + C});
  const HPoint oc = meet(HLine{A - B}, HLine{C + A});
  out[1] = make_center("O_A", oa, tri_coords_projective(oa, t));
  out[2] = make_center("O_B", ob, tri_coords_projective(ob, t));
  out[3] = make_center("O_C", oc, tri_coords_projective(oc, t));
  for (int i = 0; i < 4; ++i) {
    const HPoint& on = v[i == 0 ? 0 : i - 1];
    out[i].aux["tanh_R"] = tanh_radius(out[i].point, on);
    if (out[i].kind == PointKind::Real) out[i].aux["R"] = real_distance(out[i].point, on);
  }
  out[0].aux["concurrency"] = incidence_residual(out[0].point.h, perpendicular_bisector(v[1], v[2]).h);
  return out;
}

std::array<CenterResult, 4> incenter_excenters(const TriangleData& t) {
  const auto& v = t.verts();
  const auto [int_a, ext_a] = angle_bisectors(v[0], v[1], v[2]);
  const auto [int_b, ext_b] = angle_bisectors(v[1], v[2], v[0]);
  const auto [int_c, ext_c] = angle_bisectors(v[2], v[0], v[1]);
  const double sa = std::sinh(t.a);
  const double sb = std::sinh(t.b);
  const double sc = std::sinh(t.c);

  std::array<CenterResult, 4> out;
  out[0] = make_center("I", meet(int_a, int_b), {sa, sb, sc});
  out[1] = make_center("I_A", meet(int_a, ext_b), {-sa, sb, sc});
  out[2] = make_center("I_B", meet(ext_a, int_b), {sa, -sb, sc});
  out[3] = make_center("I_C", meet(ext_a, ext_b), {sa, sb, -sc});
  out[0].aux["concurrency"] = incidence_residual(out[0].point.h, int_c.h);
  out[1].aux["concurrency"] = incidence_residual(out[1].point.h, ext_c.h);
  out[2].aux["concurrency"] = incidence_residual(out[2].point.h, ext_c.h);
  out[3].aux["concurrency"] = incidence_residual(out[3].point.h, int_c.h);

  const std::array<HLine, 3> sides{join(v[1], v[2]), join(v[2], v[0]), join(v[0], v[1])};
  out[0].aux["tanh_r"] = tanh_point_line(out[0].point, sides[0]);
  for (int i = 1; i < 4; ++i) out[i].aux["tanh_r"] = tanh_point_line(out[i].point, sides[i - 1]);
  for (auto& c : out) {
    if (c.kind == PointKind::Real) c.aux["r"] = std::atanh(c.aux["tanh_r"]);
  }
  return out;
}

CenterResult orthocenter(const TriangleData& t) {
  const auto& v = t.verts();
  const HLine alt_a = join(v[0], pole(join(v[1], v[2])));
  const HLine alt_b = join(v[1], pole(join(v[2], v[0])));
  const HLine alt_c = join(v[2], pole(join(v[0], v[1])));
  const double ca = std::cos(t.alpha), cb = std::cos(t.beta), cg = std::cos(t.gamma);
  // tan α : tan β : tan γ, multiplied through by the cosines to survive a right angle.
  const TriCoords coords{std::sin(t.alpha) * cb * cg, ca * std::sin(t.beta) * cg, ca * cb * std::sin(t.gamma)};
  CenterResult r = make_center("H", meet(alt_a, alt_b), coords);
  r.aux["concurrency"] = incidence_residual(r.point.h, alt_c.h);
  return r;
}

IsogonalResult isogonal_conjugate(const HPoint& x, const TriangleData& t) {
  const auto& v = t.verts();
  const TriCoords k = classify(x) == PointKind::Real ? tri_coords(x, t) : tri_coords_projective(x, t);
  const double scale = std::max({std::abs(k[0]), std::abs(k[1]), std::abs(k[2])});
  for (double c : k) {
    if (std::abs(c) < 1e-12 * scale) throw Error(ErrorCode::OnSideLine, "point lies on a side line");
  }
  std::array<HLine, 3> reflected;
  for (int i = 0; i < 3; ++i) {
    const HLine bisector = angle_bisectors(v[i], v[(i + 1) % 3], v[(i + 2) % 3]).first;
    reflected[i] = join(v[i], reflect(x, bisector));
  }
  IsogonalResult r;
  r.point = meet(reflected[0], reflected[1]);
  r.kind = classify(r.point);
  r.at_infinity = r.kind != PointKind::Real;
  r.concurrency = incidence_residual(r.point.h, reflected[2].h);
  const double sq[3] = {std::sinh(t.a), std::sinh(t.b), std::sinh(t.c)};
  for (int i = 0; i < 3; ++i) r.coords[i] = sq[i] * sq[i] / k[i];
  return r;
}

CenterResult symmedian_point(const TriangleData& t) {
  const IsogonalResult conj = isogonal_conjugate(centroid(t).point, t);
  const double sa = std::sinh(t.a), sb = std::sinh(t.b), sc = std::sinh(t.c);
  CenterResult r = make_center("K", conj.point, {sa * sa, sb * sb, sc * sc});
  r.aux["concurrency"] = conj.concurrency;
  return r;
}

CenterResult lemoine_point(const TriangleData& t) {
  const auto& v = t.verts();
  const HPoint o = circumcenters(t)[0].point;
  std::array<HLine, 3> tangent;
  for (int i = 0; i < 3; ++i) tangent[i] = join(v[i], pole(join(o, v[i])));
  // Vertices of the tangential triangle, opposite A, B, C.
  const std::array<HPoint, 3> tv{meet(tangent[1], tangent[2]), meet(tangent[2], tangent[0]),
                                 meet(tangent[0], tangent[1])};
  const HLine ca = join(v[0], tv[0]);
  const HLine cb = join(v[1], tv[1]);
  const HLine cc = join(v[2], tv[2]);
  CenterResult r = make_center("L", meet(ca, cb),
                               {std::cosh(t.a) - 1.0, std::cosh(t.b) - 1.0, std::cosh(t.c) - 1.0});
  r.aux["concurrency"] = incidence_residual(r.point.h, cc.h);
  return r;
}

PseudoCenter pseudo_centroid(const TriangleData& t) {
  const auto& v = t.verts();
  const double ch[3] = {std::cosh(0.5 * t.a), std::cosh(0.5 * t.b), std::cosh(0.5 * t.c)};
  const double sides[3] = {t.a, t.b, t.c};
  PseudoCenter out;
  std::array<HLine, 3> cevians;
  for (int i = 0; i < 3; ++i) {
    // Foot on the side opposite vertex i, measured from vertex i+1:
    // sinh(x/2) : sinh((L-x)/2) = cosh(side_{i+2}/2) : cosh(side_{i+1}/2).
    const int j = (i + 1) % 3;
    const int l = (i + 2) % 3;
    const double half = sides[i] / 2.0;
    const double rho = ch[l] / ch[j];
    const double x = 2.0 * solve_sinh_ratio(half, rho);
    out.foot_params[i] = x;
    out.feet[i] = along(v[j], v[l], x);
    cevians[i] = join(v[i], out.feet[i]);
  }
  const double p3 = ch[0] * ch[1] * ch[2];
  const TriCoords coords{1.0 / (ch[1] * ch[1] * ch[2] * ch[2] + p3), 1.0 / (ch[0] * ch[0] * ch[2] * ch[2] + p3),
                         1.0 / (ch[0] * ch[0] * ch[1] * ch[1] + p3)};
  out.center = make_center("S", meet(cevians[0], cevians[1]), coords);
  out.center.aux["concurrency"] = incidence_residual(out.center.point.h, cevians[2].h);
  return out;
}

namespace {

double triangle_area(const HPoint& p, const HPoint& q, const HPoint& r) {
  return kPi - vertex_angle(p, q, r) - vertex_angle(q, r, p) - vertex_angle(r, p, q);
}

}  // namespace

PseudoFoot pseudo_altitude_foot(const HPoint& v, const HPoint& p, const HPoint& q) {
  const Vec3 V = unit(v);
  const Vec3 P = unit(p);
  const double L = real_distance(p, q);
  const double total = triangle_area(v, p, q);
  const HPoint q_dir = along(p, q, 1.0);
  const Vec3 t = (1.0 / std::sinh(1.0)) * (q_dir.h - std::cosh(1.0) * P);

  // Balance of the directed angle sums on both sides of the cevian V Z(u):
  // g = 2·φ(u) - π - T/2 + T₁(u), where φ is the angle at Z between ZP and
  // ZV and T₁ the area of V P Z signed by the side of P that Z lies on.
  const auto g = [&](double u) {
    const Vec3 z = std::cosh(u) * P + std::sinh(u) * t;
    const Vec3 back = -(std::sinh(u) * P + std::cosh(u) * t);
    const Vec3 w = V - mink(z, V) * z;
    const double nw = std::sqrt(-quad(w));
    const double phi = std::atan2(std::abs(det3(z, back, w)) / nw, -mink(back, w) / nw);
    double t1 = 0.0;
    if (u != 0.0) t1 = (u > 0 ? 1.0 : -1.0) * triangle_area(v, p, HPoint{z});
    return 2.0 * phi - kPi - 0.5 * total + t1;
  };

  const auto bisect = [&](double lo, double hi, double glo) {
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if ((gm < 0) == (glo < 0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  const auto scan = [&](double lo, double hi, int pieces) -> std::optional<double> {
    double x0 = lo;
    double g0 = g(x0);
    for (int k = 1; k <= pieces; ++k) {
      const double x1 = lo + (hi - lo) * k / pieces;
      const double g1 = g(x1);
      if (g0 == 0.0) return x0;
      if ((g0 < 0) != (g1 < 0)) return bisect(x0, x1, g0);
      x0 = x1;
      g0 = g1;
    }
    return std::nullopt;
  };

  const double eps = 1e-9;
  if (auto u = scan(eps, L - eps, 64)) return {*u, HPoint{std::cosh(*u) * P + std::sinh(*u) * t}, true};
  // The continued balance function may vanish beyond an endpoint.
  constexpr double kReach = 8.0;
  for (auto [lo, hi] : {std::pair{-kReach, -eps}, std::pair{L + eps, L + kReach}}) {
    if (auto u = scan(lo, hi, 256)) return {*u, HPoint{std::cosh(*u) * P + std::sinh(*u) * t}, false};
  }
  std::ostringstream profile;
  profile << "g-profile on the side:";
  for (int k = 0; k <= 8; ++k) profile << ' ' << g(eps + (L - 2 * eps) * k / 8);
  throw Error(ErrorCode::NoRootFound, profile.str());
}

PseudoCenter pseudo_orthocenter(const TriangleData& t) {
  const auto& v = t.verts();
  PseudoCenter out;
  std::array<HLine, 3> cevians;
  for (int i = 0; i < 3; ++i) {
    const PseudoFoot f = pseudo_altitude_foot(v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
    out.feet[i] = f.point;
    out.foot_params[i] = f.u;
    out.inside[i] = f.inside;
    cevians[i] = join(v[i], f.point);
  }
  const HPoint z = meet(cevians[0], cevians[1]);
  out.center = make_center("Z", z, tri_coords_projective(z, t));
  out.center.aux["concurrency"] = incidence_residual(z.h, cevians[2].h);
  return out;
}

EulerReport euler_line(const TriangleData& t) {
  const auto& v = t.verts();
  EulerReport r;
  const Vec3 o = circumcenters(t)[0].point.h;
  const PseudoCenter s = pseudo_centroid(t);
  const Vec3 f = cycle_through(s.feet[0], s.feet[1], s.feet[2]).center.h;
  const HPoint i = incenter_excenters(t)[0].point;
  const HPoint xa = meet(join(v[0], i), join(v[1], v[2]));
  const HPoint xb = meet(join(v[1], i), join(v[2], v[0]));
  const HPoint xc = meet(join(v[2], i), join(v[0], v[1]));
  const Vec3 f_bis = cycle_through(xa, xb, xc).center.h;
  const Vec3 sp = s.center.point.h;

  r.det_OFS = normalized_det(o, f, sp);
  r.det_OFbis_S = normalized_det(o, f_bis, sp);
  r.det_OMH = normalized_det(o, centroid(t).point.h, orthocenter(t).point.h);
  r.isosceles_measure = std::abs(t.a - t.b) * std::abs(t.b - t.c) * std::abs(t.c - t.a);
  r.max_det = r.det_OFS;
  try {
    const Vec3 z = pseudo_orthocenter(t).center.point.h;
    r.det_OFZ = normalized_det(o, f, z);
    r.det_OSZ = normalized_det(o, sp, z);
    r.det_FSZ = normalized_det(f, sp, z);
    r.max_det = std::max({r.det_OFS, r.det_OFZ, r.det_OSZ, r.det_FSZ});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoRootFound) throw;
    r.z_found = false;
    r.z_error = e.what();
    r.det_OFZ = r.det_OSZ = r.det_FSZ = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

namespace {

double coord_sum(const HPoint& p, const TriangleData& t) {
  const TriCoords k = tri_coords(p, t);
  return k[0] + k[1] + k[2];
}

double rel_gap(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale > 1e-6 ? std::abs(x - y) / scale : std::abs(x - y);
}

// min over the perturbation grid of f(P) - f(X).
template <class F>
double grid_margin(const HPoint& x, const HPoint& ref, F&& f) {
  const double fx = f(x);
  double margin = std::numeric_limits<double>::infinity();
  for (double r : {1e-3, 1e-2, 1e-1}) {
    for (int k = 0; k < 8; ++k) {
      margin = std::min(margin, f(offset_point(x, ref, r, k * kPi / 4.0)) - fx);
    }
  }
  return margin;
}

}  // namespace

MinimalityReport incenter_minimality(const TriangleData& t, int samples, std::uint64_t seed) {
  const auto& v = t.verts();
  MinimalityReport r;
  const HPoint I = incenter_excenters(t)[0].point;
  const HPoint M = centroid(t).point;
  const auto circ = circumcenters(t);
  const HPoint& O = circ[0].point;
  r.circumcenter_real = circ[0].kind == PointKind::Real;

  const auto f = [&](const HPoint& p) { return coord_sum(p, t); };
  const auto cosh_sum = [&](const HPoint& y) {
    return std::cosh(real_distance(y, v[0])) + std::cosh(real_distance(y, v[1])) + std::cosh(real_distance(y, v[2]));
  };

  r.incenter_margin = grid_margin(I, v[0], f);
  r.incenter_minimal = r.incenter_margin > 0;
  r.centroid_margin = grid_margin(M, v[0], cosh_sum);
  r.centroid_minimal = r.centroid_margin > 0;
  if (r.circumcenter_real) {
    r.circumcenter_margin = grid_margin(O, v[0], f);
    r.circumcenter_minimal = r.circumcenter_margin > 0;
  }

  const double ratio_m = t.n / tri_coords(M, t)[0];
  const double cosh_R = r.circumcenter_real ? std::cosh(circ[0].aux.at("R")) : 0.0;
  Rng rng(seed);
  const auto random_point = [&] {
    for (;;) {
      const double x = rng.uniform(-0.9, 0.9);
      const double y = rng.uniform(-0.9, 0.9);
      if (x * x + y * y < 0.81) return klein_point(x, y);
    }
  };
  for (int k = 0; k < samples; ++k) {
    const HPoint p = random_point();
    const HPoint q = random_point();
    const double fp = f(p);
    r.incenter_closed_form = std::max(r.incenter_closed_form, rel_gap(fp, 0.5 * t.N * std::cosh(real_distance(p, I))));
    const TriCoords kq = tri_coords(q, t);
    const double lhs = kq[0] * std::cosh(real_distance(p, v[0])) + kq[1] * std::cosh(real_distance(p, v[1])) +
                       kq[2] * std::cosh(real_distance(p, v[2]));
    r.pair_identity = std::max(r.pair_identity, rel_gap(lhs, t.n * std::cosh(real_distance(p, q))));
    r.centroid_closed_form =
        std::max(r.centroid_closed_form, rel_gap(std::cosh(real_distance(p, M)), cosh_sum(p) / ratio_m));
    if (r.circumcenter_real) {
      r.circumcenter_closed_form =
          std::max(r.circumcenter_closed_form, rel_gap(fp, t.n * std::cosh(real_distance(p, O)) / cosh_R));
    }
  }
  return r;
}

void to_json(nlohmann::json& j, const CenterResult& c) {
  j = {{"name", c.name},
       {"point", c.point},
       {"coords", {c.coords[0], c.coords[1], c.coords[2]}},
       {"aux", c.aux},
       {"classification", to_string(c.kind)}};
}

}  // namespace hyptri
