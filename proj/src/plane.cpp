#include "hyptri/plane.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyptri/error.hpp"

namespace hyptri {

double mink(const Vec3& a, const Vec3& b) { return a.w * b.w - a.x * b.x - a.y * b.y; }

double euclid_norm(const Vec3& a) { return std::sqrt(a.x * a.x + a.y * a.y + a.w * a.w); }

double max_norm(const Vec3& a) { return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.w)}); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.w - a.w * b.y, a.w * b.x - a.x * b.w, a.x * b.y - a.y * b.x};
}

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 bc = cross(b, c);
  return a.x * bc.x + a.y * bc.y + a.w * bc.w;
}

double normalized_det(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double s = euclid_norm(a) * euclid_norm(b) * euclid_norm(c);
  if (s == 0.0) throw Error(ErrorCode::ZeroVector, "normalized_det");
  return std::abs(det3(a, b, c)) / s;
}

double projective_gap(const Vec3& a, const Vec3& b) {
  const double na = euclid_norm(a);
  const double nb = euclid_norm(b);
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::ZeroVector, "projective_gap");
  const Vec3 ua = (1.0 / na) * a;
  const Vec3 ub = (1.0 / nb) * b;
  return std::min(euclid_norm(ua - ub), euclid_norm(ua + ub));
}

double incidence_residual(const Vec3& p, const Vec3& l) {
  const double s = euclid_norm(p) * euclid_norm(l);
  if (s == 0.0) throw Error(ErrorCode::ZeroVector, "incidence_residual");
  return std::abs(mink(p, l)) / s;
}

namespace {

// J·v with J = diag(-1, -1, 1): converts a Euclidean normal into line coordinates.
Vec3 lower(const Vec3& v) { return {-v.x, -v.y, v.w}; }

void require_nonzero(const Vec3& v, const char* what) {
  if (max_norm(v) == 0.0) throw Error(ErrorCode::ZeroVector, what);
}

double scaled_quad(const Vec3& v) {
  const double m = max_norm(v);
  return quad((1.0 / m) * v);
}

// Chart-affine representative: w = 1, or for w = 0 the sign with first
// nonzero coordinate positive.
Vec3 affine_rep(const Vec3& v) {
  const double m = max_norm(v);
  if (std::abs(v.w) > 1e-15 * m) return (1.0 / v.w) * v;
  const double lead = std::abs(v.x) > 1e-15 * m ? v.x : v.y;
  return (lead < 0 ? -1.0 : 1.0) * v;
}

Vec3 tangent_toward(const Vec3& p, const Vec3& q, double d) {
  // (q - cosh d·p)/sinh d with the cancellation in cosh d - 1 removed.
  const double sh = std::sinh(0.5 * d);
  const Vec3 num = (q - p) - (2.0 * sh * sh) * p;
  return (1.0 / std::sinh(d)) * num;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

double acosh_clamped(double x) { return std::acosh(std::max(1.0, x)); }

}  // namespace

HPoint klein_point(double x, double y) { return HPoint{{x, y, 1.0}}; }

PointKind classify(const HPoint& p) {
  require_nonzero(p.h, "classify");
  const double q = scaled_quad(p.h);
  if (q > kClassifyEps) return PointKind::Real;
  if (q < -kClassifyEps) return PointKind::Ideal;
  return PointKind::Infinite;
}

LineKind line_kind(const HLine& l) {
  require_nonzero(l.h, "line_kind");
  const double q = scaled_quad(l.h);
  if (q < -kClassifyEps) return LineKind::Real;
  if (q > kClassifyEps) return LineKind::Ideal;
  return LineKind::AtInfinity;
}

Vec3 normalized(const HPoint& p) {
  require_nonzero(p.h, "normalized");
  const double m = max_norm(p.h);
  const Vec3 v = (1.0 / m) * p.h;
  const double q = quad(v);
  if (q <= kClassifyEps) throw Error(ErrorCode::OutOfDomain, "point is not real");
  const double s = (v.w > 0 ? 1.0 : -1.0) / std::sqrt(q);
  const double x = s * v.x;
  const double y = s * v.y;
  return {x, y, std::sqrt(1.0 + x * x + y * y)};
}

std::array<double, 2> to_klein(const HPoint& p) {
  if (std::abs(p.h.w) <= 1e-15 * max_norm(p.h)) throw Error(ErrorCode::OutOfDomain, "point has w = 0");
  return {p.h.x / p.h.w, p.h.y / p.h.w};
}

HLine join(const HPoint& p, const HPoint& q) {
  const Vec3 c = cross(p.h, q.h);
  if (euclid_norm(c) <= 1e-13 * euclid_norm(p.h) * euclid_norm(q.h)) {
    throw Error(ErrorCode::CoincidentArguments, "join of proportional points");
  }
  return HLine{lower(c)};
}

HPoint meet(const HLine& l, const HLine& m) {
  const Vec3 c = cross(l.h, m.h);
  if (euclid_norm(c) <= 1e-13 * euclid_norm(l.h) * euclid_norm(m.h)) {
    throw Error(ErrorCode::CoincidentArguments, "meet of proportional lines");
  }
  return HPoint{lower(c)};
}

HLine polar(const HPoint& p) {
  require_nonzero(p.h, "polar");
  return HLine{p.h};
}

HPoint pole(const HLine& l) {
  require_nonzero(l.h, "pole");
  return HPoint{l.h};
}

double real_distance(const HPoint& p, const HPoint& q) {
  const Vec3 a = normalized(p);
  const Vec3 b = normalized(q);
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dw = ((a.x * a.x + a.y * a.y) - (b.x * b.x + b.y * b.y)) / (a.w + b.w);
  const double chord2 = std::max(0.0, dx * dx + dy * dy - dw * dw);
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

double signed_distance(const HPoint& p, const HLine& l) {
  const Vec3 a = normalized(p);
  const double ql = quad(l.h);
  if (!(ql < 0)) throw Error(ErrorCode::OutOfDomain, "signed_distance needs a real line");
  return std::asinh(mink(a, l.h) / std::sqrt(-ql));
}

HPoint along(const HPoint& p, const HPoint& q, double u) {
  const Vec3 a = normalized(p);
  const Vec3 b = normalized(q);
  const double d = real_distance(p, q);
  if (d == 0.0) throw Error(ErrorCode::IdenticalPoints, "along");
  const Vec3 t = tangent_toward(a, b, d);
  return HPoint{std::cosh(u) * a + std::sinh(u) * t};
}

double arc_param(const HPoint& p, const HPoint& q, const HPoint& x) {
  const Vec3 a = normalized(p);
  const Vec3 b = normalized(q);
  const double d = real_distance(p, q);
  if (d == 0.0) throw Error(ErrorCode::IdenticalPoints, "arc_param");
  const Vec3 t = tangent_toward(a, b, d);
  return std::asinh(-mink(normalized(x), t));
}

double vertex_angle(const HPoint& v, const HPoint& p, const HPoint& q) {
  const Vec3 c = normalized(v);
  const Vec3 a = normalized(p);
  const Vec3 b = normalized(q);
  const Vec3 u = a - mink(c, a) * c;
  const Vec3 w = b - mink(c, b) * c;
  const double nu = std::sqrt(-quad(u));
  const double nw = std::sqrt(-quad(w));
  const double cs = -mink(u, w) / (nu * nw);
  const double sn = std::abs(det3(c, u, w)) / (nu * nw);
  return std::atan2(sn, cs);
}

DistanceResult distance_ext(const HPoint& a, const HPoint& b) {
  if (projective_gap(a.h, b.h) < 1e-12) throw Error(ErrorCode::IdenticalPoints, "distance_ext");
  const PointKind ka = classify(a);
  const PointKind kb = classify(b);
  const LineKind carrier = line_kind(join(a, b));
  const auto wrap = [&](const std::pair<ExtLength, ExtLength>& p) {
    return DistanceResult{ExtComplex::from(p.first), ExtComplex::from(p.second), carrier};
  };

  if (carrier == LineKind::Ideal) {
    if (ka != PointKind::Ideal || kb != PointKind::Ideal) {
      throw Error(ErrorCode::UnsupportedConfiguration, "non-ideal point on an ideal line");
    }
    const double c = -mink(a.h, b.h) / std::sqrt(quad(a.h) * quad(b.h));
    const double phi = std::acos(clamp_unit(c));
    return {ExtComplex{0.0, phi}, ExtComplex{0.0, kPi - phi}, carrier};
  }
  if (carrier == LineKind::AtInfinity) return wrap(segment_lengths(carrier, ka, kb, 0.0));

  if (ka == PointKind::Infinite || kb == PointKind::Infinite) return wrap(segment_lengths(carrier, ka, kb, 0.0));
  if (ka == PointKind::Real && kb == PointKind::Real) {
    return wrap(segment_lengths(carrier, ka, kb, real_distance(a, b)));
  }
  const bool bounded_side = mink(affine_rep(a.h), affine_rep(b.h)) > 0.0;
  if (ka == PointKind::Ideal && kb == PointKind::Ideal) {
    const double d = acosh_clamped(std::abs(mink(a.h, b.h)) / std::sqrt(quad(a.h) * quad(b.h)));
    return wrap(segment_lengths(carrier, ka, kb, bounded_side ? d : -d));
  }
  const HPoint& real = ka == PointKind::Real ? a : b;
  const HPoint& ideal = ka == PointKind::Real ? b : a;
  const double d = std::abs(signed_distance(real, polar(ideal)));
  return wrap(segment_lengths(carrier, ka, kb, bounded_side ? d : -d));
}

ExtPair angle_ext(const HLine& a, const HLine& b) {
  if (projective_gap(a.h, b.h) < 1e-12) throw Error(ErrorCode::CoincidentLines, "angle_ext");
  const LineKind ka = line_kind(a);
  const LineKind kb = line_kind(b);
  const PointKind km = classify(meet(a, b));
  const auto is = [&](LineKind x, LineKind y) { return (ka == x && kb == y) || (ka == y && kb == x); };
  const ExtPair infinite_pair{ExtComplex{ExtReal::pos_inf(), 0.0}, ExtComplex{ExtReal::neg_inf(), 0.0}};
  const auto imaginary_pair = [](double p) { return ExtPair{ExtComplex{0.0, -p}, ExtComplex{kPi, p}}; };

  if (is(LineKind::Real, LineKind::Real)) {
    const double norm = std::sqrt(quad(a.h) * quad(b.h));
    switch (km) {
      case PointKind::Real: {
        const double phi = std::acos(clamp_unit(-mink(a.h, b.h) / norm));
        return {ExtComplex{phi, 0.0}, ExtComplex{kPi - phi, 0.0}};
      }
      case PointKind::Infinite: return {ExtComplex{0.0, 0.0}, ExtComplex{kPi, 0.0}};
      case PointKind::Ideal: return imaginary_pair(acosh_clamped(std::abs(mink(a.h, b.h)) / norm));
    }
  }
  if (is(LineKind::Real, LineKind::AtInfinity)) {
    if (km == PointKind::Infinite) return {ExtComplex{kHalfPi, 0.0}, ExtComplex{kHalfPi, 0.0}};
    if (km == PointKind::Ideal) return infinite_pair;
  }
  if (is(LineKind::Real, LineKind::Ideal) && km == PointKind::Ideal) {
    const HLine& real = ka == LineKind::Real ? a : b;
    const HLine& ideal = ka == LineKind::Real ? b : a;
    const double a1 = std::abs(signed_distance(pole(ideal), real));
    return {ExtComplex{kHalfPi, -a1}, ExtComplex{kHalfPi, a1}};
  }
  if ((is(LineKind::AtInfinity, LineKind::AtInfinity) || is(LineKind::AtInfinity, LineKind::Ideal)) &&
      km == PointKind::Ideal) {
    return infinite_pair;
  }
  if (is(LineKind::Ideal, LineKind::Ideal) && km == PointKind::Ideal) {
    return imaginary_pair(real_distance(pole(a), pole(b)));
  }
  throw Error(ErrorCode::UnsupportedConfiguration,
              std::string("angle of ") + to_string(ka) + " and " + to_string(kb) + " lines meeting at a " +
                  to_string(km) + " point");
}

HPoint foot_of_perpendicular(const HPoint& p, const HLine& l) { return meet(join(p, pole(l)), l); }

HLine perpendicular_bisector(const HPoint& p, const HPoint& q) {
  const Vec3 d = normalized(p) - normalized(q);
  if (max_norm(d) < 1e-15) throw Error(ErrorCode::IdenticalPoints, "perpendicular_bisector");
  return HLine{d};
}

std::pair<HLine, HLine> angle_bisectors(const HPoint& v, const HPoint& p1, const HPoint& p2) {
  Vec3 n1 = join(v, p1).h;
  Vec3 n2 = join(v, p2).h;
  n1 = (1.0 / std::sqrt(-quad(n1))) * n1;
  n2 = (1.0 / std::sqrt(-quad(n2))) * n2;
  if (mink(normalized(p2), n1) < 0) n1 = -n1;
  if (mink(normalized(p1), n2) < 0) n2 = -n2;
  return {HLine{n1 - n2}, HLine{n1 + n2}};
}

HPoint reflect(const HPoint& p, const HLine& l) {
  const double ll = quad(l.h);
  if (ll == 0.0) throw Error(ErrorCode::UnsupportedConfiguration, "reflection in a line at infinity");
  return HPoint{p.h - (2.0 * mink(p.h, l.h) / ll) * l.h};
}

const char* to_string(CycleKind k) {
  switch (k) {
    case CycleKind::Circle: return "circle";
    case CycleKind::Paracycle: return "paracycle";
    case CycleKind::Hypercycle: return "hypercycle";
  }
  return "?";
}

Cycle cycle_through(const HPoint& p, const HPoint& q, const HPoint& r) {
  const Vec3 a = normalized(p);
  const Vec3 b = normalized(q);
  const Vec3 c = normalized(r);
  if (normalized_det(a, b, c) < 1e-12) throw Error(ErrorCode::CollinearPoints, "cycle_through");
  const HPoint center = meet(perpendicular_bisector(p, q), perpendicular_bisector(p, r));
  Cycle out{center, ExtLength(0.0), CycleKind::Circle};
  switch (classify(center)) {
    case PointKind::Real: out.kind = CycleKind::Circle; break;
    case PointKind::Infinite: out.kind = CycleKind::Paracycle; break;
    case PointKind::Ideal: out.kind = CycleKind::Hypercycle; break;
  }
  out.radius = distance_ext(center, p).ab.to_length();
  return out;
}

const char* to_string(Model m) {
  switch (m) {
    case Model::Klein: return "klein";
    case Model::Poincare: return "poincare";
    case Model::Hyperboloid: return "hyperboloid";
  }
  return "?";
}

Model parse_model(const std::string& s) {
  if (s == "klein") return Model::Klein;
  if (s == "poincare") return Model::Poincare;
  if (s == "hyperboloid") return Model::Hyperboloid;
  throw Error(ErrorCode::ParseError, "unknown model: " + s);
}

HPoint from_model(const ModelPoint& p) {
  const double x = p.coords[0];
  const double y = p.coords[1];
  switch (p.model) {
    case Model::Klein: return klein_point(x, y);
    case Model::Poincare: {
      const double r2 = x * x + y * y;
      if (!(r2 < 1.0)) throw Error(ErrorCode::OutOfDomain, "Poincare point outside the open disk");
      return HPoint{{2.0 * x, 2.0 * y, 1.0 + r2}};
    }
    case Model::Hyperboloid: return HPoint{{x, y, p.coords[2]}};
  }
  throw Error(ErrorCode::OutOfDomain, "model");
}

ModelPoint to_model(const HPoint& p, Model m) {
  switch (m) {
    case Model::Klein: {
      const auto k = to_klein(p);
      return {m, {k[0], k[1], 0.0}};
    }
    case Model::Poincare: {
      const Vec3 v = normalized(p);
      return {m, {v.x / (1.0 + v.w), v.y / (1.0 + v.w), 0.0}};
    }
    case Model::Hyperboloid: {
      const Vec3 v = normalized(p);
      return {m, {v.x, v.y, v.w}};
    }
  }
  throw Error(ErrorCode::OutOfDomain, "model");
}

ModelPoint model_convert(const ModelPoint& p, Model to) {
  if (p.model == Model::Klein) {
    const double r2 = p.coords[0] * p.coords[0] + p.coords[1] * p.coords[1];
    if (!(r2 < 1.0)) throw Error(ErrorCode::OutOfDomain, "Klein point outside the open disk");
    if (to == Model::Poincare) {
      // Direct form avoids a detour through the hyperboloid near the boundary.
      const double s = 1.0 / (1.0 + std::sqrt(1.0 - r2));
      return {to, {s * p.coords[0], s * p.coords[1], 0.0}};
    }
  }
  if (p.model == Model::Poincare && to == Model::Klein) {
    const double r2 = p.coords[0] * p.coords[0] + p.coords[1] * p.coords[1];
    if (!(r2 < 1.0)) throw Error(ErrorCode::OutOfDomain, "Poincare point outside the open disk");
    const double s = 2.0 / (1.0 + r2);
    return {to, {s * p.coords[0], s * p.coords[1], 0.0}};
  }
  return to_model(from_model(p), to);
}

void to_json(nlohmann::json& j, const HPoint& p) {
  if (classify(p) == PointKind::Real) {
    const auto k = to_klein(p);
    j = {{"model", "klein"}, {"coords", {k[0], k[1]}}};
    return;
  }
  const Vec3 v = (1.0 / max_norm(p.h)) * p.h;
  j = {{"model", "hyperboloid"}, {"coords", {v.x, v.y, v.w}}};
}

void from_json(const nlohmann::json& j, HPoint& p) {
  const Model m = parse_model(j.at("model").get<std::string>());
  const auto& c = j.at("coords");
  ModelPoint mp{m, {c.at(0).get<double>(), c.at(1).get<double>(), 0.0}};
  if (m == Model::Hyperboloid) mp.coords[2] = c.at(2).get<double>();
  p = from_model(mp);
}

void to_json(nlohmann::json& j, const Cycle& c) {
  j = {{"center", c.center}, {"radius", c.radius}, {"kind", to_string(c.kind)}};
}

}  // namespace hyptri
