#include "hyptri/render.hpp"

#include <cmath>
#include <cstdio>

#include "hyptri/error.hpp"
#include "hyptri/harness.hpp"

namespace hyptri {

namespace {

constexpr double kScale = 180.0;
constexpr double kCenter = 200.0;

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string num(double v) { return fmt("%.4f", v); }
std::string sx(double x) { return num(kCenter + kScale * x); }
std::string sy(double y) { return num(kCenter - kScale * y); }

struct P2 {
  double x, y;
};

P2 in_model(const HPoint& p, Model m) {
  const ModelPoint mp = to_model(p, m);
  return {mp.coords[0], mp.coords[1]};
}

// Boundary endpoints of a real line in Klein coordinates.
std::pair<P2, P2> klein_ends(const HLine& l) {
  // Incidence is Minkowski: n.x*x + n.y*y = n.w in Klein coordinates.
  const Vec3 n = l.h;
  const double nn = n.x * n.x + n.y * n.y;
  const P2 foot{n.w * n.x / nn, n.w * n.y / nn};
  const double half = std::sqrt(std::max(0.0, 1.0 - (foot.x * foot.x + foot.y * foot.y)));
  const double len = std::sqrt(nn);
  const P2 dir{-n.y / len, n.x / len};
  return {{foot.x - half * dir.x, foot.y - half * dir.y}, {foot.x + half * dir.x, foot.y + half * dir.y}};
}

// Geodesic between two points of the closed model disk, as an SVG path.
std::string geodesic(P2 p, P2 q, Model m, const char* style) {
  std::string d = "M " + sx(p.x) + " " + sy(p.y) + " ";
  const double cr = p.x * q.y - p.y * q.x;
  if (m == Model::Klein || std::abs(cr) < 1e-12) {
    d += "L " + sx(q.x) + " " + sy(q.y);
  } else {
    // Circle orthogonal to the unit circle through p and q.
    const double p2 = p.x * p.x + p.y * p.y, q2 = q.x * q.x + q.y * q.y;
    const double det = 2 * cr;
    const double cx = ((1 + p2) * q.y - (1 + q2) * p.y) / det;
    const double cy = ((1 + q2) * p.x - (1 + p2) * q.x) / det;
    const double r = std::hypot(p.x - cx, p.y - cy);
    // Counterclockwise travel about the origin in the model is clockwise on
    // the y-down screen, which is SVG's positive sweep.
    const int sweep = cr > 0 ? 1 : 0;
    d += "A " + num(kScale * r) + " " + num(kScale * r) + " 0 0 " + std::to_string(sweep) + " " + sx(q.x) + " " +
         sy(q.y);
  }
  return "<path d=\"" + d + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const TriangleData& t, const RenderOptions& opt) {
  if (opt.model != Model::Klein && opt.model != Model::Poincare) {
    throw Error(ErrorCode::ParseError, "render supports the klein and poincare models");
  }
  const auto& v = t.verts();
  std::string s =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
      "<circle cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const char* side = "fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\"";
  for (int i = 0; i < 3; ++i) {
    s += geodesic(in_model(v[i], opt.model), in_model(v[(i + 1) % 3], opt.model), opt.model, side);
  }
  const char* names[] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    const P2 p = in_model(v[i], opt.model);
    s += "<circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"2.5\" fill=\"black\"/>\n";
    s += "<text x=\"" + sx(p.x + 0.02) + "\" y=\"" + sy(p.y + 0.02) + "\" font-size=\"12\">" + names[i] + "</text>\n";
  }
  std::vector<CenterEntry> centers;
  if (!opt.centers.empty()) centers = center_table(t, opt.centers);
  if (opt.euler_line) {
    const auto ends = center_table(t, {"O", "Z"});
    if (ends[0].result && ends[1].result && ends[0].result->kind == PointKind::Real &&
        ends[1].result->kind == PointKind::Real) {
      const HLine l = join(ends[0].result->point, ends[1].result->point);
      const auto [e1, e2] = klein_ends(l);
      // Boundary points agree in both disks.
      s += geodesic(e1, e2, opt.model,
                    "fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    }
  }
  for (const auto& c : centers) {
    if (!c.result || c.result->kind != PointKind::Real) continue;
    const P2 p = in_model(c.result->point, opt.model);
    s += "<circle class=\"center\" cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"3\" fill=\"#b03a2e\"/>\n";
    s += "<text x=\"" + sx(p.x + 0.02) + "\" y=\"" + sy(p.y - 0.04) + "\" font-size=\"10\">" + c.name + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

void render_svg(const TriangleData& t, const RenderOptions& opt, const std::string& path) {
  write_text(path, render_svg(t, opt));
}

}  // namespace hyptri
