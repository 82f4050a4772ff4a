#include "spectral_bounds/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/format.hpp"

namespace spectral_bounds {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1,
                        const Point2& q2) {
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_segment(q2, p1, p2)) return true;
  return false;
}

double signed_area(const std::vector<Point2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

Point2 centroid(const std::vector<Point2>& v) {
  // Accumulate relative to the first vertex to limit cancellation.
  const Point2 o = v.front();
  double twice_area = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const double ax = v[i].x - o.x, ay = v[i].y - o.y;
    const double bx = v[(i + 1) % n].x - o.x, by = v[(i + 1) % n].y - o.y;
    const double c = ax * by - bx * ay;
    twice_area += c;
    cx += (ax + bx) * c;
    cy += (ay + by) * c;
  }
  return {o.x + cx / (3.0 * twice_area), o.y + cy / (3.0 * twice_area)};
}

void validate_polygon(const std::vector<Point2>& v) {
  if (v.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const auto& p : v)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("polygon vertices must be finite");
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i].x == v[j].x && v[i].y == v[j].y)
        throw std::invalid_argument("polygon has repeated vertices");
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw std::invalid_argument("polygon is not simple");
    }
  }
  // Adjacent edges may only meet at their shared vertex.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    const auto& c = v[(i + 2) % n];
    if (cross(a, b, c) == 0.0) {
      const double dot = (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y);
      if (dot > 0.0) throw std::invalid_argument("polygon folds back on itself");
    }
  }
  if (!(signed_area(v) > 0.0))
    throw std::invalid_argument("polygon must be counterclockwise with positive area");
}

double parse_real(std::string_view s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  for (auto tok : split(s, ',')) out.push_back(parse_real(tok));
  return out;
}

}  // namespace

Domain Domain::box(std::vector<double> sides) {
  if (sides.empty()) throw std::invalid_argument("box needs at least one side");
  for (double a : sides) require_positive_finite(a, "box side");
  return Domain(Box{std::move(sides)});
}

Domain Domain::disk(double radius) {
  require_positive_finite(radius, "disk radius");
  return Domain(Disk{radius});
}

Domain Domain::ball3(double radius) {
  require_positive_finite(radius, "ball radius");
  return Domain(Ball3{radius});
}

Domain Domain::polygon(std::vector<Point2> vertices) {
  validate_polygon(vertices);
  return Domain(Polygon{std::move(vertices)});
}

int Domain::dim() const {
  return std::visit(overloaded{[](const Box& b) { return static_cast<int>(b.sides.size()); },
                               [](const Disk&) { return 2; },
                               [](const Ball3&) { return 3; },
                               [](const Polygon&) { return 2; }},
                    shape_);
}

std::string Domain::spec() const {
  return std::visit(
      overloaded{[](const Box& b) {
                   std::string s = "box:";
                   for (std::size_t i = 0; i < b.sides.size(); ++i) {
                     if (i) s += ',';
                     s += format_real(b.sides[i]);
                   }
                   return s;
                 },
                 [](const Disk& d) { return "disk:" + format_real(d.radius); },
                 [](const Ball3& b) { return "ball3:" + format_real(b.radius); },
                 [](const Polygon& p) {
                   std::string s = "polygon:";
                   for (std::size_t i = 0; i < p.vertices.size(); ++i) {
                     if (i) s += ';';
                     s += format_real(p.vertices[i].x) + ',' + format_real(p.vertices[i].y);
                   }
                   return s;
                 }},
      shape_);
}

Domain parse_domain(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("domain spec must look like kind:params");
  const auto kind = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (kind == "box") return Domain::box(parse_list(body));
  if (kind == "disk") return Domain::disk(parse_real(body));
  if (kind == "ball3") return Domain::ball3(parse_real(body));
  if (kind == "polygon") {
    std::vector<Point2> pts;
    for (auto tok : split(body, ';')) {
      const auto xy = parse_list(tok);
      if (xy.size() != 2) throw std::invalid_argument("polygon vertex needs x,y");
      pts.push_back({xy[0], xy[1]});
    }
    return Domain::polygon(std::move(pts));
  }
  throw std::invalid_argument("unknown domain kind '" + std::string(kind) + "'");
}

double volume(const Domain& d) {
  return std::visit(
      overloaded{[](const Box& b) {
                   double v = 1.0;
                   for (double a : b.sides) v *= a;
                   return v;
                 },
                 [](const Disk& d) { return std::numbers::pi * d.radius * d.radius; },
                 [](const Ball3& b) {
                   return 4.0 / 3.0 * std::numbers::pi * b.radius * b.radius * b.radius;
                 },
                 [](const Polygon& p) { return signed_area(p.vertices); }},
      d.shape());
}

double moment_of_inertia(const Domain& d) {
  return std::visit(
      overloaded{[&](const Box& b) {
                   double sum_sq = 0.0;
                   for (double a : b.sides) sum_sq += a * a;
                   return volume(d) * sum_sq / 12.0;
                 },
                 [](const Disk& disk) {
                   // radial integral n omega(n) r^{n+2} / (n+2), n = 2
                   return 0.5 * std::numbers::pi * std::pow(disk.radius, 4);
                 },
                 [](const Ball3& ball) {
                   return 3.0 * unit_ball_volume(3) / 5.0 * std::pow(ball.radius, 5);
                 },
                 [](const Polygon& p) {
                   // Exact monomial integrals over the fan of triangles from the
                   // centroid, i.e. the shoelace moments of the shifted polygon.
                   const Point2 c = centroid(p.vertices);
                   double ixx = 0.0, iyy = 0.0;
                   const std::size_t n = p.vertices.size();
                   for (std::size_t i = 0; i < n; ++i) {
                     const double ax = p.vertices[i].x - c.x, ay = p.vertices[i].y - c.y;
                     const double bx = p.vertices[(i + 1) % n].x - c.x;
                     const double by = p.vertices[(i + 1) % n].y - c.y;
                     const double w = ax * by - bx * ay;
                     ixx += w * (ax * ax + ax * bx + bx * bx);
                     iyy += w * (ay * ay + ay * by + by * by);
                   }
                   return (ixx + iyy) / 12.0;
                 }},
      d.shape());
}

double diameter(const Domain& d) {
  return std::visit(overloaded{[](const Box& b) {
                                 double s = 0.0;
                                 for (double a : b.sides) s += a * a;
                                 return std::sqrt(s);
                               },
                               [](const Disk& disk) { return 2.0 * disk.radius; },
                               [](const Ball3& ball) { return 2.0 * ball.radius; },
                               [](const Polygon& p) {
                                 double best = 0.0;
                                 for (const auto& a : p.vertices)
                                   for (const auto& b : p.vertices)
                                     best = std::max(best, std::hypot(a.x - b.x, a.y - b.y));
                                 return best;
                               }},
                    d.shape());
}

GeometricFunctionals functionals_from(int dim, double vol, double inertia, double diam) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  require_positive_finite(vol, "volume");
  require_positive_finite(inertia, "inertia");
  GeometricFunctionals g;
  g.dim = dim;
  g.volume = vol;
  g.inertia = inertia;
  g.r_omega = std::pow(vol / unit_ball_volume(dim), 1.0 / dim);
  g.j1 = std::sqrt(vol) / (2.0 * std::sqrt(inertia));
  g.diameter = diam;
  return g;
}

GeometricFunctionals functionals(const Domain& d) {
  return functionals_from(d.dim(), volume(d), moment_of_inertia(d), diameter(d));
}

double ball_inertia_slack(const GeometricFunctionals& g) {
  const double n = g.dim;
  const double ball = n / (n + 2.0) * g.r_omega * g.r_omega * g.volume;
  return (g.inertia - ball) / ball;
}

double j1_upper_limit(const GeometricFunctionals& g) {
  const double n = g.dim;
  return std::sqrt((n + 2.0) / n) / (2.0 * g.r_omega);
}

}  // namespace spectral_bounds
