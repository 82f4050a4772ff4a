#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spectral_bounds {

struct Box {
  std::vector<double> sides;
};

struct Disk {
  double radius = 1.0;
};

struct Ball3 {
  double radius = 1.0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Simple polygon, counterclockwise.
struct Polygon {
  std::vector<Point2> vertices;
};

/// A benchmark domain. Construction validates the shape, so every Domain
/// value satisfies its invariants.
class Domain {
 public:
  using Shape = std::variant<Box, Disk, Ball3, Polygon>;

  static Domain box(std::vector<double> sides);
  static Domain disk(double radius);
  static Domain ball3(double radius);
  static Domain polygon(std::vector<Point2> vertices);

  const Shape& shape() const { return shape_; }
  int dim() const;

  /// Canonical spec string, e.g. "box:1,2".
  std::string spec() const;

 private:
  explicit Domain(Shape shape) : shape_(std::move(shape)) {}
  Shape shape_;
};

/// Parses `box:a1,a2[,...]`, `disk:r`, `ball3:r`, `polygon:x1,y1;x2,y2;...`.
/// Throws std::invalid_argument on malformed input or invalid shapes.
Domain parse_domain(std::string_view spec);

struct GeometricFunctionals {
  int dim = 0;
  double volume = 0.0;
  double inertia = 0.0;   // moment of inertia about the centroid
  double r_omega = 0.0;   // radius of the ball with the same volume
  double j1 = 0.0;        // sqrt(volume) / (2 sqrt(inertia))
  double diameter = 0.0;
};

double volume(const Domain& d);

/// inf_a of the integral of |x - a|^2 over the domain; attained at the centroid.
double moment_of_inertia(const Domain& d);

double diameter(const Domain& d);

GeometricFunctionals functionals(const Domain& d);

/// Builds functionals from raw volume/inertia data (no shape needed).
GeometricFunctionals functionals_from(int dim, double volume, double inertia,
                                      double diameter);

/// Relative slack of inertia >= n/(n+2) r_omega^2 volume (>= 0 when it holds).
double ball_inertia_slack(const GeometricFunctionals& g);

/// Upper end of the admissible j1 range, sqrt((n+2)/n) / (2 r_omega).
double j1_upper_limit(const GeometricFunctionals& g);

}  // namespace spectral_bounds
