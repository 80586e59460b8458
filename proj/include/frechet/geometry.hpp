#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace frechet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Point2 a, Point2 b) { return !(a == b); }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::sqrt(norm_sq(a)); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Unit direction vector. Construction normalizes and rejects the zero vector.
class Direction2 {
public:
  Direction2(double dx, double dy) {
    const double n = std::sqrt(dx * dx + dy * dy);
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("Direction2: zero or non-finite direction");
    v_ = {dx / n, dy / n};
  }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  Point2 vec() const { return v_; }

private:
  Point2 v_;
};

/// Closed segment a + s*(b-a), s in [0,1]. Endpoints must differ.
struct Segment2 {
  Point2 a;
  Point2 b;

  Point2 at(double s) const { return a + s * (b - a); }
  Point2 dir() const { return b - a; }
  double length() const { return distance(a, b); }
};

inline Segment2 operator+(Segment2 s, Point2 t) { return {s.a + t, s.b + t}; }

/// Global coincidence/boundary classification tolerance.
struct Tolerance {
  double eps = 1e-9;

  explicit Tolerance(double e = 1e-9) : eps(e) {
    if (!(eps >= 0.0) || !(eps < 1e-3))
      throw std::invalid_argument("Tolerance: eps must be in [0, 1e-3)");
  }
};

/// Closed parameter interval [lo, hi], used both for boundary free intervals
/// and for feasible ranges of the sweep parameter.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double s) const { return lo <= s && s <= hi; }
  double length() const { return hi - lo; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

struct QuadraticRoots {
  std::array<double, 2> root{0.0, 0.0};
  int count = 0;         // number of distinct roots reported (0..2)
  bool double_root = false;  // single root with multiplicity two

  bool empty() const { return count == 0; }
};

/// Solves a*x^2 + b*x + c = 0 with the sign-matched "q formula" so that the
/// smaller-magnitude root is not lost to cancellation. Roots are sorted
/// ascending; a pair closer than tol.eps collapses to one root flagged as a
/// double root. Degenerates to the linear case when a == 0.
inline QuadraticRoots solve_quadratic(double a, double b, double c, const Tolerance& tol) {
  QuadraticRoots out;
  if (a == 0.0 && b == 0.0 && c == 0.0)
    throw std::invalid_argument("solve_quadratic: all coefficients zero");
  if (a == 0.0) {
    if (b == 0.0) return out;  // c != 0: no roots
    out.root[0] = -c / b;
    out.count = 1;
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  const double scale = std::max({1.0, b * b, std::abs(4.0 * a * c)});
  if (disc < 0.0) {
    if (disc >= -tol.eps * scale) {  // grazing contact: keep as tangency
      out.root[0] = -b / (2.0 * a);
      out.count = 1;
      out.double_root = true;
    }
    return out;
  }
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  double r1, r2;
  if (q == 0.0) {  // b == 0 and disc == 0 (or c == 0 with b == 0)
    r1 = -sq / (2.0 * a);
    r2 = sq / (2.0 * a);
  } else {
    r1 = q / a;
    r2 = c / q;
  }
  if (r1 > r2) std::swap(r1, r2);
  if (r2 - r1 <= tol.eps) {
    out.root[0] = 0.5 * (r1 + r2);
    out.count = 1;
    out.double_root = true;
  } else {
    out.root = {r1, r2};
    out.count = 2;
  }
  return out;
}

struct FootDistance {
  double distance = 0.0;
  double foot = 0.0;  // parameter in [0,1] attaining the minimum, clamped
};

inline FootDistance point_segment_distance(Point2 p, const Segment2& s) {
  const Point2 d = s.dir();
  const double len2 = norm_sq(d);
  double t = len2 > 0.0 ? dot(p - s.a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return {distance(p, s.at(t)), t};
}

/// Parameter set { s in [0,1] : |seg(s) - center| <= radius }. By convexity of
/// the disk this is empty or a single closed interval; a tangency comes back
/// as a degenerate interval rather than being dropped.
inline std::optional<Interval> free_interval(Point2 center, double radius, const Segment2& seg,
                                             const Tolerance& tol) {
  const Point2 d = seg.dir();
  const Point2 f = seg.a - center;
  const QuadraticRoots r =
      solve_quadratic(norm_sq(d), 2.0 * dot(f, d), norm_sq(f) - radius * radius, tol);
  if (r.empty()) return std::nullopt;
  const double s1 = r.root[0];
  const double s2 = r.count == 2 ? r.root[1] : r.root[0];
  if (s2 < 0.0 || s1 > 1.0) return std::nullopt;
  return Interval{std::max(s1, 0.0), std::min(s2, 1.0)};
}

struct CirclePoints {
  std::array<Point2, 2> point{};
  int count = 0;
};

/// Intersections of two equal-radius circles. Centers must be distinct; the
/// external tangency case collapses to the single midpoint. Points come back
/// in a fixed order ("left" of c1->c2 first) so callers are deterministic.
inline CirclePoints circle_circle_intersections(Point2 c1, Point2 c2, double radius,
                                                const Tolerance& tol) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle_circle: radius must be positive");
  const double d = distance(c1, c2);
  if (d <= tol.eps) throw std::invalid_argument("circle_circle: coincident centers");
  CirclePoints out;
  if (d > 2.0 * radius + tol.eps) return out;
  const Point2 mid = 0.5 * (c1 + c2);
  if (d >= 2.0 * radius - tol.eps) {  // tangent within tolerance
    out.point[0] = mid;
    out.count = 1;
    return out;
  }
  const double h = std::sqrt(std::max(0.0, radius * radius - 0.25 * d * d));
  const Point2 u = (1.0 / d) * (c2 - c1);
  const Point2 perp{-u.y, u.x};
  out.point[0] = mid + h * perp;
  out.point[1] = mid + (-h) * perp;
  out.count = 2;
  return out;
}

}  // namespace frechet
