#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

/// Polygonal curve: ordered vertices, consecutive duplicates collapsed, n >= 2.
struct Curve {
  std::vector<Point2> pts;

  std::size_t size() const { return pts.size(); }
  const Point2& operator[](std::size_t i) const { return pts[i]; }

  /// Point at global parameter x in [0, n-1] (vertex i at x == i).
  Point2 at(double x) const {
    if (x <= 0.0) return pts.front();
    if (x >= double(pts.size() - 1)) return pts.back();
    const auto i = std::size_t(x);
    return pts[i] + (x - double(i)) * (pts[i + 1] - pts[i]);
  }

  Segment2 edge(std::size_t i) const { return {pts[i], pts[i + 1]}; }
  std::size_t edges() const { return pts.size() - 1; }
};

struct Translation2 {
  double tx = 0.0;
  double ty = 0.0;

  Point2 vec() const { return {tx, ty}; }
};

inline Curve translate(const Curve& c, Translation2 t) {
  Curve out;
  out.pts.reserve(c.size());
  for (const Point2& p : c.pts) out.pts.push_back(p + t.vec());
  return out;
}

inline Curve translate(const Curve& c, Point2 t) { return translate(c, Translation2{t.x, t.y}); }

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct ParsedCurve {
  Curve curve;
  int collapsed_duplicates = 0;
};

/// Curve file format: first line is the vertex count n, then n lines "x y".
/// Lines starting with '#' are comments. Consecutive duplicate vertices are
/// collapsed (counted in the result) and n < 2 after collapsing is an error.
inline ParsedCurve parse_curve(std::istream& in) {
  int line_no = 0;
  long declared = -1;
  ParsedCurve out;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (declared < 0) {
      if (!(ls >> declared) || declared < 0)
        throw ParseError(line_no, "expected vertex count");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing tokens after vertex count");
      continue;
    }
    if (long(out.curve.pts.size()) + out.collapsed_duplicates == declared)
      throw ParseError(line_no, "more vertices than declared");
    Point2 p;
    if (!(ls >> p.x >> p.y)) throw ParseError(line_no, "malformed vertex line");
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing tokens on vertex line");
    if (!is_finite(p)) throw ParseError(line_no, "non-finite coordinate");
    if (!out.curve.pts.empty() && out.curve.pts.back() == p) {
      ++out.collapsed_duplicates;
      continue;
    }
    out.curve.pts.push_back(p);
  }
  if (declared < 0) throw ParseError(line_no, "empty input");
  if (long(out.curve.pts.size()) + out.collapsed_duplicates != declared)
    throw ParseError(line_no, "vertex count mismatch");
  if (out.curve.pts.size() < 2) throw ParseError(line_no, "n < 2 after normalization");
  return out;
}

inline ParsedCurve parse_curve(const std::string& text) {
  std::istringstream in(text);
  return parse_curve(in);
}

/// 17 significant digits so parse(serialize(c)) round-trips bit-exactly.
inline void serialize_curve(const Curve& c, std::ostream& out) {
  out << c.size() << '\n';
  char buf[64];
  for (const Point2& p : c.pts) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g", p.x, p.y);
    out << buf << '\n';
  }
}

inline std::string serialize_curve(const Curve& c) {
  std::ostringstream out;
  serialize_curve(c, out);
  return out.str();
}

struct Box2 {
  Point2 min{0, 0};
  Point2 max{1, 1};
};

/// Deterministic random curve: vertices i.i.d. uniform in the box, duplicate
/// neighbours resampled so every edge is a proper segment.
inline Curve random_curve(std::uint64_t seed, std::size_t n, const Box2& bbox) {
  if (n < 2) throw std::invalid_argument("random_curve: n must be >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(bbox.min.x, bbox.max.x);
  std::uniform_real_distribution<double> uy(bbox.min.y, bbox.max.y);
  Curve c;
  c.pts.reserve(n);
  while (c.pts.size() < n) {
    Point2 p{ux(rng), uy(rng)};
    if (!c.pts.empty() && c.pts.back() == p) continue;
    c.pts.push_back(p);
  }
  return c;
}

inline Box2 bounding_box(const Curve& c) {
  Box2 b{c.pts.front(), c.pts.front()};
  for (const Point2& p : c.pts) {
    b.min.x = std::min(b.min.x, p.x);
    b.min.y = std::min(b.min.y, p.y);
    b.max.x = std::max(b.max.x, p.x);
    b.max.y = std::max(b.max.y, p.y);
  }
  return b;
}

}  // namespace frechet
