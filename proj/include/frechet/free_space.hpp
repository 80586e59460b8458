#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "frechet/curve.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

enum class BoundaryOrientation { Vertical, Horizontal };

/// Identifies one cell-boundary piece of the free-space diagram. A vertical
/// boundary is the piece of line x == vertex (of pi) inside row strip `strip`;
/// a horizontal boundary is the piece of line y == vertex (of sigma) inside
/// column strip `strip`.
struct BoundaryId {
  BoundaryOrientation orientation;
  int vertex;
  int strip;
};

enum class IntervalEnd { Lo, Hi };

/// Identity of a critical point: which boundary owns it and which end of the
/// boundary's free interval it is. Identities are stable while the point
/// exists, which is what event application diffs against.
struct CriticalPointId {
  BoundaryId boundary;
  IntervalEnd end;
};

/// Free intervals of every cell-boundary piece plus corner memberships for a
/// fixed (pi, sigma, delta). Corner membership is the authority for endpoint
/// classification: an interval endpoint coinciding with a free corner is
/// clamped to the corner and is not a critical point.
class FreeSpaceSkeleton {
public:
  FreeSpaceSkeleton(const Curve& pi, const Curve& sigma, double delta, Tolerance tol = Tolerance{})
      : delta_(delta), tol_(tol), np_(int(pi.size())), ns_(int(sigma.size())) {
    if (delta < 0.0) throw std::invalid_argument("FreeSpaceSkeleton: delta must be >= 0");
    corners_.assign(std::size_t(np_) * ns_, 0);
    for (int i = 0; i < np_; ++i)
      for (int j = 0; j < ns_; ++j)
        corners_[idx_c(i, j)] = distance(pi[i], sigma[j]) <= delta ? 1 : 0;
    vert_.resize(std::size_t(np_) * (ns_ - 1));
    for (int i = 0; i < np_; ++i)
      for (int j = 0; j + 1 < ns_; ++j)
        vert_[idx_v(i, j)] =
            reconcile(free_interval(pi[i], delta, sigma.edge(j), tol), corner_free(i, j),
                      corner_free(i, j + 1));
    horz_.resize(std::size_t(ns_) * (np_ - 1));
    for (int j = 0; j < ns_; ++j)
      for (int i = 0; i + 1 < np_; ++i)
        horz_[idx_h(j, i)] =
            reconcile(free_interval(sigma[j], delta, pi.edge(i), tol), corner_free(i, j),
                      corner_free(i + 1, j));
  }

  double delta() const { return delta_; }
  const Tolerance& tolerance() const { return tol_; }
  int n_pi() const { return np_; }
  int n_sigma() const { return ns_; }

  bool corner_free(int i, int j) const { return corners_[idx_c(i, j)] != 0; }

  /// Free interval of the vertical boundary (pi vertex i, row strip j).
  const std::optional<Interval>& vertical(int i, int j) const { return vert_[idx_v(i, j)]; }
  /// Free interval of the horizontal boundary (sigma vertex j, column strip i).
  const std::optional<Interval>& horizontal(int j, int i) const { return horz_[idx_h(j, i)]; }

  // An endpoint is a critical point iff it lies strictly inside the open
  // strip; reconcile() already snapped endpoints onto free corners.
  static bool endpoint_critical(const std::optional<Interval>& ivl, IntervalEnd end) {
    if (!ivl) return false;
    const double p = end == IntervalEnd::Lo ? ivl->lo : ivl->hi;
    return p > 0.0 && p < 1.0;
  }

  bool vertical_critical(int i, int j, IntervalEnd end) const {
    return endpoint_critical(vertical(i, j), end);
  }
  bool horizontal_critical(int j, int i, IntervalEnd end) const {
    return endpoint_critical(horizontal(j, i), end);
  }

  /// Row critical points of row strip j: endpoints of vertical-boundary free
  /// intervals strictly inside the strip. Count per row is m_j^r.
  int m_row(int j) const {
    int m = 0;
    for (int i = 0; i < np_; ++i) {
      m += vertical_critical(i, j, IntervalEnd::Lo) ? 1 : 0;
      m += vertical_critical(i, j, IntervalEnd::Hi) ? 1 : 0;
    }
    return m;
  }
  int m_col(int i) const {
    int m = 0;
    for (int j = 0; j < ns_; ++j) {
      m += horizontal_critical(j, i, IntervalEnd::Lo) ? 1 : 0;
      m += horizontal_critical(j, i, IntervalEnd::Hi) ? 1 : 0;
    }
    return m;
  }

  /// Mutable access for event-driven maintenance (sweep module).
  void set_corner(int i, int j, bool free) { corners_[idx_c(i, j)] = free ? 1 : 0; }
  void set_vertical(int i, int j, std::optional<Interval> ivl) { vert_[idx_v(i, j)] = ivl; }
  void set_horizontal(int j, int i, std::optional<Interval> ivl) { horz_[idx_h(j, i)] = ivl; }

  /// Clamps a raw free interval against the memberships of the two corners the
  /// boundary piece ends at, making corner membership and interval coverage
  /// consistent under floating point.
  static std::optional<Interval> reconcile(std::optional<Interval> raw, bool lo_corner_free,
                                           bool hi_corner_free) {
    if (lo_corner_free || hi_corner_free) {
      if (!raw) raw = Interval{lo_corner_free ? 0.0 : 1.0, lo_corner_free ? 0.0 : 1.0};
      if (lo_corner_free) raw->lo = 0.0;
      if (hi_corner_free) raw->hi = 1.0;
    }
    return raw;
  }

private:
  std::size_t idx_c(int i, int j) const { return std::size_t(i) * ns_ + j; }
  std::size_t idx_v(int i, int j) const { return std::size_t(i) * (ns_ - 1) + j; }
  std::size_t idx_h(int j, int i) const { return std::size_t(j) * (np_ - 1) + i; }

  double delta_;
  Tolerance tol_;
  int np_;
  int ns_;
  std::vector<std::uint8_t> corners_;
  std::vector<std::optional<Interval>> vert_;
  std::vector<std::optional<Interval>> horz_;
};

inline FreeSpaceSkeleton build_skeleton(const Curve& pi, const Curve& sigma, double delta,
                                        Tolerance tol = Tolerance{}) {
  return FreeSpaceSkeleton(pi, sigma, delta, tol);
}

inline bool corner_free(const Curve& pi, const Curve& sigma, double delta, int i, int j) {
  return distance(pi[i], sigma[j]) <= delta;
}

namespace detail {

inline std::optional<Interval> clip_from(const std::optional<Interval>& ivl, double lo_bound) {
  if (!ivl) return std::nullopt;
  const double lo = std::max(ivl->lo, lo_bound);
  if (lo > ivl->hi) return std::nullopt;
  return Interval{lo, ivl->hi};
}

}  // namespace detail

/// Decision procedure: d_F(pi, sigma) <= delta iff a bi-monotone path through
/// the free space connects the bottom-left and top-right corners. Reachable
/// sub-intervals are propagated cell by cell in O(n_pi * n_sigma).
inline bool alt_godau_decide(const FreeSpaceSkeleton& sk) {
  const int np = sk.n_pi(), ns = sk.n_sigma();
  if (!sk.corner_free(0, 0) || !sk.corner_free(np - 1, ns - 1)) return false;

  // Reach along the left diagram boundary (x == 0) and the bottom (y == 0).
  std::vector<std::optional<Interval>> left(ns - 1), bottom(np - 1);
  for (int j = 0; j + 1 < ns; ++j) {
    const bool below_ok = j == 0 || (left[j - 1] && left[j - 1]->hi >= 1.0);
    const auto& ivl = sk.vertical(0, j);
    left[j] = (below_ok && ivl && ivl->lo <= 0.0) ? std::optional<Interval>{Interval{0.0, ivl->hi}}
                                                  : std::nullopt;
  }
  for (int i = 0; i + 1 < np; ++i) {
    const bool before_ok = i == 0 || (bottom[i - 1] && bottom[i - 1]->hi >= 1.0);
    const auto& ivl = sk.horizontal(0, i);
    bottom[i] = (before_ok && ivl && ivl->lo <= 0.0)
                    ? std::optional<Interval>{Interval{0.0, ivl->hi}}
                    : std::nullopt;
  }

  std::vector<std::optional<Interval>> lr = left;  // reach on V(i, j) for current i
  for (int i = 0; i + 1 < np; ++i) {
    std::optional<Interval> br = bottom[i];  // reach on H(j, i) for current j
    for (int j = 0; j + 1 < ns; ++j) {
      const std::optional<Interval> l = lr[j];
      const std::optional<Interval> b = br;
      const auto& right = sk.vertical(i + 1, j);
      const auto& top = sk.horizontal(j + 1, i);
      std::optional<Interval> rr, tr;
      if (b)
        rr = right;
      else if (l)
        rr = detail::clip_from(right, l->lo);
      if (l)
        tr = top;
      else if (b)
        tr = detail::clip_from(top, b->lo);
      lr[j] = rr;
      br = tr;
    }
    if (i + 2 == np && br && br->hi >= 1.0) return true;  // exit across the top edge
  }
  return lr[ns - 2] && lr[ns - 2]->hi >= 1.0;
}

inline bool alt_godau_decide(const Curve& pi, const Curve& sigma, double delta,
                             Tolerance tol = Tolerance{}) {
  return alt_godau_decide(FreeSpaceSkeleton(pi, sigma, delta, tol));
}

/// Bisects the decision procedure down to value_tol. The upper bracket is the
/// maximum vertex-pair distance, which bounds d_F for polygonal curves.
inline double frechet_value(const Curve& pi, const Curve& sigma, double value_tol,
                            Tolerance tol = Tolerance{}) {
  if (!(value_tol > 0.0)) throw std::invalid_argument("frechet_value: value_tol must be > 0");
  double hi = 0.0;
  for (const Point2& p : pi.pts)
    for (const Point2& q : sigma.pts) hi = std::max(hi, distance(p, q));
  if (alt_godau_decide(pi, sigma, 0.0, tol)) return 0.0;
  double lo = 0.0;
  int guard = 0;
  while (hi - lo > value_tol && ++guard < 200) {
    const double mid = 0.5 * (lo + hi);
    if (alt_godau_decide(pi, sigma, mid, tol))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace frechet
