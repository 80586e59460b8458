#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frechet/free_space.hpp"

namespace frechet {

enum class LineKind { Boundary, Critical };

/// One grid line of the refined free-space diagram. Boundary lines come from
/// curve vertices; critical lines are drawn through critical points and are
/// perpendicular to the boundary owning the point. Identity (owner vertex,
/// strip, end) is stable; ties in geometric position are broken by identity so
/// rebuilds are replayable.
struct GridLine {
  LineKind kind;
  int vertex;        // boundary: own vertex index; critical: owner boundary vertex
  int strip;         // critical only: strip the line lives in
  IntervalEnd end;   // critical only
  double position;   // global diagram coordinate of the line
};

enum class VertexClass { Corner, Boundary, Interior };

/// Refined free-space graph: ordered vertical and horizontal lines with 0/1
/// vertex weights at every crossing. Edges are implicit: each vertex connects
/// to its right neighbour and its up neighbour in the line orderings.
class RefinedFSG {
public:
  explicit RefinedFSG(const FreeSpaceSkeleton& sk) {
    const int np = sk.n_pi(), ns = sk.n_sigma();
    for (int i = 0; i < np; ++i) {
      vlines_.push_back({LineKind::Boundary, i, -1, IntervalEnd::Lo, double(i)});
      if (i + 1 < np) append_strip_criticals(vlines_, sk, /*column=*/true, i, ns);
    }
    for (int j = 0; j < ns; ++j) {
      hlines_.push_back({LineKind::Boundary, j, -1, IntervalEnd::Lo, double(j)});
      if (j + 1 < ns) append_strip_criticals(hlines_, sk, /*column=*/false, j, np);
    }
    weights_.assign(vlines_.size() * hlines_.size(), 1);
    for (std::size_t vi = 0; vi < vlines_.size(); ++vi)
      for (std::size_t hi = 0; hi < hlines_.size(); ++hi) {
        const GridLine& v = vlines_[vi];
        const GridLine& h = hlines_[hi];
        bool w = true;
        if (v.kind == LineKind::Boundary && h.kind == LineKind::Boundary)
          w = sk.corner_free(v.vertex, h.vertex);
        else if (v.kind == LineKind::Boundary && h.kind == LineKind::Critical)
          w = sk.vertical(v.vertex, h.strip) &&
              sk.vertical(v.vertex, h.strip)->contains(h.position - double(h.strip));
        else if (v.kind == LineKind::Critical && h.kind == LineKind::Boundary)
          w = sk.horizontal(h.vertex, v.strip) &&
              sk.horizontal(h.vertex, v.strip)->contains(v.position - double(v.strip));
        weights_[vi * hlines_.size() + hi] = w ? 1 : 0;
      }
  }

  const std::vector<GridLine>& vertical_lines() const { return vlines_; }
  const std::vector<GridLine>& horizontal_lines() const { return hlines_; }

  bool weight(std::size_t vi, std::size_t hi) const {
    return weights_[vi * hlines_.size() + hi] != 0;
  }

  VertexClass vertex_class(std::size_t vi, std::size_t hi) const {
    const bool vb = vlines_[vi].kind == LineKind::Boundary;
    const bool hb = hlines_[hi].kind == LineKind::Boundary;
    if (vb && hb) return VertexClass::Corner;
    if (vb || hb) return VertexClass::Boundary;
    return VertexClass::Interior;
  }

  nlohmann::ordered_json dump() const {
    nlohmann::ordered_json out;
    auto lines = [](const std::vector<GridLine>& ls) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const GridLine& l : ls) {
        nlohmann::ordered_json e;
        e["kind"] = l.kind == LineKind::Boundary ? "boundary" : "critical";
        e["vertex"] = l.vertex;
        if (l.kind == LineKind::Critical) {
          e["strip"] = l.strip;
          e["end"] = l.end == IntervalEnd::Lo ? "lo" : "hi";
        }
        e["position"] = l.position;
        arr.push_back(e);
      }
      return arr;
    };
    out["vertical_lines"] = lines(vlines_);
    out["horizontal_lines"] = lines(hlines_);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t hi = 0; hi < hlines_.size(); ++hi) {
      std::string row(vlines_.size(), '0');
      for (std::size_t vi = 0; vi < vlines_.size(); ++vi)
        if (weight(vi, hi)) row[vi] = '1';
      rows.push_back(row);
    }
    out["weights"] = rows;
    return out;
  }

private:
  static void append_strip_criticals(std::vector<GridLine>& lines, const FreeSpaceSkeleton& sk,
                                     bool column, int strip, int owners) {
    std::vector<GridLine> cs;
    for (int o = 0; o < owners; ++o)
      for (IntervalEnd end : {IntervalEnd::Lo, IntervalEnd::Hi}) {
        const bool crit = column ? sk.horizontal_critical(o, strip, end)
                                 : sk.vertical_critical(o, strip, end);
        if (!crit) continue;
        const auto& ivl = column ? sk.horizontal(o, strip) : sk.vertical(o, strip);
        const double local = end == IntervalEnd::Lo ? ivl->lo : ivl->hi;
        cs.push_back({LineKind::Critical, o, strip, end, double(strip) + local});
      }
    std::stable_sort(cs.begin(), cs.end(), [](const GridLine& a, const GridLine& b) {
      if (a.position != b.position) return a.position < b.position;
      if (a.vertex != b.vertex) return a.vertex < b.vertex;
      return int(a.end) < int(b.end);
    });
    lines.insert(lines.end(), cs.begin(), cs.end());
  }

  std::vector<GridLine> vlines_;
  std::vector<GridLine> hlines_;
  std::vector<std::uint8_t> weights_;
};

inline RefinedFSG build_fsg(const FreeSpaceSkeleton& sk) { return RefinedFSG(sk); }

/// st-reachability over activated vertices with implicit up/right edges, by a
/// single monotone pass in line order.
inline bool fsg_reachable(const RefinedFSG& g) {
  const std::size_t nv = g.vertical_lines().size();
  const std::size_t nh = g.horizontal_lines().size();
  std::vector<std::uint8_t> reach(nv * nh, 0);
  for (std::size_t vi = 0; vi < nv; ++vi)
    for (std::size_t hi = 0; hi < nh; ++hi) {
      if (!g.weight(vi, hi)) continue;
      const bool from_start = vi == 0 && hi == 0;
      const bool from_left = vi > 0 && reach[(vi - 1) * nh + hi];
      const bool from_below = hi > 0 && reach[vi * nh + (hi - 1)];
      reach[vi * nh + hi] = (from_start || from_left || from_below) ? 1 : 0;
    }
  return reach[(nv - 1) * nh + (nh - 1)] != 0;
}

}  // namespace frechet
