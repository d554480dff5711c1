#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "txray/error.hpp"
#include "txray/lattice.hpp"
#include "txray/rational.hpp"

namespace txray {

/// { v : <v, normal> <= level } with primitive normal.
struct HalfSpace {
  Vec2 normal;
  Rational level;
};

/// Normalizes the normal to primitive form, scaling the level to keep the
/// same halfplane.
inline HalfSpace make_halfspace(const Vec2& normal, const Rational& level) {
  if (normal.is_zero())
    throw Error(ErrorCode::ZeroVector, "halfspace normal must be nonzero");
  std::int64_t g = coordinate_gcd(normal);
  return HalfSpace{primitive(normal), level / Rational(g)};
}

struct Segment {
  Point2 a;
  Point2 b;

  friend bool operator==(const Segment&, const Segment&) = default;
};

inline Rational cross(const std::array<Rational, 2>& u,
                      const std::array<Rational, 2>& v) {
  return u[0] * v[1] - u[1] * v[0];
}

/// Orientation of c relative to the directed line a -> b (positive: left).
inline Rational orient2(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b - a, c - a);
}

inline bool collinear(const Point2& a, const Point2& b, const Point2& c) {
  return orient2(a, b, c) == 0;
}

inline bool on_segment(const Segment& s, const Point2& p) {
  if (!collinear(s.a, s.b, p)) return false;
  for (int i = 0; i < 2; ++i) {
    const Rational& lo = s.a[i] < s.b[i] ? s.a[i] : s.b[i];
    const Rational& hi = s.a[i] < s.b[i] ? s.b[i] : s.a[i];
    if (p[i] < lo || p[i] > hi) return false;
  }
  return true;
}

/// Convex region of Q^2 with exact vertices. Full-dimensional polygons are
/// stored counterclockwise, strictly convex, starting at the lex-smallest
/// vertex. A 2-vertex list is a degenerate segment hull, a 1-vertex list a
/// point; callers that need full dimension must check.
struct Polygon {
  std::vector<Point2> vertices;

  bool is_point() const { return vertices.size() == 1; }
  bool is_segment() const { return vertices.size() == 2; }
  bool is_full_dimensional() const { return vertices.size() >= 3; }
  std::size_t size() const { return vertices.size(); }

  const Point2& vertex(std::size_t i) const {
    return vertices[i % vertices.size()];
  }

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

namespace detail {

inline void rotate_to_lex_min(std::vector<Point2>& verts) {
  auto it = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), it, verts.end());
}

}  // namespace detail

/// Validating constructor: requires a counterclockwise, strictly convex
/// vertex list (no three consecutive collinear); canonicalizes the starting
/// vertex.
inline Polygon make_polygon(std::vector<Point2> verts) {
  if (verts.size() < 3)
    throw Error(ErrorCode::InvalidInput,
                "polygon needs at least 3 vertices; got " +
                    std::to_string(verts.size()));
  const std::size_t n = verts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = verts[i];
    const Point2& b = verts[(i + 1) % n];
    const Point2& c = verts[(i + 2) % n];
    if (orient2(a, b, c) <= 0)
      throw Error(ErrorCode::InvalidInput,
                  "polygon is not strictly convex counterclockwise at " +
                      to_string(b));
  }
  detail::rotate_to_lex_min(verts);
  return Polygon{std::move(verts)};
}

/// Counterclockwise convex hull (monotone chain). Collinear input yields a
/// degenerate 2-vertex segment, a single repeated point a 1-vertex hull.
inline Polygon hull2(std::span<const Point2> points) {
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "convex hull of an empty point set");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() == 1) return Polygon{{pts[0]}};

  bool all_collinear = true;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (!collinear(pts[0], pts[1], pts[i])) {
      all_collinear = false;
      break;
    }
  }
  if (all_collinear) return Polygon{{pts.front(), pts.back()}};

  auto build = [&](auto begin, auto end) {
    std::vector<Point2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orient2(chain[chain.size() - 2], chain.back(), *it) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Point2> lower = build(pts.begin(), pts.end());
  std::vector<Point2> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return make_polygon(std::move(lower));
}

/// Closed membership; handles degenerate hulls.
inline bool contains(const Polygon& poly, const Point2& p) {
  if (poly.is_point()) return poly.vertices[0] == p;
  if (poly.is_segment())
    return on_segment(Segment{poly.vertices[0], poly.vertices[1]}, p);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient2(poly.vertex(i), poly.vertex(i + 1), p) < 0) return false;
  }
  return true;
}

/// Exact intersection with a halfplane. Vertices on the boundary line are
/// kept; crossings create exact rational vertices.
inline Polygon clip2(const Polygon& poly, const HalfSpace& hs) {
  if (!poly.is_full_dimensional())
    throw Error(ErrorCode::InvalidInput, "clip2 requires a 2-dimensional polygon");
  const std::size_t n = poly.size();
  std::vector<Rational> excess(n);
  for (std::size_t i = 0; i < n; ++i)
    excess[i] = dot(poly.vertices[i], hs.normal) - hs.level;

  std::vector<Point2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& cur = poly.vertex(i);
    const Point2& nxt = poly.vertex(i + 1);
    const Rational& s0 = excess[i];
    const Rational& s1 = excess[(i + 1) % n];
    if (s0 <= 0) out.push_back(cur);
    if ((s0 < 0 && s1 > 0) || (s0 > 0 && s1 < 0)) {
      Rational t = s0 / (s0 - s1);
      out.push_back(point2(cur[0] + t * (nxt[0] - cur[0]),
                           cur[1] + t * (nxt[1] - cur[1])));
    }
  }

  // Drop duplicates and collinear middles that a boundary-grazing cut can
  // introduce.
  std::vector<Point2> clean;
  for (const Point2& p : out) {
    if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
  }
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  if (clean.size() >= 3) {
    std::vector<Point2> corners;
    const std::size_t m = clean.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point2& prev = clean[(i + m - 1) % m];
      const Point2& cur = clean[i];
      const Point2& nxt = clean[(i + 1) % m];
      if (!collinear(prev, cur, nxt)) corners.push_back(cur);
    }
    clean = std::move(corners);
  }

  if (clean.empty())
    throw Error(ErrorCode::EmptyCut, "halfspace intersection is empty");
  if (clean.size() < 3)
    throw Error(ErrorCode::DegenerateCut,
                "halfspace intersection is lower-dimensional");
  return make_polygon(std::move(clean));
}

/// Is the closed target segment contained in the union of those pieces that
/// are collinear with it? Exact 1-D interval union along the target line.
inline bool segment_union_covers(const Segment& target,
                                 std::span<const Segment> pieces) {
  if (target.a == target.b)
    throw Error(ErrorCode::InvalidInput,
                "coverage target must have distinct endpoints");
  std::array<Rational, 2> d = target.b - target.a;
  Rational dd = d[0] * d[0] + d[1] * d[1];
  auto param = [&](const Point2& p) -> Rational {
    std::array<Rational, 2> u = p - target.a;
    return (u[0] * d[0] + u[1] * d[1]) / dd;
  };
  auto on_line = [&](const Point2& p) { return cross(d, p - target.a) == 0; };

  std::vector<std::pair<Rational, Rational>> intervals;
  for (const Segment& s : pieces) {
    if (!on_line(s.a) || !on_line(s.b)) continue;
    Rational t0 = param(s.a);
    Rational t1 = param(s.b);
    if (t1 < t0) std::swap(t0, t1);
    intervals.emplace_back(std::move(t0), std::move(t1));
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const auto& x, const auto& y) {
              return x.first != y.first ? x.first < y.first
                                        : x.second < y.second;
            });
  Rational covered = 0;  // [0, covered] is covered so far
  for (const auto& [s, e] : intervals) {
    if (s > covered) break;
    if (e > covered) covered = e;
    if (covered >= 1) return true;
  }
  return covered >= 1;
}

/// Per-vertex smoothness data: determinant of the primitive edge directions
/// leaving the vertex. A 3-polytope vertex with a non-simple corner reports
/// determinant 0.
struct VertexSmoothness {
  std::size_t vertex;
  std::int64_t determinant;
  bool smooth;
};

struct DelzantReport {
  bool is_delzant = true;
  std::vector<VertexSmoothness> vertices;
};

inline DelzantReport delzant_check(const Polygon& poly) {
  if (!poly.is_full_dimensional())
    throw Error(ErrorCode::InvalidInput,
                "Delzant check requires a 2-dimensional polygon");
  DelzantReport report;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 to_prev = primitive_direction(poly.vertex(i), poly.vertex(i + n - 1));
    Vec2 to_next = primitive_direction(poly.vertex(i), poly.vertex(i + 1));
    std::int64_t det = det2(to_prev, to_next);
    bool smooth = det == 1 || det == -1;
    report.vertices.push_back({i, det, smooth});
    report.is_delzant = report.is_delzant && smooth;
  }
  return report;
}

}  // namespace txray
