#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "txray/error.hpp"
#include "txray/lattice.hpp"
#include "txray/polygon.hpp"
#include "txray/rational.hpp"

namespace txray {

namespace detail {

using RVec3 = std::array<Rational, 3>;

inline RVec3 rcross(const RVec3& u, const RVec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline bool rzero(const RVec3& u) {
  return u[0] == 0 && u[1] == 0 && u[2] == 0;
}

inline Vec3 to_primitive_vec3(const RVec3& u) {
  Integer lcm = 1;
  for (const Rational& x : u)
    lcm = boost::multiprecision::lcm(lcm, rational_den(x));
  Vec3 v;
  for (int i = 0; i < 3; ++i)
    v[i] = to_int64_checked(rational_num(u[std::size_t(i)] * Rational(lcm)));
  return primitive(v);
}

/// Exact membership of p in conv(others) via supporting-plane enumeration.
/// Valid whenever `others` together with p spans all of R^3.
inline bool in_convex_hull3(const Point3& p, std::span<const Point3> others) {
  const std::size_t n = others.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RVec3 nr = rcross(others[j] - others[i], others[k] - others[i]);
        if (rzero(nr)) continue;
        Vec3 normal = to_primitive_vec3(nr);
        Rational level = dot(others[i], normal);
        bool all_le = true, all_ge = true;
        for (const Point3& q : others) {
          Rational v = dot(q, normal);
          if (v > level) all_le = false;
          if (v < level) all_ge = false;
        }
        Rational vp = dot(p, normal);
        if (all_le && vp > level) return false;
        if (all_ge && vp < level) return false;
      }
  return true;
}

}  // namespace detail

struct Segment3 {
  Point3 a;
  Point3 b;

  friend bool operator==(const Segment3&, const Segment3&) = default;
};

/// Lattice 3-polytope with its full face lattice. Vertices are exactly the
/// extreme points, sorted lexicographically; edges and 2-faces reference
/// them by index. Face cycles run counterclockwise as seen from outside.
struct Polytope3 {
  struct Edge {
    int a;
    int b;           // a < b
    Vec3 direction;  // primitive, from vertex a to vertex b

    friend bool operator==(const Edge&, const Edge&) = default;
  };
  struct Face {
    std::vector<int> cycle;
    Vec3 normal;  // primitive, outward
    Rational level;

    friend bool operator==(const Face&, const Face&) = default;
  };

  std::vector<Point3> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  friend bool operator==(const Polytope3&, const Polytope3&) = default;
};

/// Full face lattice by supporting-plane enumeration over vertex triples.
/// O(n^4); inputs are desk-scale. Points interior to the hull are dropped.
inline Polytope3 faces3(std::span<const Point3> points) {
  std::vector<Point3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4)
    throw Error(ErrorCode::NotFullDimensional,
                "need at least 4 distinct points, got " +
                    std::to_string(pts.size()));

  bool full_dim = false;
  for (std::size_t j = 1; j < pts.size() && !full_dim; ++j)
    for (std::size_t k = j + 1; k < pts.size() && !full_dim; ++k) {
      detail::RVec3 nr = detail::rcross(pts[j] - pts[0], pts[k] - pts[0]);
      if (detail::rzero(nr)) continue;
      for (std::size_t l = k + 1; l < pts.size() && !full_dim; ++l) {
        detail::RVec3 d = pts[l] - pts[0];
        full_dim = nr[0] * d[0] + nr[1] * d[1] + nr[2] * d[2] != 0;
      }
    }
  if (!full_dim)
    throw Error(ErrorCode::NotFullDimensional, "points are coplanar");

  // Keep extreme points only.
  std::vector<Point3> verts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point3> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!detail::in_convex_hull3(pts[i], others)) verts.push_back(pts[i]);
  }

  Polytope3 poly;
  poly.vertices = verts;
  const std::size_t n = verts.size();

  // Supporting planes from vertex triples, oriented outward.
  std::vector<std::pair<Vec3, Rational>> planes;
  auto add_plane = [&](const Vec3& normal, const Rational& level) {
    for (const auto& [pn, pl] : planes)
      if (pn == normal && pl == level) return;
    planes.emplace_back(normal, level);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        detail::RVec3 nr = detail::rcross(verts[j] - verts[i],
                                          verts[k] - verts[i]);
        if (detail::rzero(nr)) continue;
        Vec3 normal = detail::to_primitive_vec3(nr);
        Rational level = dot(verts[i], normal);
        bool all_le = true, all_ge = true;
        for (const Point3& q : verts) {
          Rational v = dot(q, normal);
          if (v > level) all_le = false;
          if (v < level) all_ge = false;
        }
        if (all_le) add_plane(normal, level);
        if (all_ge) add_plane(-normal, -level);
      }

  // Assemble 2-faces with cycles ordered counterclockwise from outside.
  for (const auto& plane : planes) {
    const Vec3& normal = plane.first;
    const Rational& level = plane.second;
    std::vector<int> members;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(verts[i], normal) == level) members.push_back(int(i));
    if (members.size() < 3)
      throw std::logic_error("supporting plane with fewer than 3 vertices");

    int axis = 0;
    auto mag = [&](int a) {
      return normal[a] < 0 ? -normal[a] : normal[a];
    };
    for (int a = 1; a < 3; ++a)
      if (mag(a) > mag(axis)) axis = a;
    auto project = [&](const Point3& p) -> Point2 {
      switch (axis) {
        case 0: return point2(p[1], p[2]);
        case 1: return point2(p[2], p[0]);
        default: return point2(p[0], p[1]);
      }
    };

    std::vector<Point2> shadow;
    for (int idx : members) shadow.push_back(project(verts[std::size_t(idx)]));
    Polygon ordered = hull2(shadow);
    if (ordered.size() != members.size())
      throw std::logic_error("face vertices are not in convex position");

    std::vector<int> cycle;
    for (const Point2& q : ordered.vertices) {
      for (int idx : members)
        if (project(verts[std::size_t(idx)]) == q) {
          cycle.push_back(idx);
          break;
        }
    }
    if (normal[axis] < 0) std::reverse(cycle.begin(), cycle.end());
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    poly.faces.push_back({std::move(cycle), normal, level});
  }
  std::sort(poly.faces.begin(), poly.faces.end(),
            [](const Polytope3::Face& f, const Polytope3::Face& g) {
              return f.cycle != g.cycle ? f.cycle < g.cycle
                                        : f.normal < g.normal;
            });

  // Edges are the consecutive pairs of the face cycles; each must be shared
  // by exactly two faces.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& face : poly.faces) {
    const std::size_t m = face.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      int a = face.cycle[i];
      int b = face.cycle[(i + 1) % m];
      edge_count[{std::min(a, b), std::max(a, b)}] += 1;
    }
  }
  for (const auto& [key, count] : edge_count) {
    if (count != 2)
      throw std::logic_error("edge not shared by exactly two faces");
    const auto& [a, b] = key;
    poly.edges.push_back(
        {a, b,
         primitive_direction(poly.vertices[std::size_t(a)],
                             poly.vertices[std::size_t(b)])});
  }

  if (std::int64_t(poly.vertices.size()) - std::int64_t(poly.edges.size()) +
          std::int64_t(poly.faces.size()) !=
      2)
    throw std::logic_error("Euler characteristic check failed");
  return poly;
}

/// Vertex smoothness: at every vertex the primitive directions of the three
/// incident edges must form a lattice basis. Non-simple vertices report
/// determinant 0.
inline DelzantReport delzant_check(const Polytope3& poly) {
  DelzantReport report;
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    std::vector<Vec3> dirs;
    for (const auto& e : poly.edges) {
      if (e.a == int(i)) dirs.push_back(e.direction);
      if (e.b == int(i)) dirs.push_back(-e.direction);
    }
    std::int64_t det = 0;
    if (dirs.size() == 3) det = det3(dirs[0], dirs[1], dirs[2]);
    bool smooth = det == 1 || det == -1;
    report.vertices.push_back({i, det, smooth});
    report.is_delzant = report.is_delzant && smooth;
  }
  return report;
}

}  // namespace txray
