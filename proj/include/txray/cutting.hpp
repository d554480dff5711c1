#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "txray/chamber.hpp"
#include "txray/error.hpp"
#include "txray/group.hpp"
#include "txray/lattice.hpp"
#include "txray/polygon.hpp"
#include "txray/polytope3.hpp"

namespace txray {

/// Combinatorial symplectic cut: keep { v : <v, direction> <= level }.
/// Callers wanting the other side negate direction and level.
template <int N>
struct CutSpec {
  LatticeVector<N> direction;  // primitive
  Rational level;
};

using CutSpec2 = CutSpec<2>;
using CutSpec3 = CutSpec<3>;

template <int N>
CutSpec<N> make_cut_spec(const LatticeVector<N>& direction,
                         const Rational& level) {
  if (!is_primitive(direction))
    throw Error(ErrorCode::InvalidInput,
                "cut direction " + to_string(direction) +
                    " must be a primitive lattice vector");
  return CutSpec<N>{direction, level};
}

/// A polygon edge crossed by the cut line, with the isotropy data of its
/// stratum and the freeness determinant det2(X, u).
struct CrossedEdge2 {
  Segment edge;
  Vec2 direction;      // primitive edge direction
  Vec2 isotropy;       // primitive annihilator of the edge direction
  std::int64_t det;    // det2(cut direction, isotropy)
  bool wall_exempt = false;  // central (1,1)-cut crossing a wall-adjacent edge
};

struct CutReportU2 {
  ChamberData result;
  std::vector<Point2> new_fixed_vertices;  // on the cut line, sorted
  std::vector<Point2> retained_fixed_vertices;
  std::vector<CrossedEdge2> crossed_edges;
  bool central_direction = false;  // cut direction proportional to (1,1)
};

/// Chamber-level U(2)-equivariant cut with the admissibility gates:
///   (i)  the cut line must miss the wall inside the polygon, unless the
///        direction is the Weyl-invariant (1,1);
///   (ii) the cut line may not pass through a polygon vertex;
///   (iii) the circle must act freely over every crossed edge strictly
///        inside the chamber: |det2(X, u)| = 1 for the edge isotropy u.
/// Orbifold cuts are rejected with the offending determinant.
inline CutReportU2 cut_u2(const ChamberData& cd, const CutSpec2& spec) {
  const Polygon& poly = cd.polygon;
  const Vec2& X = spec.direction;
  if (!is_primitive(X))
    throw Error(ErrorCode::InvalidInput, "cut direction must be primitive");
  const Rational& a = spec.level;
  const bool central = X == Vec2{{1, 1}} || X == Vec2{{-1, -1}};

  // Gate (i): wall perpendicularity.
  if (!central) {
    std::int64_t trace = X[0] + X[1];
    if (trace == 0) {
      if (a == 0) {
        for (const Point2& v : poly.vertices)
          if (on_wall(v))
            throw Error(ErrorCode::WallNotPerpendicular,
                        "cut line contains the Weyl wall through the "
                        "polygon");
      }
    } else {
      Rational t = a / Rational(trace);
      Point2 wall_point = point2(t, t);
      if (contains(poly, wall_point))
        throw Error(
            ErrorCode::WallNotPerpendicular,
            "cut line meets the Weyl wall at " + to_string(wall_point) +
                " inside the moment polygon and the direction " +
                to_string(X) + " is not proportional to (1,1)");
    }
  }

  // Gate (ii): no vertex on the cut line.
  for (const Point2& v : poly.vertices) {
    if (dot(v, X) == a)
      throw Error(ErrorCode::VertexOnCutLine,
                  "vertex " + to_string(v) + " lies on the cut line");
  }

  // Gate (iii): freeness over crossed edges.
  CutReportU2 report;
  report.central_direction = central;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly.vertex(i);
    const Point2& q = poly.vertex(i + 1);
    Rational sp = dot(p, X) - a;
    Rational sq = dot(q, X) - a;
    if (!((sp < 0 && sq > 0) || (sp > 0 && sq < 0))) continue;
    Vec2 d = primitive_direction(p, q);
    Vec2 u = canonical_direction(Vec2{{-d[1], d[0]}});  // <d, u> = 0
    std::int64_t det = det2(X, u);
    bool edge_on_wall = on_wall(p) && on_wall(q);
    bool wall_adjacent = on_wall(p) || on_wall(q);
    bool exempt = edge_on_wall || (central && wall_adjacent);
    report.crossed_edges.push_back({Segment{p, q}, d, u, det, exempt});
    if (!exempt && det != 1 && det != -1)
      throw Error(ErrorCode::NonFreeAction,
                  "cut circle " + to_string(X) +
                      " does not act freely over the edge " + to_string(p) +
                      "-" + to_string(q) + ": |det2(X,u)| = " +
                      std::to_string(det < 0 ? -det : det),
                  {{"determinant", std::to_string(det)}});
  }

  Polygon clipped = clip2(poly, HalfSpace{X, a});

  std::vector<Point2> fixed;
  for (const Point2& v : clipped.vertices) {
    bool is_old = std::find(poly.vertices.begin(), poly.vertices.end(), v) !=
                  poly.vertices.end();
    if (is_old) {
      if (std::binary_search(cd.fixed_vertices.begin(),
                             cd.fixed_vertices.end(), v)) {
        fixed.push_back(v);
        report.retained_fixed_vertices.push_back(v);
      }
    } else if (strictly_in_chamber(v)) {
      fixed.push_back(v);
      report.new_fixed_vertices.push_back(v);
    }
  }
  std::sort(report.new_fixed_vertices.begin(),
            report.new_fixed_vertices.end());
  std::sort(report.retained_fixed_vertices.begin(),
            report.retained_fixed_vertices.end());
  report.result = make_chamber_data(std::move(clipped), std::move(fixed));
  return report;
}

struct CrossedEdge3 {
  Segment3 edge;
  Vec3 direction;
  std::int64_t pairing;  // <direction, X>; freeness needs |pairing| = 1
};

struct CrossedFace3 {
  Vec3 normal;
  std::int64_t minor_gcd;  // gcd of the 2x2 minors of (X, normal)
};

struct CutReportDelzant3 {
  Polytope3 result;
  std::vector<Point3> new_vertices;  // on the cut hyperplane, sorted
  std::vector<CrossedEdge3> crossed_edges;
  std::vector<CrossedFace3> crossed_faces;
};

/// Halfspace cut of a Delzant 3-polytope with smoothness gating: the cut
/// circle must pair to +-1 with every crossed edge direction and must span a
/// saturated rank-2 sublattice with every crossed face's isotropy generator.
/// The result is re-checked Delzant.
inline CutReportDelzant3 cut_delzant3(const Polytope3& p,
                                      const CutSpec3& spec) {
  if (!delzant_check(p).is_delzant)
    throw Error(ErrorCode::NotDelzant, "input polytope is not Delzant");
  const Vec3& X = spec.direction;
  if (!is_primitive(X))
    throw Error(ErrorCode::InvalidInput, "cut direction must be primitive");
  const Rational& a = spec.level;

  std::vector<Rational> excess;
  for (const Point3& v : p.vertices) excess.push_back(dot(v, X) - a);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (excess[i] == 0)
      throw Error(ErrorCode::VertexOnCutLine,
                  "vertex " + to_string(p.vertices[i]) +
                      " lies on the cut hyperplane");
  }
  bool any_kept = false;
  for (const Rational& s : excess) any_kept = any_kept || s < 0;
  if (!any_kept)
    throw Error(ErrorCode::EmptyCut, "no vertex on the kept side");

  CutReportDelzant3 report;
  std::vector<Point3> new_vertices;
  for (const auto& e : p.edges) {
    const Rational& sa = excess[std::size_t(e.a)];
    const Rational& sb = excess[std::size_t(e.b)];
    if (!((sa < 0 && sb > 0) || (sa > 0 && sb < 0))) continue;
    std::int64_t pairing = dot(e.direction, X);
    const Point3& va = p.vertices[std::size_t(e.a)];
    const Point3& vb = p.vertices[std::size_t(e.b)];
    report.crossed_edges.push_back({Segment3{va, vb}, e.direction, pairing});
    if (pairing != 1 && pairing != -1)
      throw Error(ErrorCode::NonFreeAction,
                  "cut circle " + to_string(X) +
                      " does not act freely over the edge with direction " +
                      to_string(e.direction) + ": |<d,X>| = " +
                      std::to_string(pairing < 0 ? -pairing : pairing),
                  {{"pairing", std::to_string(pairing)}});
    Rational t = sa / (sa - sb);
    new_vertices.push_back(point3(va[0] + t * (vb[0] - va[0]),
                                  va[1] + t * (vb[1] - va[1]),
                                  va[2] + t * (vb[2] - va[2])));
  }
  for (const auto& f : p.faces) {
    bool below = false, above = false;
    for (int idx : f.cycle) {
      if (excess[std::size_t(idx)] < 0) below = true;
      if (excess[std::size_t(idx)] > 0) above = true;
    }
    if (!(below && above)) continue;
    Vec3 minors = cross3(X, f.normal);
    std::int64_t g = coordinate_gcd(minors);
    report.crossed_faces.push_back({f.normal, g});
    if (g != 1)
      throw Error(ErrorCode::NonFreeAction,
                  "cut circle " + to_string(X) +
                      " has a finite stabilizer over the face with normal " +
                      to_string(f.normal) + ": minor gcd = " +
                      std::to_string(g),
                  {{"minor_gcd", std::to_string(g)}});
  }

  std::vector<Point3> kept;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (excess[i] < 0) kept.push_back(p.vertices[i]);
  kept.insert(kept.end(), new_vertices.begin(), new_vertices.end());
  Polytope3 result;
  try {
    result = faces3(kept);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotFullDimensional)
      throw Error(ErrorCode::DegenerateCut,
                  "halfspace intersection is lower-dimensional");
    throw;
  }
  if (!delzant_check(result).is_delzant)
    throw Error(ErrorCode::NotDelzant, "cut produced a non-Delzant polytope");

  std::sort(new_vertices.begin(), new_vertices.end());
  report.new_vertices = std::move(new_vertices);
  report.result = std::move(result);
  return report;
}

}  // namespace txray
