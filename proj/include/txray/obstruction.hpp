#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "txray/error.hpp"
#include "txray/lattice.hpp"
#include "txray/polygon.hpp"
#include "txray/xray.hpp"

namespace txray {

/// A fixed point together with two weight directions spanning a cone whose
/// preimage supports a 4-dimensional unstable manifold: the remaining
/// weights admit a Morse direction negative on alpha and beta and positive
/// on the rest, and both rays carry incident edges.
struct ConeCandidate {
  Point2 base;  // fixed-point image at the cone apex
  Vec2 alpha;
  Vec2 beta;

  friend bool operator==(const ConeCandidate&, const ConeCandidate&) = default;
};

/// Witness that no invariant compatible Kahler structure exists: the convex
/// hull of the fixed-point images inside the cone has a face covered by no
/// union of collinear stratum images.
struct ObstructionCertificate {
  ConeCandidate candidate;
  std::vector<Point2> contained_points;  // fixed-point images in the cone
  Polygon delta_cand;                    // their convex hull
  Segment uncovered_face;

  friend bool operator==(const ObstructionCertificate&,
                         const ObstructionCertificate&) = default;
};

/// ObstructionFound certifies non-existence; NoObstructionFound is
/// inconclusive (the criterion is necessary, not sufficient).
struct Verdict {
  bool obstruction_found = false;
  std::vector<ObstructionCertificate> certificates;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// All cone candidates of an X-ray, in deterministic order (fixed points by
/// position, direction pairs lexicographically).
inline std::vector<ConeCandidate> enumerate_cones(const XRay& x) {
  std::vector<ConeCandidate> candidates;
  for (std::size_t i = 0; i < x.fixed_points.size(); ++i) {
    const WeightedFixedPoint& fp = x.fixed_points[i];
    const auto& ws = fp.weights;
    for (std::size_t s = 0; s < ws.size(); ++s)
      for (std::size_t t = s + 1; t < ws.size(); ++t) {
        const Vec2& alpha = ws[s].direction;
        const Vec2& beta = ws[t].direction;
        if (det2(alpha, beta) == 0) continue;

        // Residual weight multiset after removing one alpha and one beta
        // slot; these must all pair positively with the Morse direction.
        std::vector<Vec2> others;
        for (std::size_t k = 0; k < ws.size(); ++k) {
          int count = ws[k].multiplicity - int(k == s) - int(k == t);
          for (int c = 0; c < count; ++c) others.push_back(ws[k].direction);
        }
        std::vector<Vec2> negatives{alpha, beta};
        if (!strict_feasible(negatives, others)) continue;

        if (!has_incident_edge(x, int(i), alpha) ||
            !has_incident_edge(x, int(i), beta))
          continue;
        candidates.push_back({fp.position, alpha, beta});
      }
  }
  return candidates;
}

namespace detail {

inline bool in_closed_cone(const Point2& base, const Vec2& alpha,
                           const Vec2& beta, const Point2& q) {
  std::array<Rational, 2> d = q - base;
  auto [c1, c2] = cone_coefficients(alpha, beta, d[0], d[1]);
  return c1 >= 0 && c2 >= 0;
}

inline std::vector<Segment> collinear_edges(const XRay& x, const Segment& f) {
  std::array<Rational, 2> d = f.b - f.a;
  std::vector<Segment> pieces;
  for (const XRayEdge& e : x.edges) {
    Segment s = x.edge_segment(e);
    if (cross(d, s.a - f.a) == 0 && cross(d, s.b - f.a) == 0)
      pieces.push_back(s);
  }
  return pieces;
}

}  // namespace detail

/// Tolman's necessary condition for an invariant compatible Kahler
/// structure, scoped to isolated fixed points with three weight slots. For
/// each cone candidate the would-be orbit-closure polytope is the hull of
/// the fixed-point images inside the cone; every 1-face must be covered by
/// a union of collinear stratum images, else a certificate is issued.
inline Verdict tolman_check(const XRay& x) {
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    if (fp.total_multiplicity() != 3)
      throw Error(ErrorCode::WrongDimensionScope,
                  "fixed point " + to_string(fp.position) + " carries " +
                      std::to_string(fp.total_multiplicity()) +
                      " weight slots; this criterion is implemented for "
                      "exactly 3");
  }

  Verdict verdict;
  for (const ConeCandidate& cand : enumerate_cones(x)) {
    std::vector<Point2> contained;
    for (const WeightedFixedPoint& fp : x.fixed_points) {
      if (detail::in_closed_cone(cand.base, cand.alpha, cand.beta,
                                 fp.position))
        contained.push_back(fp.position);
    }
    Polygon hull = hull2(contained);
    if (hull.is_point()) continue;
    if (std::find(hull.vertices.begin(), hull.vertices.end(), cand.base) ==
        hull.vertices.end())
      throw std::logic_error("cone apex is not a hull vertex");

    std::vector<Segment> faces;
    if (hull.is_segment()) {
      faces.push_back({hull.vertices[0], hull.vertices[1]});
    } else {
      for (std::size_t i = 0; i < hull.size(); ++i)
        faces.push_back({hull.vertex(i), hull.vertex(i + 1)});
    }
    for (const Segment& face : faces) {
      std::vector<Segment> pieces = detail::collinear_edges(x, face);
      if (segment_union_covers(face, pieces)) continue;
      Segment canonical = face.b < face.a ? Segment{face.b, face.a} : face;
      verdict.certificates.push_back(
          {cand, contained, hull, canonical});
    }
  }
  verdict.obstruction_found = !verdict.certificates.empty();
  return verdict;
}

}  // namespace txray
