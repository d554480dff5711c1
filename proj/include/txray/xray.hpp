#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "txray/chamber.hpp"
#include "txray/error.hpp"
#include "txray/group.hpp"
#include "txray/lattice.hpp"
#include "txray/polygon.hpp"
#include "txray/polytope3.hpp"

namespace txray {

/// One tangent-weight slot: a primitive direction with its multiplicity.
struct Weight {
  Vec2 direction;
  int multiplicity = 1;

  friend bool operator==(const Weight&, const Weight&) = default;
};

struct WeightedFixedPoint {
  Point2 position;
  std::vector<Weight> weights;  // sorted by direction, directions unique

  int total_multiplicity() const {
    int t = 0;
    for (const Weight& w : weights) t += w.multiplicity;
    return t;
  }
  int multiplicity_of(const Vec2& d) const {
    for (const Weight& w : weights)
      if (w.direction == d) return w.multiplicity;
    return 0;
  }

  friend bool operator==(const WeightedFixedPoint&,
                         const WeightedFixedPoint&) = default;
};

/// Collapses a direction multiset into sorted weight slots.
inline std::vector<Weight> collect_weights(std::vector<Vec2> directions) {
  std::map<Vec2, int> counts;
  for (const Vec2& d : directions) {
    if (!is_primitive(d))
      throw Error(ErrorCode::InvalidInput,
                  "weight direction " + to_string(d) + " is not primitive");
    counts[d] += 1;
  }
  std::vector<Weight> weights;
  for (const auto& [d, m] : counts) weights.push_back({d, m});
  return weights;
}

/// Image of a stratum closure: a segment between two fixed-point images.
/// `rank` counts the matched weight pairs (stratum closure has real
/// dimension 2*rank).
struct XRayEdge {
  int a;           // index into fixed_points, position[a] lex-less
  int b;
  Vec2 direction;  // primitive, from a to b
  int rank = 1;

  friend bool operator==(const XRayEdge&, const XRayEdge&) = default;
};

struct XRay {
  std::vector<WeightedFixedPoint> fixed_points;  // sorted by position
  std::vector<XRayEdge> edges;                   // sorted by (a, b)
  // Image incidence: (fixed point, edge) pairs where the point lies on the
  // closed edge segment. This is the geometric stand-in for the partial
  // order by stratum-closure containment.
  std::vector<std::pair<int, int>> incidence;

  int index_of(const Point2& p) const {
    for (std::size_t i = 0; i < fixed_points.size(); ++i)
      if (fixed_points[i].position == p) return int(i);
    return -1;
  }
  Segment edge_segment(const XRayEdge& e) const {
    return {fixed_points[std::size_t(e.a)].position,
            fixed_points[std::size_t(e.b)].position};
  }

  friend bool operator==(const XRay&, const XRay&) = default;
};

struct EdgeSpec {
  Point2 a;
  Point2 b;
  int rank = 1;
};

/// Canonicalizing constructor: sorts fixed points, resolves edge endpoints
/// to indices, recomputes incidence. Throws DuplicateFixedPoint when two
/// fixed points share an image.
inline XRay make_xray(std::vector<WeightedFixedPoint> fixed_points,
                      const std::vector<EdgeSpec>& edge_specs) {
  XRay x;
  x.fixed_points = std::move(fixed_points);
  std::sort(x.fixed_points.begin(), x.fixed_points.end(),
            [](const WeightedFixedPoint& p, const WeightedFixedPoint& q) {
              return p.position < q.position;
            });
  for (std::size_t i = 0; i + 1 < x.fixed_points.size(); ++i) {
    if (x.fixed_points[i].position == x.fixed_points[i + 1].position)
      throw Error(ErrorCode::DuplicateFixedPoint,
                  "two fixed points share the image " +
                      to_string(x.fixed_points[i].position));
  }
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    for (const Weight& w : fp.weights) {
      if (!is_primitive(w.direction) || w.multiplicity < 1)
        throw Error(ErrorCode::InvalidInput,
                    "invalid weight slot at " + to_string(fp.position));
    }
  }

  for (const EdgeSpec& spec : edge_specs) {
    int ia = x.index_of(spec.a);
    int ib = x.index_of(spec.b);
    if (ia < 0 || ib < 0)
      throw Error(ErrorCode::InvalidInput,
                  "edge endpoint is not a fixed-point image");
    if (ia == ib)
      throw Error(ErrorCode::InvalidInput,
                  "edge endpoints coincide at " + to_string(spec.a));
    if (ia > ib) std::swap(ia, ib);
    Vec2 dir = primitive_direction(x.fixed_points[std::size_t(ia)].position,
                                   x.fixed_points[std::size_t(ib)].position);
    x.edges.push_back({ia, ib, dir, spec.rank});
  }
  std::sort(x.edges.begin(), x.edges.end(),
            [](const XRayEdge& e, const XRayEdge& f) {
              return std::pair(e.a, e.b) < std::pair(f.a, f.b);
            });
  for (std::size_t i = 0; i + 1 < x.edges.size(); ++i) {
    if (x.edges[i].a == x.edges[i + 1].a && x.edges[i].b == x.edges[i + 1].b)
      throw Error(ErrorCode::InvalidInput, "duplicate edge");
  }

  for (std::size_t i = 0; i < x.fixed_points.size(); ++i)
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
      if (on_segment(x.edge_segment(x.edges[e]),
                     x.fixed_points[i].position))
        x.incidence.emplace_back(int(i), int(e));
    }
  return x;
}

/// Does some edge leave `fp` along direction `d`?
inline bool has_incident_edge(const XRay& x, int fp, const Vec2& d) {
  for (const XRayEdge& e : x.edges) {
    if (e.a == fp && e.direction == d) return true;
    if (e.b == fp && -e.direction == d) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// X-ray of the generic flag orbit: six fixed points at the projected
/// S3-orbit of lambda, one edge per transposition pair, weights pointing at
/// the three partners.
inline XRay flag_xray(const Lambda& lambda) {
  require_generic(lambda);
  constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                     {0, 2, 1},
                                                     {1, 0, 2},
                                                     {1, 2, 0},
                                                     {2, 0, 1},
                                                     {2, 1, 0}}};
  auto position = [&](const std::array<int, 3>& p) {
    return point2(lambda[std::size_t(p[0])], lambda[std::size_t(p[1])]);
  };
  constexpr std::array<std::pair<int, int>, 3> swaps{
      {{0, 1}, {0, 2}, {1, 2}}};

  std::map<Point2, std::vector<Vec2>> directions;
  std::vector<EdgeSpec> edge_specs;
  std::vector<std::pair<Point2, Point2>> seen;
  for (const auto& p : perms) {
    Point2 from = position(p);
    for (const auto& [i, j] : swaps) {
      std::array<int, 3> q = p;
      std::swap(q[std::size_t(i)], q[std::size_t(j)]);
      Point2 to = position(q);
      directions[from].push_back(primitive_direction(from, to));
      std::pair<Point2, Point2> key =
          from < to ? std::pair(from, to) : std::pair(to, from);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        edge_specs.push_back({key.first, key.second, 1});
      }
    }
  }

  std::vector<WeightedFixedPoint> fps;
  for (auto& [pos, dirs] : directions)
    fps.push_back({pos, collect_weights(std::move(dirs))});
  return make_xray(std::move(fps), edge_specs);
}

/// Optional integral projection for the toric builder. The default drops
/// the z-coordinate (restriction from U(1)^3 to U(1)^2 x id).
struct ToricProjection {
  Vec3 row_x{{1, 0, 0}};
  Vec3 row_y{{0, 1, 0}};
};

/// X-ray of the torus action restricted from a Delzant 3-polytope: vertices
/// and edges project, 2-faces belong to the principal stratum and are
/// dropped.
inline XRay toric_xray(const Polytope3& p, const ToricProjection& proj = {}) {
  if (!delzant_check(p).is_delzant)
    throw Error(ErrorCode::NotDelzant,
                "toric X-ray requires a Delzant polytope");
  auto project_point = [&](const Point3& v) {
    return point2(dot(v, proj.row_x), dot(v, proj.row_y));
  };
  auto project_dir = [&](const Vec3& d) {
    return Vec2{{dot(d, proj.row_x), dot(d, proj.row_y)}};
  };
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
      if (project_point(p.vertices[i]) == project_point(p.vertices[j]))
        throw Error(ErrorCode::DuplicateFixedPoint,
                    "vertices " + to_string(p.vertices[i]) + " and " +
                        to_string(p.vertices[j]) +
                        " project to the same fixed-point image");
    }
  // Unreachable once images are distinct; kept as the named guard for the
  // edge-collapse condition.
  for (const auto& e : p.edges) {
    if (project_dir(e.direction).is_zero())
      throw Error(ErrorCode::VerticalEdgeUnsupported,
                  "edge " + to_string(e.direction) +
                      " projects to a point; such T^2-fixed spheres are not "
                      "representable");
  }

  std::vector<WeightedFixedPoint> fps;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    std::vector<Vec2> dirs;
    for (const auto& e : p.edges) {
      if (e.a == int(i)) dirs.push_back(primitive(project_dir(e.direction)));
      if (e.b == int(i)) dirs.push_back(primitive(project_dir(-e.direction)));
    }
    fps.push_back({project_point(p.vertices[i]), collect_weights(dirs)});
  }
  std::vector<EdgeSpec> edge_specs;
  for (const auto& e : p.edges)
    edge_specs.push_back({project_point(p.vertices[std::size_t(e.a)]),
                          project_point(p.vertices[std::size_t(e.b)]), 1});
  return make_xray(std::move(fps), edge_specs);
}

/// Reconstructs the T^2 X-ray of a chamber-level U(2)-space. Fixed points
/// are the marked vertices and their Weyl reflections; each carries its two
/// polygon-edge directions plus -alpha1; edges come from ray-shooting:
/// consecutive collinear fixed points are joined when their weight slots
/// match head-to-tail.
inline XRay chamber_to_xray(const ChamberData& cd) {
  const Polygon& poly = cd.polygon;
  const std::size_t n = poly.size();

  std::vector<WeightedFixedPoint> fps;
  for (const Point2& v : cd.fixed_vertices) {
    std::size_t i = 0;
    while (!(poly.vertices[i] == v)) ++i;
    std::vector<Vec2> dirs{primitive_direction(v, poly.vertex(i + n - 1)),
                           primitive_direction(v, poly.vertex(i + 1)),
                           kMinusAlpha1};
    std::vector<Vec2> reflected;
    for (const Vec2& d : dirs) reflected.push_back(weyl_reflect(d));
    fps.push_back({v, collect_weights(std::move(dirs))});
    fps.push_back({weyl_reflect(v), collect_weights(std::move(reflected))});
  }

  // Ray-shooting: for every direction class and every maximal line holding
  // at least two fixed points, pair consecutive points head-to-tail.
  std::vector<Vec2> classes;
  for (const WeightedFixedPoint& fp : fps)
    for (const Weight& w : fp.weights) {
      Vec2 c = canonical_direction(w.direction);
      if (std::find(classes.begin(), classes.end(), c) == classes.end())
        classes.push_back(c);
    }
  std::sort(classes.begin(), classes.end());

  std::vector<EdgeSpec> edge_specs;
  for (const Vec2& c : classes) {
    std::map<Rational, std::vector<const WeightedFixedPoint*>> lines;
    for (const WeightedFixedPoint& fp : fps) {
      Rational key = Rational(c[0]) * fp.position[1] -
                     Rational(c[1]) * fp.position[0];
      lines[key].push_back(&fp);
    }
    for (auto& [key, members] : lines) {
      if (members.size() < 2) continue;
      std::sort(members.begin(), members.end(),
                [&](const WeightedFixedPoint* p, const WeightedFixedPoint* q) {
                  return dot(p->position, c) < dot(q->position, c);
                });
      for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        int head = members[i]->multiplicity_of(c);
        int tail = members[i + 1]->multiplicity_of(-c);
        if (head >= 1 && tail >= 1)
          edge_specs.push_back({members[i]->position,
                                members[i + 1]->position,
                                std::min(head, tail)});
      }
    }
  }

  XRay x = make_xray(std::move(fps), edge_specs);

  // Every weight slot must now be used by an incident edge.
  for (std::size_t i = 0; i < x.fixed_points.size(); ++i) {
    const WeightedFixedPoint& fp = x.fixed_points[i];
    for (const Weight& w : fp.weights) {
      if (has_incident_edge(x, int(i), w.direction)) continue;
      bool partner_on_ray = false;
      for (const WeightedFixedPoint& other : x.fixed_points) {
        if (other.position == fp.position) continue;
        std::array<Rational, 2> d = other.position - fp.position;
        bool on_ray = Rational(w.direction[0]) * d[1] ==
                          Rational(w.direction[1]) * d[0] &&
                      d[0] * Rational(w.direction[0]) +
                              d[1] * Rational(w.direction[1]) >
                          0;
        if (on_ray) {
          partner_on_ray = true;
          break;
        }
      }
      std::string where = " at " + to_string(fp.position) + " direction " +
                          to_string(w.direction);
      if (partner_on_ray)
        throw Error(ErrorCode::AmbiguousPairing,
                    "weight slot could not be paired with its consecutive "
                    "partner" + where);
      throw Error(ErrorCode::DanglingWeight,
                  "no fixed point lies on the ray" + where);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string code, std::string message) {
    ok = false;
    violations.push_back({std::move(code), std::move(message)});
  }
};

/// Checks the X-ray invariants; with `check_weyl` also verifies invariance
/// of points, weights, and edges under the Weyl reflection. Returns a
/// report instead of throwing.
inline ValidationReport validate_xray(const XRay& x, bool check_weyl = false) {
  ValidationReport report;

  for (std::size_t i = 0; i + 1 < x.fixed_points.size(); ++i) {
    if (x.fixed_points[i].position == x.fixed_points[i + 1].position)
      report.add("duplicate_position",
                 "fixed points share the image " +
                     to_string(x.fixed_points[i].position));
  }
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    for (const Weight& w : fp.weights) {
      if (!is_primitive(w.direction))
        report.add("non_primitive_direction",
                   "weight at " + to_string(fp.position) + " direction " +
                       to_string(w.direction));
      if (w.multiplicity < 1)
        report.add("non_positive_multiplicity",
                   "weight at " + to_string(fp.position));
    }
  }

  const int n = int(x.fixed_points.size());
  for (const XRayEdge& e : x.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n || e.a == e.b) {
      report.add("bad_edge_endpoints", "edge endpoints out of range");
      continue;
    }
    Vec2 expected =
        primitive_direction(x.fixed_points[std::size_t(e.a)].position,
                            x.fixed_points[std::size_t(e.b)].position);
    if (expected != e.direction)
      report.add("direction_mismatch",
                 "edge " + to_string(x.fixed_points[std::size_t(e.a)].position) +
                     "-" + to_string(x.fixed_points[std::size_t(e.b)].position));
    if (e.rank < 1) report.add("non_positive_rank", "edge rank must be >= 1");
  }

  // Weight slots must be initial directions of incident edges.
  for (int i = 0; i < n; ++i) {
    const WeightedFixedPoint& fp = x.fixed_points[std::size_t(i)];
    for (const Weight& w : fp.weights) {
      if (!has_incident_edge(x, i, w.direction))
        report.add("dangling_weight",
                   "weight slot at " + to_string(fp.position) + " direction " +
                       to_string(w.direction) + " has no incident edge");
    }
  }

  if (check_weyl) {
    for (const WeightedFixedPoint& fp : x.fixed_points) {
      int j = x.index_of(weyl_reflect(fp.position));
      if (j < 0) {
        report.add("weyl_asymmetry",
                   "missing reflected fixed point for " +
                       to_string(fp.position));
        continue;
      }
      std::vector<Weight> reflected;
      for (const Weight& w : fp.weights)
        reflected.push_back({weyl_reflect(w.direction), w.multiplicity});
      std::sort(reflected.begin(), reflected.end(),
                [](const Weight& a, const Weight& b) {
                  return a.direction < b.direction;
                });
      if (reflected != x.fixed_points[std::size_t(j)].weights)
        report.add("weyl_asymmetry",
                   "weights at " + to_string(fp.position) +
                       " do not reflect onto weights at " +
                       to_string(x.fixed_points[std::size_t(j)].position));
    }
    for (const XRayEdge& e : x.edges) {
      Segment s = x.edge_segment(e);
      Point2 ra = weyl_reflect(s.a);
      Point2 rb = weyl_reflect(s.b);
      bool found = false;
      for (const XRayEdge& f : x.edges) {
        Segment t = x.edge_segment(f);
        if ((t.a == ra && t.b == rb) || (t.a == rb && t.b == ra)) {
          found = f.rank == e.rank;
          break;
        }
      }
      if (!found)
        report.add("weyl_asymmetry",
                   "edge " + to_string(s.a) + "-" + to_string(s.b) +
                       " has no reflected partner");
    }
  }
  return report;
}

}  // namespace txray
