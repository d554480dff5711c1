#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "test_support.hpp"
#include "txray/cutting.hpp"
#include "txray/scenarios.hpp"

using namespace txray;

namespace {

ChamberData rectangle_510() {
  return gelfand_cetlin({rat(5), rat(1), rat(0)});
}

Polytope3 simplex4() {
  std::vector<Point3> pts{point3(0, 0, 0), point3(4, 0, 0), point3(0, 4, 0),
                          point3(0, 0, 4)};
  return faces3(pts);
}

auto code_is(ErrorCode code) {
  return Catch::Matchers::Predicate<Error>(
      [code](const Error& e) { return e.code() == code; });
}

}  // namespace

TEST_CASE("the (1,2)-cut at level 4") {
  CutReportU2 report = cut_u2(rectangle_510(), {Vec2{{1, 2}}, rat(4)});
  CHECK(report.result.polygon.vertices ==
        std::vector<Point2>{point2(1, 0), point2(4, 0), point2(2, 1),
                            point2(1, 1)});
  CHECK(report.new_fixed_vertices ==
        std::vector<Point2>{point2(2, 1), point2(4, 0)});
  CHECK(report.retained_fixed_vertices == std::vector<Point2>{point2(1, 0)});
  REQUIRE(report.crossed_edges.size() == 2);
  for (const auto& ce : report.crossed_edges) {
    CHECK(ce.isotropy == Vec2{{0, 1}});
    CHECK(ce.det == 1);
    CHECK_FALSE(ce.wall_exempt);
  }
  // New fixed vertices sit exactly on the cut line.
  for (const Point2& v : report.new_fixed_vertices)
    CHECK(dot(v, Vec2{{1, 2}}) == rat(4));
}

TEST_CASE("admissibility gates") {
  CHECK_THROWS_MATCHES(cut_u2(rectangle_510(), {Vec2{{2, 1}}, rat(5)}), Error,
                       code_is(ErrorCode::NonFreeAction));
  try {
    cut_u2(rectangle_510(), {Vec2{{2, 1}}, rat(5)});
  } catch (const Error& e) {
    CHECK(e.data().at("determinant") == "2");
  }

  CHECK_THROWS_MATCHES(cut_u2(rectangle_510(), {Vec2{{1, 2}}, rat(3)}), Error,
                       code_is(ErrorCode::WallNotPerpendicular));

  // Levels through each vertex (wall corner (1,1) trips the wall gate
  // first, as the cut line meets the wall inside the polygon).
  for (long long level : {1, 5, 7}) {
    CHECK_THROWS_MATCHES(cut_u2(rectangle_510(), {Vec2{{1, 2}}, rat(level)}),
                         Error, code_is(ErrorCode::VertexOnCutLine));
  }

  // The central direction is admissible across the chamber.
  CutReportU2 central = cut_u2(rectangle_510(), {Vec2{{1, 1}}, rat(4)});
  CHECK(central.central_direction);
  CHECK(central.result.polygon.vertices ==
        std::vector<Point2>{point2(1, 0), point2(4, 0), point2(3, 1),
                            point2(1, 1)});

  CHECK_THROWS_MATCHES(cut_u2(rectangle_510(), {Vec2{{1, 0}}, rat(-2)}), Error,
                       code_is(ErrorCode::EmptyCut));
}

TEST_CASE("kept-side soundness and locality", "[property]") {
  struct Case {
    Vec2 direction;
    Rational level;
  };
  std::vector<Case> cases{{Vec2{{1, 2}}, rat(4)},
                          {Vec2{{1, 1}}, rat(4)},
                          {Vec2{{1, 3}}, rat(9, 2)},
                          {Vec2{{1, -1}}, rat(5, 2)},
                          {Vec2{{1, -2}}, rat(2)}};
  for (const auto& c : cases) {
    ChamberData cd = rectangle_510();
    CutReportU2 report = cut_u2(cd, {c.direction, c.level});
    for (const Point2& v : report.result.polygon.vertices)
      REQUIRE(dot(v, c.direction) <= c.level);
    for (const Point2& v : cd.polygon.vertices) {
      if (dot(v, c.direction) < c.level) {
        bool survives =
            std::find(report.result.polygon.vertices.begin(),
                      report.result.polygon.vertices.end(),
                      v) != report.result.polygon.vertices.end();
        REQUIRE(survives);
      }
    }
  }
}

TEST_CASE("cutting then rebuilding the X-ray stays consistent") {
  CutReportU2 report = cut_u2(rectangle_510(), {Vec2{{1, 2}}, rat(4)});
  XRay x = chamber_to_xray(report.result);
  CHECK(x.fixed_points.size() == 6);
  CHECK(x.edges.size() == 9);
  CHECK(validate_xray(x, /*check_weyl=*/true).ok);
}

TEST_CASE("Delzant 3-polytope cuts") {
  Polytope3 simplex = simplex4();
  {
    CutReportDelzant3 report = cut_delzant3(simplex, {Vec3{{1, 0, 0}}, rat(2)});
    CHECK(report.result.vertices.size() == 6);
    CHECK(delzant_check(report.result).is_delzant);
    REQUIRE(report.crossed_edges.size() == 3);
    for (const auto& ce : report.crossed_edges)
      CHECK((ce.pairing == 1 || ce.pairing == -1));
    REQUIRE(report.crossed_faces.size() == 3);
    for (const auto& cf : report.crossed_faces) CHECK(cf.minor_gcd == 1);
    for (const Point3& v : report.new_vertices)
      CHECK(dot(v, Vec3{{1, 0, 0}}) == rat(2));
    // Vertices strictly inside the kept half survive unchanged.
    for (const Point3& v : simplex.vertices) {
      if (dot(v, Vec3{{1, 0, 0}}) < rat(2)) {
        bool survives = std::find(report.result.vertices.begin(),
                                  report.result.vertices.end(),
                                  v) != report.result.vertices.end();
        REQUIRE(survives);
      }
    }
  }
  CHECK_THROWS_MATCHES(cut_delzant3(simplex, {Vec3{{1, 2, 0}}, rat(2)}), Error,
                       code_is(ErrorCode::NonFreeAction));
  CHECK_THROWS_MATCHES(cut_delzant3(simplex, {Vec3{{1, 0, 0}}, rat(4)}), Error,
                       code_is(ErrorCode::VertexOnCutLine));
  CHECK_THROWS_MATCHES(cut_delzant3(simplex, {Vec3{{1, 0, 0}}, rat(-1)}), Error,
                       code_is(ErrorCode::EmptyCut));
  {
    // Non-Delzant input is rejected before any cutting.
    std::vector<Point3> pts{point3(0, 0, 0), point3(1, 0, 0),
                            point3(0, 1, 0), point3(1, 1, 2)};
    CHECK_THROWS_MATCHES(cut_delzant3(faces3(pts), {Vec3{{1, 0, 0}}, rat(1, 2)}),
                         Error, code_is(ErrorCode::NotDelzant));
  }
}

TEST_CASE("a full-keep cut is the identity on the polytope") {
  Polytope3 simplex = simplex4();
  CutReportDelzant3 report = cut_delzant3(simplex, {Vec3{{1, 0, 0}}, rat(99)});
  CHECK(report.result == simplex);
  CHECK(report.new_vertices.empty());
  CHECK(report.crossed_edges.empty());
}
