#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "test_support.hpp"
#include "txray/scenarios.hpp"

using namespace txray;

namespace {

auto code_is(ErrorCode code) {
  return Catch::Matchers::Predicate<Error>(
      [code](const Error& e) { return e.code() == code; });
}

}  // namespace

TEST_CASE("Gelfand-Cetlin chamber data") {
  {
    ChamberData cd = gelfand_cetlin({rat(5), rat(1), rat(0)});
    CHECK(cd.polygon.vertices ==
          std::vector<Point2>{point2(1, 0), point2(5, 0), point2(5, 1),
                              point2(1, 1)});
    CHECK(cd.fixed_vertices ==
          std::vector<Point2>{point2(1, 0), point2(5, 0), point2(5, 1)});
  }
  {
    ChamberData cd = gelfand_cetlin({rat(2), rat(1), rat(0)});
    CHECK(cd.polygon.vertices ==
          std::vector<Point2>{point2(1, 0), point2(2, 0), point2(2, 1),
                              point2(1, 1)});
  }
  CHECK_THROWS_MATCHES(gelfand_cetlin({rat(1), rat(1), rat(0)}), Error,
                       code_is(ErrorCode::NonGenericLambda));
}

TEST_CASE("the toric scenario polytope") {
  Polytope3 p = m2_polytope();
  CHECK(p.vertices.size() == 6);
  CHECK(p.edges.size() == 9);
  CHECK(p.faces.size() == 5);
  DelzantReport report = delzant_check(p);
  CHECK(report.is_delzant);
  for (const auto& v : report.vertices)
    CHECK((v.determinant == 1 || v.determinant == -1));
}

TEST_CASE("the n=2 member is the glued example") {
  HirzebruchResult m3 = tolman_m3();
  CHECK(m3.chamber.polygon.vertices ==
        std::vector<Point2>{point2(1, 0), point2(4, 0), point2(2, 1),
                            point2(1, 1)});
  CHECK(m3.xray.fixed_points.size() == 6);
  CHECK(m3.xray.edges.size() == 9);
  REQUIRE(m3.verdict.obstruction_found);
  REQUIRE(m3.cut_report.has_value());
  CHECK(m3.cut_report->new_fixed_vertices.size() == 2);
}

TEST_CASE("family members on the Kahler side") {
  HirzebruchResult h1 = hirzebruch(HnParams::defaults(1));
  CHECK_FALSE(h1.verdict.obstruction_found);
  CHECK(h1.chamber.polygon.vertices ==
        std::vector<Point2>{point2(1, 0), point2(3, 0), point2(2, 1),
                            point2(1, 1)});

  HirzebruchResult hm1 = hirzebruch(HnParams::defaults(-1));
  CHECK_FALSE(hm1.verdict.obstruction_found);
  CHECK(hm1.chamber.polygon.vertices ==
        std::vector<Point2>{point2(1, 0), point2(rat(5, 2), rat(0)),
                            point2(rat(7, 2), rat(1)), point2(1, 1)});

  HirzebruchResult h0 = hirzebruch(HnParams::defaults(0));
  CHECK_FALSE(h0.verdict.obstruction_found);
  CHECK_FALSE(h0.cut_report.has_value());
  CHECK(h0.xray == flag_xray({rat(5), rat(1), rat(0)}));
}

TEST_CASE("cut edges have slope -1/n and create exactly two fixed vertices") {
  for (int n = -3; n <= 5; ++n) {
    if (n == 0) continue;
    HirzebruchResult h = hirzebruch(HnParams::defaults(n));
    REQUIRE(h.cut_report.has_value());
    REQUIRE(h.cut_report->new_fixed_vertices.size() == 2);
    const Point2& a = h.cut_report->new_fixed_vertices[0];
    const Point2& b = h.cut_report->new_fixed_vertices[1];
    Vec2 dir = primitive_direction(a, b);
    // Slope -1/n: direction proportional to (-n, 1).
    Vec2 expected{{-n, 1}};
    CHECK((dir == expected || dir == -expected));
    CHECK(validate_xray(h.xray, /*check_weyl=*/true).ok);
  }
}

TEST_CASE("the sweep matches the dichotomy") {
  std::vector<SweepRow> rows = hn_sweep(-3, 5);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) {
    CHECK(row.verdict.obstruction_found == (row.n >= 2));
  }

  std::vector<SweepRow> flag_only = hn_sweep(0, 0);
  REQUIRE(flag_only.size() == 1);
  CHECK_FALSE(flag_only[0].verdict.obstruction_found);

  std::vector<SweepRow> just_two = hn_sweep(2, 2);
  REQUIRE(just_two.size() == 1);
  bool has_paper_cert = false;
  for (const auto& cert : just_two[0].verdict.certificates)
    has_paper_cert =
        has_paper_cert ||
        (cert.candidate.base == point2(1, 2) &&
         cert.uncovered_face == Segment{point2(1, 0), point2(2, 1)});
  CHECK(has_paper_cert);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_MATCHES(hirzebruch(HnParams::defaults(-4)), Error,
                       code_is(ErrorCode::InvalidInput));
  HnParams bad = HnParams::defaults(2);
  bad.level = rat(100);  // cut line misses the rectangle
  CHECK_THROWS_MATCHES(hirzebruch(bad), Error,
                       code_is(ErrorCode::InvalidInput));
  CHECK_THROWS_AS(hn_sweep(3, 1), Error);
}
