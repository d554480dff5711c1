// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line each. All comparisons are exact; there are no tolerances anywhere.
// Usage: acceptance [source-root] (the root must contain data/m3_xray.json).

#include <functional>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "txray/txray.hpp"

using namespace txray;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string g_root = ".";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(bool(in), "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::mt19937_64 rng_for(std::uint64_t salt) {
  return std::mt19937_64(0x784a793257ULL ^ salt);
}

Point2 random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-5, 5);
  return point2(coord(rng), coord(rng));
}

Vec2 random_primitive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-5, 5);
  for (;;) {
    Vec2 v{{coord(rng), coord(rng)}};
    if (!v.is_zero()) return primitive(v);
  }
}

bool in_hull_brute(const Point2& p, const std::vector<Point2>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    if (pts[i] == p) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (on_segment(Segment{pts[i], pts[j]}, p)) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient2(pts[i], pts[j], pts[k]) == 0) continue;
        Rational s1 = orient2(pts[i], pts[j], p);
        Rational s2 = orient2(pts[j], pts[k], p);
        Rational s3 = orient2(pts[k], pts[i], p);
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) ||
            (s1 <= 0 && s2 <= 0 && s3 <= 0))
          return true;
      }
  return false;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

// --------------------------------------------------------------------------

void criterion_1_flag_structure() {
  XRay x = m1_flag({rat(2), rat(1), rat(0)});
  require(x.fixed_points.size() == 6, "expected 6 fixed points");
  require(x.edges.size() == 9, "expected 9 edges");
  int a1 = 0, a2 = 0, a3 = 0;
  for (const auto& e : x.edges) {
    if (e.direction == kAlpha1 || e.direction == -kAlpha1) ++a1;
    else if (e.direction == kAlpha2 || e.direction == -kAlpha2) ++a2;
    else if (e.direction == kAlpha3 || e.direction == -kAlpha3) ++a3;
    else throw Failure("edge direction outside the root classes: " +
                       to_string(e.direction));
  }
  require(a1 == 3 && a2 == 3 && a3 == 3,
          "expected three edges per root class");
  require(validate_xray(x, /*check_weyl=*/true).ok, "validation failed");
}

void criterion_2_toric_structure() {
  M2Scenario m2 = m2_toric();
  std::set<Point2> expected{point2(0, 0), point2(8, 0), point2(0, 8),
                            point2(2, 2), point2(4, 2), point2(2, 4)};
  std::set<Point2> got;
  for (const auto& fp : m2.xray.fixed_points) got.insert(fp.position);
  require(got == expected, "fixed-point images differ");
  require(m2.xray.edges.size() == 9, "expected 9 edges");
  DelzantReport report = delzant_check(m2.polytope);
  require(report.is_delzant, "polytope is not Delzant");
  for (const auto& v : report.vertices)
    require(v.determinant == 1 || v.determinant == -1,
            "vertex determinant not +-1");
}

void criterion_3_figure3_cut() {
  CutReportU2 report = cut_u2(gelfand_cetlin({rat(5), rat(1), rat(0)}),
                              {Vec2{{1, 2}}, rat(4)});
  require(report.result.polygon.vertices ==
              std::vector<Point2>{point2(1, 0), point2(4, 0), point2(2, 1),
                                  point2(1, 1)},
          "cut polygon differs");
  require(report.new_fixed_vertices ==
              std::vector<Point2>{point2(2, 1), point2(4, 0)},
          "new fixed vertices differ");
  require(report.retained_fixed_vertices == std::vector<Point2>{point2(1, 0)},
          "expected exactly one retained fixed vertex (1,0)");
}

void criterion_4_tolman_example() {
  HirzebruchResult m3 = tolman_m3();
  require(m3.xray.fixed_points.size() == 6, "expected 6 fixed points");
  require(m3.xray.edges.size() == 9, "expected 9 edges");

  Document fixture = decode(slurp(g_root + "/data/m3_xray.json"));
  require(fixture.kind == DocumentKind::XRay, "fixture is not an xray");
  require(std::get<XRay>(fixture.payload) == m3.xray,
          "built X-ray differs from the shipped fixture");

  require(m3.verdict.obstruction_found, "expected an obstruction");
  bool paper_cert = false, reflected_cert = false;
  for (const auto& cert : m3.verdict.certificates) {
    if (cert.candidate.base == point2(1, 2) &&
        cert.uncovered_face == Segment{point2(1, 0), point2(2, 1)})
      paper_cert = true;
    if (cert.candidate.base == point2(2, 1) &&
        cert.uncovered_face == Segment{point2(0, 1), point2(1, 2)})
      reflected_cert = true;
  }
  require(paper_cert, "missing certificate at (1,2) with face (1,0)-(2,1)");
  require(reflected_cert, "missing Weyl-reflected certificate");
}

void criterion_5_main_theorem_sweep() {
  std::vector<SweepRow> rows = hn_sweep(-3, 5);
  require(rows.size() == 9, "expected 9 sweep rows");
  for (const auto& row : rows) {
    bool expected = row.n >= 2;
    require(row.verdict.obstruction_found == expected,
            "wrong verdict at n=" + std::to_string(row.n));
  }
}

void criterion_6_negative_controls() {
  require(!tolman_check(m1_flag({rat(5), rat(1), rat(0)})).obstruction_found,
          "checker fired on the flag orbit");
  require(!tolman_check(m2_toric().xray).obstruction_found,
          "checker fired on the toric example");
  require(!hirzebruch(HnParams::defaults(1)).verdict.obstruction_found,
          "checker fired on the n=1 member");
}

void criterion_7_builder_cross_check() {
  std::vector<Lambda> lambdas{{rat(2), rat(1), rat(0)},
                              {rat(5), rat(1), rat(0)},
                              {rat(7), rat(3), rat(1)}};
  for (const Lambda& lambda : lambdas) {
    XRay from_chamber = chamber_to_xray(gelfand_cetlin(lambda));
    XRay from_flag = flag_xray(lambda);
    require(from_chamber == from_flag,
            "builders disagree at lambda=(" + to_string(lambda[0]) + "," +
                to_string(lambda[1]) + "," + to_string(lambda[2]) + ")");
  }
}

void criterion_8_admissibility() {
  ChamberData rect = gelfand_cetlin({rat(5), rat(1), rat(0)});
  try {
    cut_u2(rect, {Vec2{{2, 1}}, rat(5)});
    throw Failure("X=(2,1), a=5 was not rejected");
  } catch (const Error& e) {
    require(e.code() == ErrorCode::NonFreeAction, "expected NonFreeAction");
    require(e.data().at("determinant") == "2", "expected determinant 2");
  }
  try {
    cut_u2(rect, {Vec2{{1, 2}}, rat(3)});
    throw Failure("X=(1,2), a=3 was not rejected");
  } catch (const Error& e) {
    require(e.code() == ErrorCode::WallNotPerpendicular,
            "expected WallNotPerpendicular");
  }
  for (long long level : {1, 5, 7}) {
    try {
      cut_u2(rect, {Vec2{{1, 2}}, rat(level)});
      throw Failure("vertex level was not rejected");
    } catch (const Error& e) {
      require(e.code() == ErrorCode::VertexOnCutLine,
              "expected VertexOnCutLine at level " + std::to_string(level));
    }
  }
  CutReportU2 central = cut_u2(rect, {Vec2{{1, 1}}, rat(4)});
  require(central.result.polygon.is_full_dimensional(),
          "central cut not accepted");

  std::vector<Point3> pts{point3(0, 0, 0), point3(4, 0, 0), point3(0, 4, 0),
                          point3(0, 0, 4)};
  Polytope3 simplex = faces3(pts);
  try {
    cut_delzant3(simplex, {Vec3{{1, 2, 0}}, rat(2)});
    throw Failure("X=(1,2,0) was not rejected");
  } catch (const Error& e) {
    require(e.code() == ErrorCode::NonFreeAction,
            "expected NonFreeAction on the simplex");
  }
  CutReportDelzant3 ok = cut_delzant3(simplex, {Vec3{{1, 0, 0}}, rat(2)});
  require(delzant_check(ok.result).is_delzant, "cut output is not Delzant");
}

void criterion_9_oracle_equivalence() {
  {
    auto rng = rng_for(1);
    std::uniform_int_distribution<int> count(1, 8);
    for (int iter = 0; iter < 1000; ++iter) {
      std::vector<Point2> pts;
      int n = count(rng);
      for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
      std::vector<Point2> dedup = pts;
      std::sort(dedup.begin(), dedup.end());
      dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
      std::vector<Point2> oracle;
      for (const Point2& p : dedup) {
        std::vector<Point2> others;
        for (const Point2& q : dedup)
          if (!(q == p)) others.push_back(q);
        if (others.empty() || !in_hull_brute(p, others)) oracle.push_back(p);
      }
      std::vector<Point2> got = hull2(pts).vertices;
      std::sort(got.begin(), got.end());
      require(got == oracle, "hull2 disagrees with the extremality oracle");
    }
  }
  {
    auto rng = rng_for(2);
    int checked = 0;
    while (checked < 1000) {
      Vec2 alpha = random_primitive(rng);
      Vec2 beta = random_primitive(rng);
      Vec2 v = random_primitive(rng);
      if (det2(alpha, beta) == 0) continue;
      ++checked;
      std::vector<Vec2> neg{alpha, beta};
      std::vector<Vec2> pos{v};
      require(strict_feasible(neg, pos) == !cone_member(alpha, beta, v),
              "cone_member disagrees with the feasibility reduction");
    }
  }
  {
    auto rng = rng_for(3);
    std::uniform_int_distribution<int> count(3, 8);
    std::uniform_int_distribution<int> ncoord(-3, 3);
    std::uniform_int_distribution<int> lvl(-10, 10);
    int done = 0;
    while (done < 1000) {
      std::vector<Point2> pts;
      int n = count(rng);
      for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
      Polygon poly = hull2(pts);
      if (!poly.is_full_dimensional()) continue;
      Vec2 normal{{ncoord(rng), ncoord(rng)}};
      if (normal.is_zero()) continue;
      HalfSpace hs = make_halfspace(normal, rat(lvl(rng)));
      ++done;
      std::vector<Point2> expected;
      const std::size_t m = poly.size();
      for (std::size_t i = 0; i < m; ++i) {
        const Point2& cur = poly.vertex(i);
        const Point2& nxt = poly.vertex(i + 1);
        Rational s0 = dot(cur, hs.normal) - hs.level;
        Rational s1 = dot(nxt, hs.normal) - hs.level;
        if (s0 <= 0) expected.push_back(cur);
        if ((s0 < 0 && s1 > 0) || (s0 > 0 && s1 < 0)) {
          Rational t = s0 / (s0 - s1);
          expected.push_back(point2(cur[0] + t * (nxt[0] - cur[0]),
                                    cur[1] + t * (nxt[1] - cur[1])));
        }
      }
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()),
                     expected.end());
      try {
        std::vector<Point2> got = clip2(poly, hs).vertices;
        std::sort(got.begin(), got.end());
        require(got == expected, "clip2 disagrees with the halfplane oracle");
      } catch (const Error& e) {
        bool degenerate = e.code() == ErrorCode::EmptyCut ||
                          e.code() == ErrorCode::DegenerateCut;
        require(degenerate, "unexpected clip2 error");
        require(expected.empty() || !hull2(expected).is_full_dimensional(),
                "clip2 degenerated on a full-dimensional result");
      }
    }
  }
}

void criterion_10_round_trip_and_render() {
  HirzebruchResult m3 = tolman_m3();
  std::vector<Document> docs;
  docs.push_back(make_document(m2_polytope(), "scenario m2 polytope"));
  docs.push_back(
      make_document(gelfand_cetlin({rat(5), rat(1), rat(0)}), "scenario gc"));
  docs.push_back(make_document(m3.xray, "scenario hn n=2"));
  docs.push_back(make_document(m3.verdict, "check"));
  docs.push_back(make_document(hn_sweep(-3, 5), "scenario sweep"));
  for (const Document& doc : docs) {
    std::string text = encode(doc);
    Document back = decode(text);
    require(back == doc, "decode(encode(d)) != d for kind " +
                             to_string(doc.kind));
    require(encode(back) == text, "re-encode is not byte-identical for " +
                                      to_string(doc.kind));
  }
  for (const XRay& x : {m1_flag(), m2_toric().xray, m3.xray}) {
    std::string svg = render_svg(x);
    require(count_occurrences(svg, "<circle") == 6, "expected 6 dots");
    require(count_occurrences(svg, "<line") == 9, "expected 9 lines");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_root = argv[1];

  struct Criterion {
    int id;
    const char* title;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria{
      {1, "flag X-ray of (2,1,0): 6 points, 9 edges in the root classes",
       criterion_1_flag_structure},
      {2, "toric X-ray: exact images, 9 edges, Delzant with unit determinants",
       criterion_2_toric_structure},
      {3, "chamber cut at X=(1,2), a=4: polygon, new and retained vertices",
       criterion_3_figure3_cut},
      {4, "cut space: fixture match and obstruction certificates",
       criterion_4_tolman_example},
      {5, "H_n sweep -3..5: obstruction exactly for n >= 2",
       criterion_5_main_theorem_sweep},
      {6, "negative controls: flag, toric, n=1 all unobstructed",
       criterion_6_negative_controls},
      {7, "chamber and flag builders agree exactly on three orbits",
       criterion_7_builder_cross_check},
      {8, "admissibility gates: rejections and acceptances",
       criterion_8_admissibility},
      {9, "oracle equivalence on 1000+ random instances per operation",
       criterion_9_oracle_equivalence},
      {10, "document round-trips are bit-exact; diagrams have 6 dots, 9 lines",
       criterion_10_round_trip_and_render},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.run();
      std::printf("[PASS] criterion %02d: %s\n", c.id, c.title);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] criterion %02d: %s -- %s\n", c.id, c.title,
                  e.what());
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
