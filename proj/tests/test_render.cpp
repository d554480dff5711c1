#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "test_support.hpp"
#include "txray/render.hpp"
#include "txray/scenarios.hpp"

using namespace txray;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("SVG diagrams have one dot per fixed point and one line per edge") {
  for (const XRay& x : {m1_flag(), m2_toric().xray, tolman_m3().xray}) {
    std::string svg = render_svg(x);
    CHECK(count_occurrences(svg, "<circle") == 6);
    CHECK(count_occurrences(svg, "<line") == 9);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
  }
}

TEST_CASE("overlays add classed elements") {
  HirzebruchResult m3 = tolman_m3();
  RenderOptions opts;
  opts.wall = true;
  opts.cut_line = CutLineOverlay{Vec2{{1, 2}}, rat(4)};
  for (const auto& cert : m3.verdict.certificates)
    opts.highlights.push_back(cert.uncovered_face);
  std::string svg = render_svg(m3.xray, opts);
  CHECK(count_occurrences(svg, "class=\"wall\"") == 1);
  CHECK(count_occurrences(svg, "class=\"cut-line\"") == 1);
  CHECK(count_occurrences(svg, "class=\"uncovered-face\"") ==
        int(m3.verdict.certificates.size()));
  CHECK(count_occurrences(svg, "class=\"edge\"") == 9);
}

TEST_CASE("rendering is deterministic") {
  XRay a = tolman_m3().xray;
  XRay b = hirzebruch(HnParams::defaults(2)).xray;
  REQUIRE(a == b);
  CHECK(render_svg(a) == render_svg(b));
  CHECK(render_ascii(a) == render_ascii(b));
}

TEST_CASE("a single dot renders as one circle and no lines") {
  std::vector<WeightedFixedPoint> fps{{point2(1, 1), {}}};
  XRay x = make_xray(fps, {});
  std::string svg = render_svg(x);
  CHECK(count_occurrences(svg, "<circle") == 1);
  CHECK(count_occurrences(svg, "<line") == 0);
}

TEST_CASE("ASCII rendering marks the fixed points") {
  std::string art = render_ascii(m1_flag({rat(2), rat(1), rat(0)}));
  CHECK(count_occurrences(art, "o") == 6);
  // Fractional coordinates land on the denominator-cleared grid.
  std::string frac = render_ascii(hirzebruch(HnParams::defaults(-1)).xray);
  CHECK(count_occurrences(frac, "o") == 6);
}
