#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "txray/error.hpp"
#include "txray/lattice.hpp"
#include "txray/polygon.hpp"
#include "txray/xray.hpp"

namespace txray {

struct CutLineOverlay {
  Vec2 direction;
  Rational level;
};

struct RenderOptions {
  bool wall = false;
  std::optional<CutLineOverlay> cut_line;
  std::vector<Segment> highlights;  // drawn emphasized (uncovered faces)
};

namespace renderdetail {

inline Integer floor_rational(const Rational& q) {
  Integer n = rational_num(q);
  Integer d = rational_den(q);
  Integer quot = n / d;
  if (n < 0 && quot * d != n) quot -= 1;
  return quot;
}

/// Exact decimal with 3 places, round half up, trailing zeros stripped.
inline std::string px(const Rational& v) {
  Integer scaled = floor_rational(v * 1000 + Rational(1, 2));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Integer whole = scaled / 1000;
  Integer frac = scaled % 1000;
  std::string s = (negative && !(whole == 0 && frac == 0)) ? "-" : "";
  s += whole.str();
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(f.begin(), 3 - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    s += "." + f;
  }
  return s;
}

struct Box {
  Rational min_x, max_x, min_y, max_y;
};

inline Box bounding_box(const XRay& x) {
  if (x.fixed_points.empty())
    throw Error(ErrorCode::EmptyInput, "cannot render an empty X-ray");
  Box box{x.fixed_points[0].position[0], x.fixed_points[0].position[0],
          x.fixed_points[0].position[1], x.fixed_points[0].position[1]};
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    box.min_x = std::min(box.min_x, fp.position[0]);
    box.max_x = std::max(box.max_x, fp.position[0]);
    box.min_y = std::min(box.min_y, fp.position[1]);
    box.max_y = std::max(box.max_y, fp.position[1]);
  }
  return box;
}

/// The segment of the line <v, X> = a inside the box, if it is a segment.
inline std::optional<Segment> clip_line_to_box(const Box& box, const Vec2& X,
                                               const Rational& a) {
  std::array<Point2, 4> corners{
      point2(box.min_x, box.min_y), point2(box.max_x, box.min_y),
      point2(box.max_x, box.max_y), point2(box.min_x, box.max_y)};
  std::vector<Point2> hits;
  auto push = [&](const Point2& p) {
    if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  for (int i = 0; i < 4; ++i) {
    const Point2& c0 = corners[std::size_t(i)];
    const Point2& c1 = corners[std::size_t((i + 1) % 4)];
    Rational s0 = dot(c0, X) - a;
    Rational s1 = dot(c1, X) - a;
    if (s0 == 0) push(c0);
    if (s1 == 0) push(c1);
    if ((s0 < 0 && s1 > 0) || (s0 > 0 && s1 < 0)) {
      Rational t = s0 / (s0 - s1);
      push(point2(c0[0] + t * (c1[0] - c0[0]), c0[1] + t * (c1[1] - c0[1])));
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  if (hits.front() == hits.back()) return std::nullopt;
  return Segment{hits.front(), hits.back()};
}

}  // namespace renderdetail

/// SVG 1.1 diagram: one circle per fixed point, one line per edge,
/// optional dashed wall/cut overlays and highlighted segments. Pure
/// function of its arguments; byte-identical output for identical input.
inline std::string render_svg(const XRay& x, const RenderOptions& opts = {}) {
  using renderdetail::px;
  renderdetail::Box box = renderdetail::bounding_box(x);
  Rational extent =
      std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  if (extent == 0) extent = 1;
  const Rational scale = Rational(440) / extent;
  const Rational margin = 20;
  auto X = [&](const Rational& wx) -> Rational {
    return margin + (wx - box.min_x) * scale;
  };
  auto Y = [&](const Rational& wy) -> Rational {
    return margin + (box.max_y - wy) * scale;
  };
  Integer width = renderdetail::floor_rational(
      (box.max_x - box.min_x) * scale + 2 * margin + Rational(1, 2));
  Integer height = renderdetail::floor_rational(
      (box.max_y - box.min_y) * scale + 2 * margin + Rational(1, 2));

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         width.str() + "\" height=\"" + height.str() + "\" viewBox=\"0 0 " +
         width.str() + " " + height.str() + "\">\n";
  auto line = [&](const Point2& a, const Point2& b, const std::string& cls,
                  const std::string& style) {
    svg += "  <line class=\"" + cls + "\" x1=\"" + px(X(a[0])) + "\" y1=\"" +
           px(Y(a[1])) + "\" x2=\"" + px(X(b[0])) + "\" y2=\"" +
           px(Y(b[1])) + "\" " + style + "/>\n";
  };

  if (opts.wall) {
    Rational t0 = std::max(box.min_x, box.min_y);
    Rational t1 = std::min(box.max_x, box.max_y);
    if (t0 < t1)
      line(point2(t0, t0), point2(t1, t1), "wall",
           "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4,4\"");
  }
  if (opts.cut_line) {
    auto seg = renderdetail::clip_line_to_box(box, opts.cut_line->direction,
                                              opts.cut_line->level);
    if (seg)
      line(seg->a, seg->b, "cut-line",
           "stroke=\"#2980b9\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"");
  }
  for (const XRayEdge& e : x.edges) {
    Segment s = x.edge_segment(e);
    line(s.a, s.b, "edge", "stroke=\"#222222\" stroke-width=\"2\"");
  }
  for (const Segment& h : opts.highlights)
    line(h.a, h.b, "uncovered-face",
         "stroke=\"#c0392b\" stroke-width=\"4\" stroke-dasharray=\"8,4\"");
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    svg += "  <circle class=\"fixed-point\" cx=\"" + px(X(fp.position[0])) +
           "\" cy=\"" + px(Y(fp.position[1])) + "\" r=\"5\" fill=\"#111111\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// Character-grid rendering on the denominator-cleared lattice; x is
/// stretched by 2 for aspect. Fixed points are 'o', edges use a direction
/// glyph, the wall overlay dots the diagonal.
inline std::string render_ascii(const XRay& x, const RenderOptions& opts = {}) {
  renderdetail::Box box = renderdetail::bounding_box(x);
  Integer lcm = 1;
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    lcm = boost::multiprecision::lcm(lcm, rational_den(fp.position[0]));
    lcm = boost::multiprecision::lcm(lcm, rational_den(fp.position[1]));
  }
  Rational l(lcm);
  auto cell_x = [&](const Rational& wx) {
    return to_int64_checked(rational_num((wx - box.min_x) * l));
  };
  auto cell_y = [&](const Rational& wy) {
    return to_int64_checked(rational_num((box.max_y - wy) * l));
  };
  std::int64_t cols = 2 * cell_x(box.max_x) + 1;
  std::int64_t rows = cell_y(box.min_y) + 1;
  if (cols > 241 || rows > 121)
    throw Error(ErrorCode::InvalidInput,
                "X-ray too large for the ASCII grid");

  std::vector<std::string> grid(std::size_t(rows),
                                std::string(std::size_t(cols), ' '));
  auto put = [&](std::int64_t col, std::int64_t row, char c) {
    if (col >= 0 && col < cols && row >= 0 && row < rows)
      grid[std::size_t(row)][std::size_t(col)] = c;
  };

  if (opts.wall) {
    // Lattice points with x == y inside the box.
    for (std::int64_t gx = 0; gx < cols; gx += 2) {
      Rational wx = box.min_x + Rational(gx / 2) / l;
      Rational wy = wx;
      if (wy < box.min_y || wy > box.max_y) continue;
      put(gx, cell_y(wy), '.');
    }
  }
  for (const XRayEdge& e : x.edges) {
    Segment s = x.edge_segment(e);
    std::int64_t ax = cell_x(s.a[0]), ay = cell_y(s.a[1]);
    std::int64_t bx = cell_x(s.b[0]), by = cell_y(s.b[1]);
    std::int64_t dx = bx - ax, dy = by - ay;
    std::int64_t g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    if (g == 0) continue;
    std::int64_t sx = dx / g, sy = dy / g;
    char glyph = sx == 0 ? '|' : sy == 0 ? '-' : (sx > 0) == (sy > 0) ? '\\' : '/';
    for (std::int64_t k = 1; k < g; ++k)
      put(2 * (ax + k * sx), ay + k * sy, glyph);
    if (sy == 0)  // fill the stretched columns of horizontal runs
      for (std::int64_t k = 0; k < g; ++k) put(2 * ax + 2 * k * sx + sx, ay, '-');
  }

  if (opts.cut_line) {
    // Grid points on the cut line <v, X> = a, drawn over the edges.
    for (std::int64_t gx = 0; gx < cols; gx += 2)
      for (std::int64_t gy = 0; gy < rows; ++gy) {
        Rational wx = box.min_x + Rational(gx / 2) / l;
        Rational wy = box.max_y - Rational(gy) / l;
        if (dot(point2(wx, wy), opts.cut_line->direction) ==
            opts.cut_line->level)
          put(gx, gy, ':');
      }
  }

  for (const WeightedFixedPoint& fp : x.fixed_points)
    put(2 * cell_x(fp.position[0]), cell_y(fp.position[1]), 'o');

  std::string out;
  for (const std::string& row : grid) {
    std::string trimmed = row;
    while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
    out += trimmed;
    out += '\n';
  }
  return out;
}

inline std::string render_xray(const XRay& x, const std::string& format,
                               const RenderOptions& opts = {}) {
  if (format == "svg") return render_svg(x, opts);
  if (format == "ascii") return render_ascii(x, opts);
  throw Error(ErrorCode::InvalidInput,
              "unknown render format \"" + format + "\" (svg|ascii)");
}

}  // namespace txray
