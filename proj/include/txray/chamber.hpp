#pragma once

#include <algorithm>
#include <vector>

#include "txray/error.hpp"
#include "txray/group.hpp"
#include "txray/polygon.hpp"

namespace txray {

/// A multiplicity-free U(2)-space at the combinatorial level: its moment
/// polygon inside the positive Weyl chamber { x >= y }, with the vertices
/// that are images of fixed points marked. Unmarked vertices lie on the
/// wall.
struct ChamberData {
  Polygon polygon;
  std::vector<Point2> fixed_vertices;  // sorted; strictly inside the chamber

  friend bool operator==(const ChamberData&, const ChamberData&) = default;
};

inline ChamberData make_chamber_data(Polygon polygon,
                                     std::vector<Point2> fixed_vertices) {
  if (!polygon.is_full_dimensional())
    throw Error(ErrorCode::InvalidInput,
                "chamber polygon must be 2-dimensional");
  for (const Point2& v : polygon.vertices) {
    if (!in_chamber(v))
      throw Error(ErrorCode::InvalidInput,
                  "chamber polygon vertex " + to_string(v) +
                      " lies outside the chamber { x >= y }");
  }
  std::sort(fixed_vertices.begin(), fixed_vertices.end());
  fixed_vertices.erase(
      std::unique(fixed_vertices.begin(), fixed_vertices.end()),
      fixed_vertices.end());
  auto is_fixed = [&](const Point2& v) {
    return std::binary_search(fixed_vertices.begin(), fixed_vertices.end(), v);
  };
  for (const Point2& v : fixed_vertices) {
    if (std::find(polygon.vertices.begin(), polygon.vertices.end(), v) ==
        polygon.vertices.end())
      throw Error(ErrorCode::InvalidInput,
                  "fixed vertex " + to_string(v) + " is not a polygon vertex");
    if (!strictly_in_chamber(v))
      throw Error(ErrorCode::InvalidInput,
                  "fixed vertex " + to_string(v) +
                      " must lie strictly inside the chamber");
  }
  for (const Point2& v : polygon.vertices) {
    if (!is_fixed(v) && !on_wall(v))
      throw Error(ErrorCode::InvalidInput,
                  "polygon vertex " + to_string(v) +
                      " is neither a fixed vertex nor on the wall");
  }
  return ChamberData{std::move(polygon), std::move(fixed_vertices)};
}

}  // namespace txray
