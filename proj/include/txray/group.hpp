#pragma once

#include <array>

#include "txray/error.hpp"
#include "txray/lattice.hpp"
#include "txray/rational.hpp"

namespace txray {

// Restricted roots of U(3) on the 2-torus U(1)^2 x id, in the standard
// weight basis.
inline constexpr Vec2 kAlpha1{{1, -1}};
inline constexpr Vec2 kAlpha2{{0, 1}};
inline constexpr Vec2 kAlpha3{{1, 0}};
inline constexpr Vec2 kMinusAlpha1{{-1, 1}};

// Positive Weyl chamber of U(2): { x >= y }, wall { x = y } with direction
// (1,1); the Weyl reflection swaps coordinates.
inline constexpr Vec2 kWallDirection{{1, 1}};

static_assert(kAlpha3 == kAlpha1 + kAlpha2);
static_assert(kMinusAlpha1 == -kAlpha1);
// Any two of the three roots form a basis of the weight lattice.
static_assert(det2(kAlpha1, kAlpha2) == 1 || det2(kAlpha1, kAlpha2) == -1);
static_assert(det2(kAlpha1, kAlpha3) == 1 || det2(kAlpha1, kAlpha3) == -1);
static_assert(det2(kAlpha2, kAlpha3) == 1 || det2(kAlpha2, kAlpha3) == -1);
// alpha1 is nonnegative on the chamber and the wall direction annihilates it.
static_assert(dot(kAlpha1, kWallDirection) == 0);

inline Point2 weyl_reflect(const Point2& p) { return point2(p[1], p[0]); }
inline Vec2 weyl_reflect(const Vec2& v) { return Vec2{{v[1], v[0]}}; }

inline bool on_wall(const Point2& p) { return p[0] == p[1]; }
inline bool in_chamber(const Point2& p) { return p[0] >= p[1]; }
inline bool strictly_in_chamber(const Point2& p) { return p[0] > p[1]; }

using Lambda = std::array<Rational, 3>;

inline void require_generic(const Lambda& lambda) {
  if (!(lambda[0] > lambda[1] && lambda[1] > lambda[2]))
    throw Error(ErrorCode::NonGenericLambda,
                "lambda must be strictly decreasing, got (" +
                    to_string(lambda[0]) + "," + to_string(lambda[1]) + "," +
                    to_string(lambda[2]) + ")");
}

/// The six coordinate permutations of a generic lambda, in a fixed order
/// (lexicographic over index permutations).
inline std::array<Point3, 6> s3_orbit(const Lambda& lambda) {
  require_generic(lambda);
  constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                     {0, 2, 1},
                                                     {1, 0, 2},
                                                     {1, 2, 0},
                                                     {2, 0, 1},
                                                     {2, 1, 0}}};
  std::array<Point3, 6> orbit;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& p = perms[i];
    orbit[i] = point3(lambda[std::size_t(p[0])], lambda[std::size_t(p[1])],
                      lambda[std::size_t(p[2])]);
  }
  return orbit;
}

/// Restriction map to t*: drop the last coordinate.
inline Point2 project_to_t2(const Point3& p) { return point2(p[0], p[1]); }

}  // namespace txray
