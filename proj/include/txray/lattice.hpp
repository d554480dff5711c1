#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "txray/error.hpp"
#include "txray/rational.hpp"

namespace txray {

/// Integer vector in the weight lattice (weights, edge directions, circle
/// directions). N is 2 or 3.
template <int N>
struct LatticeVector {
  std::array<std::int64_t, N> c{};

  constexpr std::int64_t operator[](int i) const { return c[std::size_t(i)]; }
  constexpr std::int64_t& operator[](int i) { return c[std::size_t(i)]; }

  constexpr bool is_zero() const {
    for (auto v : c)
      if (v != 0) return false;
    return true;
  }

  friend constexpr bool operator==(const LatticeVector&,
                                   const LatticeVector&) = default;
  friend constexpr auto operator<=>(const LatticeVector&,
                                    const LatticeVector&) = default;

  constexpr LatticeVector operator-() const {
    LatticeVector r;
    for (int i = 0; i < N; ++i) r.c[std::size_t(i)] = -c[std::size_t(i)];
    return r;
  }
  friend constexpr LatticeVector operator+(const LatticeVector& a,
                                           const LatticeVector& b) {
    LatticeVector r;
    for (int i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend constexpr LatticeVector operator-(const LatticeVector& a,
                                           const LatticeVector& b) {
    return a + (-b);
  }
  friend constexpr LatticeVector operator*(std::int64_t k,
                                           const LatticeVector& a) {
    LatticeVector r;
    for (int i = 0; i < N; ++i) r[i] = k * a[i];
    return r;
  }
};

using Vec2 = LatticeVector<2>;
using Vec3 = LatticeVector<3>;

template <int N>
constexpr std::int64_t dot(const LatticeVector<N>& a,
                           const LatticeVector<N>& b) {
  std::int64_t s = 0;
  for (int i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

constexpr std::int64_t det2(const Vec2& a, const Vec2& b) {
  return a[0] * b[1] - a[1] * b[0];
}

constexpr std::int64_t det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

constexpr Vec3 cross3(const Vec3& a, const Vec3& b) {
  return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]}};
}

template <int N>
std::string to_string(const LatticeVector<N>& v) {
  std::string s = "(";
  for (int i = 0; i < N; ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

template <int N>
constexpr std::int64_t coordinate_gcd(const LatticeVector<N>& v) {
  std::int64_t g = 0;
  for (auto x : v.c) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// v divided by the gcd of its coordinates; same direction, gcd 1.
template <int N>
LatticeVector<N> primitive(const LatticeVector<N>& v) {
  if (v.is_zero())
    throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  std::int64_t g = coordinate_gcd(v);
  LatticeVector<N> r;
  for (int i = 0; i < N; ++i) r[i] = v[i] / g;
  return r;
}

template <int N>
bool is_primitive(const LatticeVector<N>& v) {
  return !v.is_zero() && coordinate_gcd(v) == 1;
}

/// Exact point of Q^N (moment-map image coordinates).
template <int N>
struct RationalPoint {
  std::array<Rational, N> c{};

  const Rational& operator[](int i) const { return c[std::size_t(i)]; }
  Rational& operator[](int i) { return c[std::size_t(i)]; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    for (int i = 0; i < N; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

using Point2 = RationalPoint<2>;
using Point3 = RationalPoint<3>;

inline Point2 point2(const Rational& x, const Rational& y) {
  return Point2{{x, y}};
}
inline Point2 point2(long long x, long long y) {
  return point2(rat(x), rat(y));
}
inline Point3 point3(const Rational& x, const Rational& y, const Rational& z) {
  return Point3{{x, y, z}};
}
inline Point3 point3(long long x, long long y, long long z) {
  return point3(rat(x), rat(y), rat(z));
}

template <int N>
Rational dot(const RationalPoint<N>& p, const LatticeVector<N>& v) {
  Rational s = 0;
  for (int i = 0; i < N; ++i) s += p[i] * Rational(v[i]);
  return s;
}

template <int N>
std::array<Rational, N> operator-(const RationalPoint<N>& a,
                                  const RationalPoint<N>& b) {
  std::array<Rational, N> d;
  for (int i = 0; i < N; ++i) d[std::size_t(i)] = a[i] - b[i];
  return d;
}

template <int N>
std::string to_string(const RationalPoint<N>& p) {
  std::string s = "(";
  for (int i = 0; i < N; ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

/// Primitive lattice direction of the segment from `from` to `to`.
template <int N>
LatticeVector<N> primitive_direction(const RationalPoint<N>& from,
                                     const RationalPoint<N>& to) {
  Integer lcm = 1;
  for (int i = 0; i < N; ++i) {
    Integer d = rational_den(to[i] - from[i]);
    lcm = boost::multiprecision::lcm(lcm, d);
  }
  LatticeVector<N> v;
  for (int i = 0; i < N; ++i) {
    Integer scaled = rational_num((to[i] - from[i]) * Rational(lcm));
    v[i] = to_int64_checked(scaled);
  }
  return primitive(v);  // throws ZeroVector when from == to
}

/// Sign-canonical representative of {v, -v}: first nonzero coordinate
/// positive.
template <int N>
LatticeVector<N> canonical_direction(const LatticeVector<N>& v) {
  for (int i = 0; i < N; ++i) {
    if (v[i] > 0) return v;
    if (v[i] < 0) return -v;
  }
  throw Error(ErrorCode::ZeroVector, "zero vector has no direction");
}

/// Solves q = c1*alpha + c2*beta exactly. Requires alpha, beta independent.
inline std::pair<Rational, Rational> cone_coefficients(const Vec2& alpha,
                                                       const Vec2& beta,
                                                       const Rational& qx,
                                                       const Rational& qy) {
  std::int64_t d = det2(alpha, beta);
  if (d == 0)
    throw Error(ErrorCode::DegenerateCone,
                "cone generators " + to_string(alpha) + ", " +
                    to_string(beta) + " are linearly dependent");
  // Cramer's rule.
  Rational c1 = (qx * Rational(beta[1]) - qy * Rational(beta[0])) / Rational(d);
  Rational c2 =
      (Rational(alpha[0]) * qy - Rational(alpha[1]) * qx) / Rational(d);
  return {c1, c2};
}

/// Membership of v in the closed cone spanned by alpha and beta.
inline bool cone_member(const Vec2& alpha, const Vec2& beta, const Vec2& v) {
  auto [c1, c2] = cone_coefficients(alpha, beta, rat(v[0]), rat(v[1]));
  return c1 >= 0 && c2 >= 0;
}

/// Does some v in R^2 satisfy <w,v> < 0 for every w in `negatives` and
/// <w,v> > 0 for every w in `positives`? Decided exactly: the feasible
/// directions form an open arc whose closure endpoints are rotations of the
/// constraint vectors, so checking the constraint vectors themselves plus
/// all pairwise sums of their +-90-degree rotations is exhaustive.
inline bool strict_feasible(std::span<const Vec2> negatives,
                            std::span<const Vec2> positives) {
  std::vector<Vec2> constraints;  // require <u, v> > 0 for all u
  constraints.reserve(negatives.size() + positives.size());
  for (const Vec2& w : negatives) constraints.push_back(-w);
  for (const Vec2& w : positives) constraints.push_back(w);
  for (const Vec2& u : constraints) {
    if (u.is_zero())
      throw Error(ErrorCode::ZeroVector,
                  "feasibility constraint vectors must be nonzero");
  }
  if (constraints.empty()) return true;

  std::vector<Vec2> candidates = constraints;
  std::vector<Vec2> rotations;
  for (const Vec2& u : constraints) {
    Vec2 r{{-u[1], u[0]}};
    rotations.push_back(r);
    rotations.push_back(-r);
  }
  for (std::size_t i = 0; i < rotations.size(); ++i)
    for (std::size_t j = i + 1; j < rotations.size(); ++j) {
      Vec2 s = rotations[i] + rotations[j];
      if (!s.is_zero()) candidates.push_back(s);
    }

  for (const Vec2& v : candidates) {
    bool ok = true;
    for (const Vec2& u : constraints) {
      if (dot(u, v) <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace txray
