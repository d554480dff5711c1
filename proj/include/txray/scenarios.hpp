#pragma once

#include <optional>
#include <string>
#include <vector>

#include "txray/chamber.hpp"
#include "txray/cutting.hpp"
#include "txray/error.hpp"
#include "txray/group.hpp"
#include "txray/obstruction.hpp"
#include "txray/polytope3.hpp"
#include "txray/xray.hpp"

namespace txray {

/// Chamber data of the flag orbit through a generic lambda: the interlacing
/// rectangle [lambda2, lambda1] x [lambda3, lambda2]. Three corners are
/// fixed-point images; the fourth sits on the wall, unmarked.
inline ChamberData gelfand_cetlin(const Lambda& lambda) {
  require_generic(lambda);
  const Rational& l1 = lambda[0];
  const Rational& l2 = lambda[1];
  const Rational& l3 = lambda[2];
  Polygon rect = make_polygon({point2(l2, l3), point2(l1, l3), point2(l1, l2),
                               point2(l2, l2)});
  return make_chamber_data(
      rect, {point2(l2, l3), point2(l1, l3), point2(l1, l2)});
}

inline XRay m1_flag(const Lambda& lambda = {rat(5), rat(1), rat(0)}) {
  return flag_xray(lambda);
}

/// The toric example: outer triangle at height 0, inner triangle at height
/// 1. Delzant by construction; asserted anyway.
inline Polytope3 m2_polytope() {
  std::vector<Point3> vertices{point3(0, 0, 0), point3(8, 0, 0),
                               point3(0, 8, 0), point3(2, 2, 1),
                               point3(4, 2, 1), point3(2, 4, 1)};
  Polytope3 p = faces3(vertices);
  if (!delzant_check(p).is_delzant)
    throw Error(ErrorCode::NotDelzant, "toric scenario polytope is not Delzant");
  return p;
}

struct M2Scenario {
  Polytope3 polytope;
  XRay xray;
};

inline M2Scenario m2_toric() {
  Polytope3 p = m2_polytope();
  XRay x = toric_xray(p);
  return {std::move(p), std::move(x)};
}

/// Parameters of the generalized Hirzebruch family: cut the flag orbit with
/// the circle (1, n) at a level crossing both horizontal rectangle edges.
struct HnParams {
  int n = 0;
  Lambda lambda{rat(5), rat(1), rat(0)};
  Rational level = 0;

  static HnParams defaults(int n) {
    HnParams params;
    params.n = n;
    if (n >= 1) {
      params.lambda = {rat(n + 3), rat(1), rat(0)};
      params.level = rat(n + 2);
    } else if (n <= -1) {
      params.lambda = {rat(5), rat(1), rat(0)};
      params.level = rat(6 + n, 2);
    }
    return params;
  }
};

inline void validate(const HnParams& params) {
  require_generic(params.lambda);
  if (params.n == 0) return;  // no cut
  const Rational& l1 = params.lambda[0];
  const Rational& l2 = params.lambda[1];
  const Rational& l3 = params.lambda[2];
  Rational bottom_x = params.level - Rational(params.n) * l3;
  Rational top_x = params.level - Rational(params.n) * l2;
  if (!(l2 < bottom_x && bottom_x < l1 && l2 < top_x && top_x < l1))
    throw Error(ErrorCode::InvalidInput,
                "cut line for n=" + std::to_string(params.n) +
                    " does not cross both horizontal edges of the rectangle "
                    "strictly between vertices");
}

struct HirzebruchResult {
  ChamberData chamber;
  XRay xray;
  Verdict verdict;
  std::optional<CutReportU2> cut_report;  // absent for n = 0
};

inline HirzebruchResult hirzebruch(const HnParams& params) {
  validate(params);
  ChamberData base = gelfand_cetlin(params.lambda);
  HirzebruchResult result;
  if (params.n == 0) {
    result.chamber = std::move(base);
  } else {
    CutSpec2 spec = make_cut_spec(Vec2{{1, params.n}}, params.level);
    CutReportU2 report = cut_u2(base, spec);
    result.chamber = report.result;
    result.cut_report = std::move(report);
  }
  result.xray = chamber_to_xray(result.chamber);
  result.verdict = tolman_check(result.xray);
  return result;
}

/// The cut space with the non-Kahler X-ray (the n = 2 member).
inline HirzebruchResult tolman_m3() { return hirzebruch(HnParams::defaults(2)); }

struct SweepRow {
  int n;
  Verdict verdict;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline std::vector<SweepRow> hn_sweep(int n_from, int n_to) {
  if (n_from > n_to)
    throw Error(ErrorCode::InvalidInput, "sweep range is empty");
  std::vector<SweepRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    HirzebruchResult result = hirzebruch(HnParams::defaults(n));
    rows.push_back({n, std::move(result.verdict)});
  }
  return rows;
}

}  // namespace txray
