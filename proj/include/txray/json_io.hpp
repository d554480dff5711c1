#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "txray/chamber.hpp"
#include "txray/error.hpp"
#include "txray/obstruction.hpp"
#include "txray/polytope3.hpp"
#include "txray/scenarios.hpp"
#include "txray/version.hpp"
#include "txray/xray.hpp"

namespace txray {

using Json = nlohmann::ordered_json;

enum class DocumentKind { Polytope3, Chamber, XRay, Verdict, Sweep };

inline std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Polytope3: return "polytope3";
    case DocumentKind::Chamber: return "chamber";
    case DocumentKind::XRay: return "xray";
    case DocumentKind::Verdict: return "verdict";
    case DocumentKind::Sweep: return "sweep";
  }
  return "unknown";
}

struct DocumentMeta {
  std::string tool = tool_string();
  std::string provenance;

  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

/// The one persisted value shape: a tagged payload plus provenance. All
/// rationals travel as strings in lowest terms, so round-trips are
/// bit-exact.
struct Document {
  DocumentKind kind;
  DocumentMeta meta;
  std::variant<Polytope3, ChamberData, XRay, Verdict, std::vector<SweepRow>>
      payload;

  friend bool operator==(const Document&, const Document&) = default;
};

inline Document make_document(Polytope3 p, std::string provenance) {
  return {DocumentKind::Polytope3, {tool_string(), std::move(provenance)},
          std::move(p)};
}
inline Document make_document(ChamberData cd, std::string provenance) {
  return {DocumentKind::Chamber, {tool_string(), std::move(provenance)},
          std::move(cd)};
}
inline Document make_document(XRay x, std::string provenance) {
  return {DocumentKind::XRay, {tool_string(), std::move(provenance)},
          std::move(x)};
}
inline Document make_document(Verdict v, std::string provenance) {
  return {DocumentKind::Verdict, {tool_string(), std::move(provenance)},
          std::move(v)};
}
inline Document make_document(std::vector<SweepRow> rows,
                              std::string provenance) {
  return {DocumentKind::Sweep, {tool_string(), std::move(provenance)},
          std::move(rows)};
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

namespace jsondetail {

inline Json encode_point(const Point2& p) {
  return Json::array({to_string(p[0]), to_string(p[1])});
}
inline Json encode_point(const Point3& p) {
  return Json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])});
}
template <int N>
Json encode_vec(const LatticeVector<N>& v) {
  Json arr = Json::array();
  for (int i = 0; i < N; ++i) arr.push_back(v[i]);
  return arr;
}

inline Json encode_payload(const Polytope3& p) {
  Json vertices = Json::array();
  for (const Point3& v : p.vertices) vertices.push_back(encode_point(v));
  return Json{{"vertices", vertices}};
}

inline Json encode_payload(const ChamberData& cd) {
  Json polygon = Json::array();
  for (const Point2& v : cd.polygon.vertices)
    polygon.push_back(encode_point(v));
  Json fixed = Json::array();
  for (const Point2& v : cd.fixed_vertices) {
    for (std::size_t i = 0; i < cd.polygon.vertices.size(); ++i)
      if (cd.polygon.vertices[i] == v) fixed.push_back(i);
  }
  return Json{{"polygon", polygon}, {"fixed_vertices", fixed}};
}

inline Json encode_payload(const XRay& x) {
  Json fps = Json::array();
  for (const WeightedFixedPoint& fp : x.fixed_points) {
    Json weights = Json::array();
    for (const Weight& w : fp.weights)
      weights.push_back(Json{{"direction", encode_vec(w.direction)},
                             {"multiplicity", w.multiplicity}});
    fps.push_back(
        Json{{"position", encode_point(fp.position)}, {"weights", weights}});
  }
  Json edges = Json::array();
  for (const XRayEdge& e : x.edges)
    edges.push_back(Json{{"endpoints", Json::array({e.a, e.b})},
                         {"direction", encode_vec(e.direction)},
                         {"rank", e.rank}});
  return Json{{"fixed_points", fps}, {"edges", edges}};
}

inline Json encode_certificate(const ObstructionCertificate& cert) {
  Json contained = Json::array();
  for (const Point2& p : cert.contained_points)
    contained.push_back(encode_point(p));
  Json hull = Json::array();
  for (const Point2& p : cert.delta_cand.vertices)
    hull.push_back(encode_point(p));
  return Json{{"fixed_point", encode_point(cert.candidate.base)},
              {"alpha", encode_vec(cert.candidate.alpha)},
              {"beta", encode_vec(cert.candidate.beta)},
              {"contained_points", contained},
              {"delta_cand", hull},
              {"uncovered_face",
               Json::array({encode_point(cert.uncovered_face.a),
                            encode_point(cert.uncovered_face.b)})}};
}

inline Json encode_payload(const Verdict& v) {
  Json certs = Json::array();
  for (const ObstructionCertificate& cert : v.certificates)
    certs.push_back(encode_certificate(cert));
  return Json{{"obstruction_found", v.obstruction_found},
              {"certificates", certs}};
}

inline Json encode_payload(const std::vector<SweepRow>& rows) {
  Json entries = Json::array();
  for (const SweepRow& row : rows)
    entries.push_back(Json{{"n", row.n}, {"verdict", encode_payload(row.verdict)}});
  return Json{{"entries", entries}};
}

}  // namespace jsondetail

inline std::string encode(const Document& doc) {
  Json j{{"kind", to_string(doc.kind)},
         {"meta",
          Json{{"tool", doc.meta.tool}, {"provenance", doc.meta.provenance}}}};
  j["payload"] = std::visit(
      [](const auto& payload) { return jsondetail::encode_payload(payload); },
      doc.payload);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Decoding (strict: unknown fields and malformed values are rejected with a
// JSON path)
// ---------------------------------------------------------------------------

namespace jsondetail {

[[noreturn]] inline void fail(const std::string& path,
                              const std::string& why) {
  throw Error(ErrorCode::ParseError, why + " at " + path,
              {{"path", path}});
}

inline const Json& member(const Json& obj, const char* key,
                          const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline void reject_unknown(const Json& obj,
                           std::initializer_list<const char*> keys,
                           const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail(path + "." + it.key(), "unknown field");
  }
}

inline Rational decode_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

inline std::int64_t decode_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

template <int N>
RationalPoint<N> decode_point(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != N)
    fail(path, "expected an array of " + std::to_string(N) + " rationals");
  RationalPoint<N> p;
  for (int i = 0; i < N; ++i)
    p[i] = decode_rational(j[std::size_t(i)],
                           path + "[" + std::to_string(i) + "]");
  return p;
}

template <int N>
LatticeVector<N> decode_vec(const Json& j, const std::string& path,
                            bool require_primitive) {
  if (!j.is_array() || j.size() != N)
    fail(path, "expected an array of " + std::to_string(N) + " integers");
  LatticeVector<N> v;
  for (int i = 0; i < N; ++i)
    v[i] = decode_int(j[std::size_t(i)], path + "[" + std::to_string(i) + "]");
  if (require_primitive && !is_primitive(v))
    fail(path, "direction " + to_string(v) + " is not a primitive vector");
  return v;
}

inline Polytope3 decode_polytope3(const Json& j, const std::string& path) {
  reject_unknown(j, {"vertices"}, path);
  const Json& verts = member(j, "vertices", path);
  if (!verts.is_array()) fail(path + ".vertices", "expected an array");
  std::vector<Point3> points;
  for (std::size_t i = 0; i < verts.size(); ++i)
    points.push_back(decode_point<3>(
        verts[i], path + ".vertices[" + std::to_string(i) + "]"));
  Polytope3 p = faces3(points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points != p.vertices)
    fail(path + ".vertices",
         "vertex list is not exactly the extreme points of its hull");
  return p;
}

inline ChamberData decode_chamber(const Json& j, const std::string& path) {
  reject_unknown(j, {"polygon", "fixed_vertices"}, path);
  const Json& poly = member(j, "polygon", path);
  if (!poly.is_array()) fail(path + ".polygon", "expected an array");
  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < poly.size(); ++i)
    vertices.push_back(decode_point<2>(
        poly[i], path + ".polygon[" + std::to_string(i) + "]"));
  const Json& fixed = member(j, "fixed_vertices", path);
  if (!fixed.is_array()) fail(path + ".fixed_vertices", "expected an array");
  std::vector<Point2> fixed_vertices;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    std::int64_t idx = decode_int(
        fixed[i], path + ".fixed_vertices[" + std::to_string(i) + "]");
    if (idx < 0 || idx >= std::int64_t(vertices.size()))
      fail(path + ".fixed_vertices[" + std::to_string(i) + "]",
           "vertex index out of range");
    fixed_vertices.push_back(vertices[std::size_t(idx)]);
  }
  return make_chamber_data(make_polygon(std::move(vertices)),
                           std::move(fixed_vertices));
}

inline XRay decode_xray(const Json& j, const std::string& path) {
  reject_unknown(j, {"fixed_points", "edges"}, path);
  const Json& fps = member(j, "fixed_points", path);
  if (!fps.is_array()) fail(path + ".fixed_points", "expected an array");
  std::vector<WeightedFixedPoint> fixed_points;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    std::string fp_path = path + ".fixed_points[" + std::to_string(i) + "]";
    reject_unknown(fps[i], {"position", "weights"}, fp_path);
    WeightedFixedPoint fp;
    fp.position =
        decode_point<2>(member(fps[i], "position", fp_path), fp_path + ".position");
    const Json& weights = member(fps[i], "weights", fp_path);
    if (!weights.is_array()) fail(fp_path + ".weights", "expected an array");
    for (std::size_t w = 0; w < weights.size(); ++w) {
      std::string w_path = fp_path + ".weights[" + std::to_string(w) + "]";
      reject_unknown(weights[w], {"direction", "multiplicity"}, w_path);
      Vec2 dir = decode_vec<2>(member(weights[w], "direction", w_path),
                               w_path + ".direction", /*require_primitive=*/true);
      std::int64_t mult = decode_int(member(weights[w], "multiplicity", w_path),
                                     w_path + ".multiplicity");
      if (mult < 1) fail(w_path + ".multiplicity", "must be >= 1");
      fp.weights.push_back({dir, int(mult)});
    }
    std::sort(fp.weights.begin(), fp.weights.end(),
              [](const Weight& a, const Weight& b) {
                return a.direction < b.direction;
              });
    fixed_points.push_back(std::move(fp));
  }

  const Json& edges = member(j, "edges", path);
  if (!edges.is_array()) fail(path + ".edges", "expected an array");
  std::vector<EdgeSpec> specs;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::string e_path = path + ".edges[" + std::to_string(e) + "]";
    reject_unknown(edges[e], {"endpoints", "direction", "rank"}, e_path);
    const Json& ends = member(edges[e], "endpoints", e_path);
    if (!ends.is_array() || ends.size() != 2)
      fail(e_path + ".endpoints", "expected two fixed-point indices");
    std::int64_t ia = decode_int(ends[0], e_path + ".endpoints[0]");
    std::int64_t ib = decode_int(ends[1], e_path + ".endpoints[1]");
    if (ia < 0 || ib < 0 || ia >= std::int64_t(fixed_points.size()) ||
        ib >= std::int64_t(fixed_points.size()))
      fail(e_path + ".endpoints", "fixed-point index out of range");
    Vec2 dir = decode_vec<2>(member(edges[e], "direction", e_path),
                             e_path + ".direction", /*require_primitive=*/true);
    std::int64_t rank =
        decode_int(member(edges[e], "rank", e_path), e_path + ".rank");
    if (rank < 1) fail(e_path + ".rank", "must be >= 1");
    const Point2& a = fixed_points[std::size_t(ia)].position;
    const Point2& b = fixed_points[std::size_t(ib)].position;
    if (a == b) fail(e_path + ".endpoints", "endpoints coincide");
    if (primitive_direction(a, b) != dir)
      fail(e_path + ".direction",
           "stored direction does not match the endpoint difference");
    specs.push_back({a, b, int(rank)});
  }
  return make_xray(std::move(fixed_points), specs);
}

inline Polygon decode_hull(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a vertex array");
  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < j.size(); ++i)
    vertices.push_back(
        decode_point<2>(j[i], path + "[" + std::to_string(i) + "]"));
  if (vertices.size() >= 3) return make_polygon(std::move(vertices));
  return Polygon{std::move(vertices)};  // degenerate hulls are permitted here
}

inline Verdict decode_verdict(const Json& j, const std::string& path) {
  reject_unknown(j, {"obstruction_found", "certificates"}, path);
  const Json& found = member(j, "obstruction_found", path);
  if (!found.is_boolean()) fail(path + ".obstruction_found", "expected a bool");
  Verdict v;
  v.obstruction_found = found.get<bool>();
  const Json& certs = member(j, "certificates", path);
  if (!certs.is_array()) fail(path + ".certificates", "expected an array");
  for (std::size_t i = 0; i < certs.size(); ++i) {
    std::string c_path = path + ".certificates[" + std::to_string(i) + "]";
    reject_unknown(certs[i],
                   {"fixed_point", "alpha", "beta", "contained_points",
                    "delta_cand", "uncovered_face"},
                   c_path);
    ObstructionCertificate cert;
    cert.candidate.base = decode_point<2>(
        member(certs[i], "fixed_point", c_path), c_path + ".fixed_point");
    cert.candidate.alpha = decode_vec<2>(member(certs[i], "alpha", c_path),
                                         c_path + ".alpha", true);
    cert.candidate.beta = decode_vec<2>(member(certs[i], "beta", c_path),
                                        c_path + ".beta", true);
    const Json& contained = member(certs[i], "contained_points", c_path);
    if (!contained.is_array())
      fail(c_path + ".contained_points", "expected an array");
    for (std::size_t p = 0; p < contained.size(); ++p)
      cert.contained_points.push_back(decode_point<2>(
          contained[p],
          c_path + ".contained_points[" + std::to_string(p) + "]"));
    cert.delta_cand =
        decode_hull(member(certs[i], "delta_cand", c_path), c_path + ".delta_cand");
    if (!(hull2(cert.contained_points) == cert.delta_cand))
      fail(c_path + ".delta_cand",
           "stored hull does not match the hull of contained_points");
    const Json& face = member(certs[i], "uncovered_face", c_path);
    if (!face.is_array() || face.size() != 2)
      fail(c_path + ".uncovered_face", "expected two points");
    cert.uncovered_face = {
        decode_point<2>(face[0], c_path + ".uncovered_face[0]"),
        decode_point<2>(face[1], c_path + ".uncovered_face[1]")};
    v.certificates.push_back(std::move(cert));
  }
  if (v.obstruction_found && v.certificates.empty())
    fail(path, "obstruction_found requires at least one certificate");
  if (!v.obstruction_found && !v.certificates.empty())
    fail(path, "certificates present but obstruction_found is false");
  return v;
}

inline std::vector<SweepRow> decode_sweep(const Json& j,
                                          const std::string& path) {
  reject_unknown(j, {"entries"}, path);
  const Json& entries = member(j, "entries", path);
  if (!entries.is_array()) fail(path + ".entries", "expected an array");
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string e_path = path + ".entries[" + std::to_string(i) + "]";
    reject_unknown(entries[i], {"n", "verdict"}, e_path);
    SweepRow row;
    row.n = int(decode_int(member(entries[i], "n", e_path), e_path + ".n"));
    row.verdict =
        decode_verdict(member(entries[i], "verdict", e_path), e_path + ".verdict");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jsondetail

inline Document decode(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError,
                std::string("malformed JSON: ") + e.what(), {{"path", "$"}});
  }
  const std::string root = "$";
  jsondetail::reject_unknown(j, {"kind", "meta", "payload"}, root);
  const Json& kind_j = jsondetail::member(j, "kind", root);
  if (!kind_j.is_string()) jsondetail::fail(root + ".kind", "expected a string");
  std::string kind = kind_j.get<std::string>();

  const Json& meta_j = jsondetail::member(j, "meta", root);
  jsondetail::reject_unknown(meta_j, {"tool", "provenance"}, root + ".meta");
  DocumentMeta meta;
  const Json& tool = jsondetail::member(meta_j, "tool", root + ".meta");
  const Json& prov = jsondetail::member(meta_j, "provenance", root + ".meta");
  if (!tool.is_string() || !prov.is_string())
    jsondetail::fail(root + ".meta", "tool and provenance must be strings");
  meta.tool = tool.get<std::string>();
  meta.provenance = prov.get<std::string>();

  const Json& payload = jsondetail::member(j, "payload", root);
  const std::string p = root + ".payload";
  Document doc;
  doc.meta = std::move(meta);
  if (kind == "polytope3") {
    doc.kind = DocumentKind::Polytope3;
    doc.payload = jsondetail::decode_polytope3(payload, p);
  } else if (kind == "chamber") {
    doc.kind = DocumentKind::Chamber;
    doc.payload = jsondetail::decode_chamber(payload, p);
  } else if (kind == "xray") {
    doc.kind = DocumentKind::XRay;
    doc.payload = jsondetail::decode_xray(payload, p);
  } else if (kind == "verdict") {
    doc.kind = DocumentKind::Verdict;
    doc.payload = jsondetail::decode_verdict(payload, p);
  } else if (kind == "sweep") {
    doc.kind = DocumentKind::Sweep;
    doc.payload = jsondetail::decode_sweep(payload, p);
  } else {
    jsondetail::fail(root + ".kind", "unknown document kind \"" + kind + "\"");
  }
  return doc;
}

}  // namespace txray
