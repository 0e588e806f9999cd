#pragma once

// JSON encoding of kernel values.  Rationals are strings "p/q" (or "p"),
// +∞ is the string "inf".  Integer JSON numbers are accepted on input.

#include "tropic/conic.hpp"
#include "tropic/cramer.hpp"
#include "tropic/curve.hpp"
#include "tropic/intersection.hpp"
#include "tropic/pappus.hpp"
#include "tropic/pencil.hpp"
#include "tropic/tp3.hpp"
#include "tropic/trees.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tropic::json {

using nlohmann::json;

inline json encode(const Rational& r) { return r.str(); }
inline json encode(const TropicalScalar& s) { return s.str(); }

inline json encode(const ProjectivePoint& p) {
  const auto n = p.normalized();
  return json::array({n[0].str(), n[1].str(), n[2].str()});
}

inline json encode_raw(const ProjectivePoint& p) { return json::array({p[0].str(), p[1].str(), p[2].str()}); }

inline json encode(const Vec2& v) { return json::array({v.x.str(), v.y.str()}); }

template <std::size_t N>
inline json encode(const std::array<TropicalScalar, N>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

inline json encode(const std::vector<TropicalScalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

inline json encode(const TropMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

inline Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw PreconditionError("expected a rational string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw PreconditionError("cannot parse rational " + j.dump());
  }
}

inline TropicalScalar decode_scalar(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return TropicalScalar::infinity();
  return decode_rational(j);
}

inline std::vector<TropicalScalar> decode_scalars(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array, got " + j.dump());
  std::vector<TropicalScalar> out;
  for (const auto& e : j) out.push_back(decode_scalar(e));
  return out;
}

inline Triple decode_triple(const json& j) {
  const auto v = decode_scalars(j);
  if (v.size() != 3) throw PreconditionError("expected three entries, got " + j.dump());
  return {v[0], v[1], v[2]};
}

inline ProjectivePoint decode_point(const json& j) {
  if (j.is_array() && j.size() == 2)
    return ProjectivePoint(decode_rational(j[0]), decode_rational(j[1]), Rational(0));
  if (!j.is_array() || j.size() != 3) throw PreconditionError("a point needs three coordinates: " + j.dump());
  return {decode_rational(j[0]), decode_rational(j[1]), decode_rational(j[2])};
}

inline std::vector<ProjectivePoint> decode_points(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of points");
  std::vector<ProjectivePoint> out;
  for (const auto& p : j) out.push_back(decode_point(p));
  return out;
}

inline TropMatrix decode_matrix(const json& j) {
  if (!j.is_array()) throw PreconditionError("a matrix is an array of rows");
  std::vector<std::vector<TropicalScalar>> rows;
  for (const auto& r : j) rows.push_back(decode_scalars(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw PreconditionError("matrix rows have different lengths");
  return TropMatrix::from_rows(rows);
}

/// {"degree": d, "terms": [{"i":.., "j":.., "k":.., "coeff": ".."}]}
inline TropicalPolynomial decode_polynomial(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw PreconditionError("a polynomial needs degree and terms");
  const int d = j.at("degree").get<int>();
  if (d < 1) throw PreconditionError("polynomial degree must be positive");
  TropicalPolynomial f(d);
  for (const auto& t : j.at("terms")) {
    const SupportPoint s{t.at("i").get<int>(), t.at("j").get<int>(), t.at("k").get<int>()};
    if (s.i < 0 || s.j < 0 || s.k < 0 || s.degree() != d)
      throw PreconditionError("term exponents must be non-negative and sum to the degree");
    f.set(s, decode_scalar(t.at("coeff")));
  }
  return f;
}

inline json encode(const TropicalPolynomial& f) {
  json terms = json::array();
  for (const auto& [s, c] : f.terms()) terms.push_back({{"i", s.i}, {"j", s.j}, {"k", s.k}, {"coeff", c.str()}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

inline json encode(const Direction& d) { return json::array({d.dx, d.dy}); }

inline json encode(const PlaneCurveGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(encode(v));
  json edges = json::array();
  for (const auto& e : g.bounded_edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity}});
  json rays = json::array();
  for (const auto& r : g.rays)
    rays.push_back({{"vertex", r.vertex},
                    {"base", encode(g.vertices[r.vertex])},
                    {"direction", encode(r.direction)},
                    {"multiplicity", r.multiplicity}});
  return {{"vertices", vertices}, {"bounded_edges", edges}, {"rays", rays}};
}

inline json encode(const DetCertificate& c) {
  return {{"value", c.value.str()}, {"singular", c.singular}, {"witnesses", c.witnesses}};
}

inline json encode(const LinkageTree& t) {
  json edges = json::array();
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    edges.push_back({{"label", i + 1}, {"nodes", json::array({t.edges[i].first, t.edges[i].second})}});
  return {{"nodes", t.nodes}, {"edges", edges}};
}

inline json encode(const StableSolution& s) {
  json minors = json::array();
  for (const auto& m : s.minors) minors.push_back(encode(m));
  json out{{"point", encode(s.coords)}, {"minors", minors}};
  out["linkage_tree"] = s.linkage_tree ? encode(*s.linkage_tree) : json(nullptr);
  return out;
}

inline json encode(const TP3Line& l) {
  auto pt = [](const PointTP3& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(c.str());
    return a;
  };
  return {{"case", to_string(l.case_tag)}, {"endpoint_1", pt(l.endpoint_1)}, {"endpoint_2", pt(l.endpoint_2)}};
}

inline PlueckerTP3 decode_pluecker_tp3(const json& j) {
  auto get = [&](const char* key) {
    if (!j.contains(key)) throw PreconditionError(std::string("missing Plücker coordinate ") + key);
    return decode_rational(j.at(key));
  };
  return {get("a12"), get("a13"), get("a14"), get("a23"), get("a24"), get("a34")};
}

inline json encode(const StableIntersection& s) {
  json pts = json::array();
  for (const auto& p : s.points) pts.push_back({{"point", encode(p.location)}, {"multiplicity", p.multiplicity}});
  return {{"points", pts}, {"total", s.total}, {"direction", encode(s.direction)}};
}

inline json encode_conic(const ConicCoeffs& a) {
  json out = json::object();
  for (std::size_t t = 0; t < 6; ++t) out[conic_term_names()[t]] = a[t].str();
  return out;
}

inline json encode(const ConicClass& c) {
  static const char* axes[] = {"none", "x", "y", "z"};
  static const char* subtypes[] = {"none", "negative", "positive"};
  return {{"tag", to_string(c.tag)},
          {"axis", axes[static_cast<int>(c.axis)]},
          {"subtype", subtypes[static_cast<int>(c.subtype)]}};
}

inline json encode_split(const LabeledTree& t, Split s) {
  json side = json::array(), rest = json::array();
  for (int x = 0; x < t.leaves(); ++x) ((s >> x) & 1u ? side : rest).push_back(t.labels()[x]);
  return json::array({rest, side});
}

inline json encode(const LabeledTree& t) {
  json splits = json::array();
  for (Split s : t.splits()) splits.push_back(encode_split(t, s));
  return {{"leaves", t.labels()},
          {"splits", splits},
          {"internal_degrees", t.internal_degrees()},
          {"shape", to_string(t.shape())}};
}

inline json encode(const DistinguishedConic& d) {
  static const char* kinds[] = {"line_pair", "vertex", "limit"};
  json out{{"kind", kinds[static_cast<int>(d.kind)]}, {"label", d.label}, {"coeffs", encode_conic(d.coeffs)}};
  if (d.point >= 0) out["point"] = d.point + 1;
  if (d.term >= 0) out["missing_term"] = conic_term_names()[d.term];
  return out;
}

inline json encode(const PencilResult& p) {
  json pl = json::array();
  for (const auto& e : p.pluecker)
    pl.push_back({{"pair", json::array({conic_term_names()[e.i], conic_term_names()[e.j]})},
                  {"value", e.minor.value.str()}});
  json quartets = json::array();
  for (const auto& q : p.quartets) {
    json leaves = json::array();
    for (int l : q.leaves) leaves.push_back(conic_term_names()[l]);
    quartets.push_back({{"leaves", leaves},
                        {"sums", json::array({q.sums[0].str(), q.sums[1].str(), q.sums[2].str()})},
                        {"pairing", q.pairing}});
  }
  json points = json::array();
  for (const auto& pt : p.points) points.push_back(encode(pt));
  auto list = [](const std::vector<DistinguishedConic>& v) {
    json a = json::array();
    for (const auto& d : v) a.push_back(encode(d));
    return a;
  };
  return {{"points", points},
          {"pluecker", pl},
          {"quartets", quartets},
          {"tree", encode(p.tree)},
          {"shape", to_string(p.shape)},
          {"distinguished_conics",
           {{"line_pairs", list(p.line_pairs)}, {"vertex", list(p.vertex_conics)}, {"limit", list(p.limit_conics)}}}};
}

inline json encode(const PappusTrace& t) {
  json input = json::array();
  for (const auto& p : t.input) input.push_back(encode(p));
  json derived = json::object();
  for (int k = 0; k < 3; ++k) derived[std::to_string(k + 6)] = encode(t.derived[k]);
  json lines = json::object();
  for (int k = 0; k < 9; ++k) lines[pappus_line_names()[k]] = encode(t.lines[k]);
  json out{{"input", input},
           {"derived", derived},
           {"lines", lines},
           {"conclusion_matrix", encode(t.conclusion_matrix)},
           {"singular", t.singular},
           {"concurrent", t.concurrent}};
  out["witness"] = t.witness ? encode(*t.witness) : json(nullptr);
  return out;
}

}  // namespace tropic::json
