#pragma once

// Dynamic-geometry scenes: free points plus an ordered list of named
// construction steps, evaluated in order into drawable elements.

#include "tropic/json_io.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropic {

struct SceneStep {
  std::string name;
  std::string op;  // join, meet, conic5, pencil4, intersect, curve
  std::vector<std::string> args;
  std::optional<TropicalPolynomial> poly;  // curve steps
};

/// A predicate evaluated after all steps: singular and concurrent take three
/// lines, on_curve a point and a line or curve.
struct SceneCheck {
  std::string kind;
  std::vector<std::string> args;
};

struct Scene {
  std::vector<std::pair<std::string, ProjectivePoint>> free_points;
  std::vector<SceneStep> steps;
  std::vector<SceneCheck> checks;
};

struct SceneElement {
  enum class Kind { point, line, curve, intersection, pencil } kind = Kind::point;
  std::string name;
  std::optional<ProjectivePoint> point;
  std::optional<LineCoeffs> line;
  std::optional<TropicalPolynomial> poly;  // lines and curves
  std::optional<PlaneCurveGraph> graph;    // lines and curves
  std::optional<ConicCoeffs> conic;        // conic5 outputs
  std::optional<StableIntersection> intersection;
  std::optional<PencilResult> pencil;
};

inline std::string to_string(SceneElement::Kind k) {
  switch (k) {
    case SceneElement::Kind::point: return "point";
    case SceneElement::Kind::line: return "line";
    case SceneElement::Kind::curve: return "curve";
    case SceneElement::Kind::intersection: return "intersection";
    case SceneElement::Kind::pencil: return "pencil";
  }
  return "?";
}

struct StepDiagnostic {
  std::string step;
  std::string op;
  std::string status = "ok";  // ok, error, unevaluated
  std::vector<std::string> flags;
  std::string message;
};

struct CheckResult {
  SceneCheck check;
  std::string status = "ok";  // ok, error
  bool value = false;
  std::string message;
  std::optional<ProjectivePoint> witness;
};

struct EvaluatedScene {
  std::vector<SceneElement> elements;  // free points first, then steps in order
  std::vector<StepDiagnostic> diagnostics;
  std::vector<CheckResult> checks;

  [[nodiscard]] const SceneElement* find(const std::string& name) const {
    for (const auto& e : elements)
      if (e.name == name) return &e;
    return nullptr;
  }
};

namespace detail {

inline std::vector<std::string> string_list(const json::json& j, const char* what) {
  if (!j.is_array()) throw PreconditionError(std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw PreconditionError(std::string(what) + " must be an array of names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// {"free_points": [{"name", "coords"}], "steps": [{"name", "op", "args"|"poly"}],
///  "checks": [{"kind", "args"}]}
inline Scene parse_scene(const json::json& j) {
  if (!j.is_object()) throw PreconditionError("scene must be a JSON object");
  Scene s;
  if (j.contains("free_points"))
    for (const auto& p : j.at("free_points")) {
      if (!p.contains("name") || !p.contains("coords")) throw PreconditionError("free point needs name and coords");
      s.free_points.emplace_back(p.at("name").get<std::string>(), json::decode_point(p.at("coords")));
    }
  if (j.contains("steps"))
    for (const auto& st : j.at("steps")) {
      if (!st.contains("name") || !st.contains("op")) throw PreconditionError("step needs name and op");
      SceneStep step{st.at("name").get<std::string>(), st.at("op").get<std::string>(), {}, std::nullopt};
      if (st.contains("args")) step.args = detail::string_list(st.at("args"), "step args");
      if (st.contains("poly")) step.poly = json::decode_polynomial(st.at("poly"));
      s.steps.push_back(std::move(step));
    }
  if (j.contains("checks"))
    for (const auto& c : j.at("checks")) {
      if (!c.contains("kind")) throw PreconditionError("check needs a kind");
      s.checks.push_back({c.at("kind").get<std::string>(),
                          c.contains("args") ? detail::string_list(c.at("args"), "check args")
                                             : std::vector<std::string>{}});
    }
  return s;
}

inline json::json encode(const Scene& s) {
  json::json pts = json::json::array();
  for (const auto& [name, p] : s.free_points) pts.push_back({{"name", name}, {"coords", json::encode_raw(p)}});
  json::json steps = json::json::array();
  for (const auto& st : s.steps) {
    json::json e{{"name", st.name}, {"op", st.op}};
    if (!st.args.empty()) e["args"] = st.args;
    if (st.poly) e["poly"] = json::encode(*st.poly);
    steps.push_back(e);
  }
  json::json checks = json::json::array();
  for (const auto& c : s.checks) checks.push_back({{"kind", c.kind}, {"args", c.args}});
  return {{"free_points", pts}, {"steps", steps}, {"checks", checks}};
}

namespace detail {

struct StepFailure {
  std::string status;
  std::string message;
};

class SceneEvaluator {
public:
  explicit SceneEvaluator(EvaluatedScene& out) : out_(out) {}

  void add(SceneElement e) {
    index_[e.name] = out_.elements.size();
    out_.elements.push_back(std::move(e));
  }

  void mark_failed(const std::string& name) { failed_.insert(name); }
  [[nodiscard]] bool defined(const std::string& name) const { return index_.count(name) || failed_.count(name); }

  const SceneElement& get(const std::string& name) const {
    if (failed_.count(name)) throw StepFailure{"unevaluated", "depends on '" + name + "', which did not evaluate"};
    auto it = index_.find(name);
    if (it == index_.end()) throw StepFailure{"error", "unknown reference '" + name + "'"};
    return out_.elements[it->second];
  }

  const ProjectivePoint& point(const std::string& name, const std::string& op) const {
    const auto& e = get(name);
    if (e.kind != SceneElement::Kind::point)
      throw StepFailure{"error", op + " expects a point; '" + name + "' is a " + to_string(e.kind)};
    return *e.point;
  }

  const LineCoeffs& line(const std::string& name, const std::string& op) const {
    const auto& e = get(name);
    if (e.kind != SceneElement::Kind::line)
      throw StepFailure{"error", op + " expects a line; '" + name + "' is a " + to_string(e.kind)};
    return *e.line;
  }

  const TropicalPolynomial& curve(const std::string& name, const std::string& op) const {
    const auto& e = get(name);
    if (!e.poly) throw StepFailure{"error", op + " expects a line or curve; '" + name + "' is a " + to_string(e.kind)};
    return *e.poly;
  }

private:
  EvaluatedScene& out_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> failed_;
};

inline void require_arity(const SceneStep& s, std::size_t n) {
  if (s.args.size() != n)
    throw StepFailure{"error", s.op + " takes " + std::to_string(n) + " arguments, got " +
                                   std::to_string(s.args.size())};
}

inline SceneElement line_element(const std::string& name, const LineCoeffs& l) {
  SceneElement e;
  e.kind = SceneElement::Kind::line;
  e.name = name;
  e.line = l;
  e.poly = line_polynomial(l);
  e.graph = build_curve(*e.poly);
  return e;
}

inline SceneElement evaluate_step(const SceneEvaluator& ev, const SceneStep& s, StepDiagnostic& diag) {
  SceneElement e;
  e.name = s.name;
  if (s.op == "join") {
    require_arity(s, 2);
    const auto& p = ev.point(s.args[0], s.op);
    const auto& q = ev.point(s.args[1], s.op);
    if (p == q) diag.flags.push_back("coincident_inputs");
    return line_element(s.name, stable_join(p, q));
  }
  if (s.op == "meet") {
    require_arity(s, 2);
    const auto& l = ev.line(s.args[0], s.op);
    const auto& m = ev.line(s.args[1], s.op);
    if (projectively_equal({l.begin(), l.end()}, {m.begin(), m.end()})) diag.flags.push_back("coincident_inputs");
    e.kind = SceneElement::Kind::point;
    e.point = stable_meet(l, m);
    return e;
  }
  if (s.op == "conic5") {
    require_arity(s, 5);
    std::vector<ProjectivePoint> pts;
    for (const auto& a : s.args) pts.push_back(ev.point(a, s.op));
    const auto sol = conic_through_five_solution(pts);
    ConicCoeffs c;
    bool generic = true;
    for (std::size_t t = 0; t < 6; ++t) {
      c[t] = sol.coords[t];
      generic = generic && !sol.minors[t].singular;
    }
    if (!generic) diag.flags.push_back("non_generic_minors");
    diag.flags.push_back(is_proper_conic(c) ? "proper" : "improper");
    diag.flags.push_back("class:" + to_string(classify_conic(c).tag));
    e.kind = SceneElement::Kind::curve;
    e.conic = c;
    e.poly = conic_polynomial(c);
    e.graph = build_curve(*e.poly);
    return e;
  }
  if (s.op == "pencil4") {
    require_arity(s, 4);
    std::vector<ProjectivePoint> pts;
    for (const auto& a : s.args) pts.push_back(ev.point(a, s.op));
    try {
      e.pencil = pencil_through_four(pts);
    } catch (const PreconditionError& err) {
      diag.flags.push_back("genericity_failure");
      throw StepFailure{"error", err.what()};
    }
    diag.flags.push_back("shape:" + to_string(e.pencil->shape));
    e.kind = SceneElement::Kind::pencil;
    return e;
  }
  if (s.op == "intersect") {
    require_arity(s, 2);
    const auto& f = ev.curve(s.args[0], s.op);
    const auto& g = ev.curve(s.args[1], s.op);
    const auto fc = build_curve(f), gc = build_curve(g);
    const auto direct = transversal_intersect(fc, gc);
    e.intersection = stable_intersect(fc, gc);
    if (!direct.transversal) {
      diag.flags.push_back("stability_applied");
      diag.flags.push_back("perturbation:" + std::to_string(e.intersection->direction.dx) + "," +
                           std::to_string(e.intersection->direction.dy));
    }
    e.kind = SceneElement::Kind::intersection;
    return e;
  }
  if (s.op == "curve") {
    if (!s.poly) throw StepFailure{"error", "curve step needs a poly"};
    if (!s.args.empty()) throw StepFailure{"error", "curve takes no arguments"};
    e.kind = SceneElement::Kind::curve;
    e.poly = *s.poly;
    e.graph = build_curve(*e.poly);
    return e;
  }
  throw StepFailure{"error", "unknown op '" + s.op + "'"};
}

inline CheckResult evaluate_check(const SceneEvaluator& ev, const SceneCheck& c) {
  CheckResult r;
  r.check = c;
  try {
    if (c.kind == "singular" || c.kind == "concurrent") {
      if (c.args.size() != 3) throw StepFailure{"error", c.kind + " takes three lines"};
      const auto& a = ev.line(c.args[0], c.kind);
      const auto& b = ev.line(c.args[1], c.kind);
      const auto& d = ev.line(c.args[2], c.kind);
      if (c.kind == "singular") {
        r.value = is_tropically_singular(
            TropMatrix::from_rows({{a.begin(), a.end()}, {b.begin(), b.end()}, {d.begin(), d.end()}}));
      } else {
        const auto res = lines_concurrent(a, b, d);
        r.value = res.concurrent;
        r.witness = res.witness;
      }
    } else if (c.kind == "on_curve") {
      if (c.args.size() != 2) throw StepFailure{"error", "on_curve takes a point and a curve"};
      r.value = point_on_curve(ev.curve(c.args[1], c.kind), ev.point(c.args[0], c.kind));
    } else {
      throw StepFailure{"error", "unknown check '" + c.kind + "'"};
    }
  } catch (const StepFailure& f) {
    r.status = "error";
    r.message = f.message;
  }
  return r;
}

}  // namespace detail

/// Steps run in order; a failing step is reported and its dependents are
/// marked unevaluated, while every other step still runs.
inline EvaluatedScene evaluate_scene(const Scene& s) {
  EvaluatedScene out;
  detail::SceneEvaluator ev(out);
  for (const auto& [name, p] : s.free_points) {
    SceneElement e;
    e.name = name;
    e.point = p;
    ev.add(std::move(e));
  }
  for (const auto& step : s.steps) {
    StepDiagnostic diag;
    diag.step = step.name;
    diag.op = step.op;
    try {
      if (ev.defined(step.name)) throw detail::StepFailure{"error", "name '" + step.name + "' is already defined"};
      ev.add(detail::evaluate_step(ev, step, diag));
    } catch (const detail::StepFailure& f) {
      diag.status = f.status;
      diag.message = f.message;
    } catch (const PreconditionError& err) {
      diag.status = "error";
      diag.message = err.what();
    }
    if (diag.status != "ok" && !ev.defined(step.name)) ev.mark_failed(step.name);
    out.diagnostics.push_back(std::move(diag));
  }
  for (const auto& c : s.checks) out.checks.push_back(detail::evaluate_check(ev, c));
  return out;
}

inline json::json encode(const SceneElement& e) {
  json::json out{{"name", e.name}, {"kind", to_string(e.kind)}};
  if (e.point) out["point"] = json::encode(*e.point);
  if (e.line) out["coeffs"] = json::encode(*e.line);
  if (e.poly && e.kind == SceneElement::Kind::curve) out["polynomial"] = json::encode(*e.poly);
  if (e.graph) out["graph"] = json::encode(*e.graph);
  if (e.conic) {
    out["conic"] = {{"coeffs", json::encode_conic(*e.conic)},
                    {"class", json::encode(classify_conic(*e.conic))},
                    {"proper", is_proper_conic(*e.conic)}};
  }
  if (e.intersection) out["intersection"] = json::encode(*e.intersection);
  if (e.pencil) out["pencil"] = json::encode(*e.pencil);
  return out;
}

inline json::json encode(const EvaluatedScene& es) {
  json::json elements = json::json::array();
  for (const auto& e : es.elements) elements.push_back(encode(e));
  json::json steps = json::json::array();
  for (const auto& d : es.diagnostics) {
    json::json j{{"step", d.step}, {"op", d.op}, {"status", d.status}, {"flags", d.flags}};
    if (!d.message.empty()) j["message"] = d.message;
    steps.push_back(j);
  }
  json::json checks = json::json::array();
  for (const auto& c : es.checks) {
    json::json j{{"kind", c.check.kind}, {"args", c.check.args}, {"status", c.status}, {"value", c.value}};
    if (!c.message.empty()) j["message"] = c.message;
    if (c.witness) j["witness"] = json::encode(*c.witness);
    checks.push_back(j);
  }
  return {{"elements", elements}, {"diagnostics", {{"steps", steps}, {"checks", checks}}}};
}

/// The five-point Pappus construction as a scene, with the conclusion
/// checked both ways.
inline Scene pappus_scene(const std::array<ProjectivePoint, 5>& p) {
  Scene s;
  for (int k = 0; k < 5; ++k) s.free_points.emplace_back(std::to_string(k + 1), p[k]);
  auto add = [&](const char* name, const char* op, std::string a, std::string b) {
    s.steps.push_back({name, op, {std::move(a), std::move(b)}, std::nullopt});
  };
  add("a", "join", "1", "4");
  add("b", "join", "2", "4");
  add("c", "join", "3", "4");
  add("a'", "join", "1", "5");
  add("b'", "join", "2", "5");
  add("c'", "join", "3", "5");
  add("6", "meet", "b", "c'");
  add("7", "meet", "a'", "c");
  add("8", "meet", "a", "b'");
  add("a''", "join", "1", "6");
  add("b''", "join", "2", "7");
  add("c''", "join", "3", "8");
  s.checks.push_back({"singular", {"a''", "b''", "c''"}});
  s.checks.push_back({"concurrent", {"a''", "b''", "c''"}});
  return s;
}

}  // namespace tropic
