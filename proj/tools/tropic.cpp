// Command-line front end: JSON in, JSON (and optionally SVG) out.

#include "tropic/service.hpp"
#include "tropic/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace tropic;
using Json = nlohmann::json;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(path + ": malformed JSON: " + e.what());
  }
}

/// Accepts either the bare value or an object wrapping it under `key`.
Json unwrap(const Json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const Json& j, const std::string& path = {}) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_text(path, j.dump(2) + "\n");
  }
}

ProjectivePoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 4), num(-40, 40);
  auto coord = [&] {
    const long q = den(rng);
    return Rational(num(rng), q);
  };
  return {coord(), coord(), Rational(0)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical plane geometry"};
  app.require_subcommand(1);

  std::string matrix_path, pluecker_path, poly_path, svg_path, json_path, a_path, b_path, points_path, scene_path,
      viewport_text, svg_dir, host = "127.0.0.1";
  int trials = 0, leaves = 0, port = 8080;
  std::uint64_t seed = 1;
  bool realizable = false;

  auto* det = app.add_subcommand("det", "tropical determinant with optimal permutations");
  det->add_option("--matrix", matrix_path, "square matrix JSON")->required();
  auto* solve = app.add_subcommand("solve", "stable solution of an (n-1) x n system");
  solve->add_option("--matrix", matrix_path, "(n-1) x n matrix JSON")->required();
  auto* tp3 = app.add_subcommand("tp3line", "line segment in TP^3 from Pluecker coordinates");
  tp3->add_option("--pluecker", pluecker_path, "JSON object with a12..a34")->required();
  auto* curve = app.add_subcommand("curve", "plane curve graph of a polynomial");
  curve->add_option("--poly", poly_path, "polynomial JSON")->required();
  curve->add_option("--svg", svg_path, "SVG output");
  curve->add_option("--json", json_path, "graph JSON output (default stdout)");
  auto* inter = app.add_subcommand("intersect", "stable intersection of two curves");
  inter->add_option("--a", a_path, "first polynomial JSON")->required();
  inter->add_option("--b", b_path, "second polynomial JSON")->required();
  inter->add_option("--svg", svg_path, "SVG overlay output");
  auto* conic5 = app.add_subcommand("conic5", "conic through five points");
  conic5->add_option("--points", points_path, "five points JSON")->required();
  auto* pencil4 = app.add_subcommand("pencil4", "pencil of conics through four points");
  pencil4->add_option("--points", points_path, "four points JSON")->required();
  pencil4->add_option("--svg", svg_dir, "directory for one SVG per distinguished conic and the tree");
  auto* pappus = app.add_subcommand("pappus", "constructive Pappus configuration");
  pappus->add_option("--points", points_path, "five points JSON");
  pappus->add_option("--trials", trials, "random instances to test instead of --points");
  pappus->add_option("--seed", seed, "seed for --trials");
  auto* trees = app.add_subcommand("trees", "labelled trivalent trees");
  trees->add_option("--leaves", leaves, "number of leaves (3..10)")->required();
  trees->add_flag("--realizable", realizable, "only trees realized by conic pencils (6 leaves)");
  auto* serve = app.add_subcommand("serve", "HTTP scene service");
  serve->add_option("--port", port, "port to listen on");
  serve->add_option("--host", host, "address to bind");
  auto* render = app.add_subcommand("render", "evaluate a scene and export SVG");
  render->add_option("--scene", scene_path, "scene JSON")->required();
  render->add_option("--svg", svg_path, "SVG output")->required();
  render->add_option("--viewport", viewport_text, "x0,y0,x1,y1 (default: fit with margin)");
  render->add_option("--json", json_path, "evaluated scene JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*det) {
      emit(json::encode(trop_det(json::decode_matrix(unwrap(read_json(matrix_path), "matrix")))));
    } else if (*solve) {
      emit(json::encode(cramer_solve(json::decode_matrix(unwrap(read_json(matrix_path), "matrix")))));
    } else if (*tp3) {
      emit(json::encode(tp3_line(json::decode_pluecker_tp3(read_json(pluecker_path)))));
    } else if (*curve) {
      const auto f = json::decode_polynomial(read_json(poly_path));
      EvaluatedScene es;
      SceneElement e;
      e.kind = SceneElement::Kind::curve;
      e.name = "f";
      e.poly = f;
      e.graph = build_curve(f);
      es.elements.push_back(e);
      if (!svg_path.empty()) write_text(svg_path, export_svg(es));
      Json out = json::encode(*e.graph);
      out["balanced"] = check_balancing(*e.graph).balanced;
      emit(out, json_path);
    } else if (*inter) {
      Scene s;
      s.steps.push_back({"a", "curve", {}, json::decode_polynomial(read_json(a_path))});
      s.steps.push_back({"b", "curve", {}, json::decode_polynomial(read_json(b_path))});
      s.steps.push_back({"a*b", "intersect", {"a", "b"}, std::nullopt});
      const auto es = evaluate_scene(s);
      const auto& d = es.diagnostics.back();
      if (d.status != "ok") throw PreconditionError(d.message);
      if (!svg_path.empty()) write_text(svg_path, export_svg(es));
      Json out = json::encode(*es.find("a*b")->intersection);
      out["flags"] = d.flags;
      emit(out);
    } else if (*conic5) {
      const auto pts = json::decode_points(unwrap(read_json(points_path), "points"));
      const auto sol = conic_through_five_solution(pts);
      const auto c = conic_through_five(pts);
      emit({{"coeffs", json::encode_conic(c)},
            {"minors", json::encode(sol)["minors"]},
            {"proper", is_proper_conic(c)},
            {"class", json::encode(classify_conic(c))}});
    } else if (*pencil4) {
      const auto p = pencil_through_four(json::decode_points(unwrap(read_json(points_path), "points")));
      if (!svg_dir.empty()) {
        std::filesystem::create_directories(svg_dir);
        for (const auto& [name, svg] : export_pencil_svgs(p)) write_text((std::filesystem::path(svg_dir) / name).string(), svg);
      }
      emit(json::encode(p));
    } else if (*pappus) {
      if (trials > 0) {
        std::mt19937_64 rng(seed);
        Json counterexamples = Json::array();
        for (int t = 0; t < trials; ++t) {
          std::array<ProjectivePoint, 5> pts;
          for (auto& p : pts) p = random_point(rng);
          const auto trace = pappus_construct(pts);
          if (!trace.singular) counterexamples.push_back(json::encode(trace));
        }
        emit({{"trials", trials}, {"seed", seed}, {"singular", trials - static_cast<int>(counterexamples.size())},
              {"counterexamples", counterexamples}});
        return counterexamples.empty() ? 0 : 3;
      }
      if (points_path.empty()) throw PreconditionError("pappus needs --points or --trials");
      const auto pts = json::decode_points(unwrap(read_json(points_path), "points"));
      if (pts.size() != 5) throw PreconditionError("pappus needs exactly five points");
      emit(json::encode(pappus_construct({pts[0], pts[1], pts[2], pts[3], pts[4]})));
    } else if (*trees) {
      if (realizable && leaves != 6) throw PreconditionError("--realizable applies to 6 leaves");
      std::vector<LabeledTree> all;
      if (leaves == 6) {
        all = enumerate_trees(6, {conic_term_names().begin(), conic_term_names().end()});
      } else {
        all = enumerate_trees(leaves);
      }
      Json list = Json::array();
      for (const auto& t : all) {
        if (realizable && !is_planar_realizable(t)) continue;
        list.push_back(json::encode(t));
      }
      emit({{"leaves", leaves}, {"count", list.size()}, {"trees", list}});
    } else if (*serve) {
      httplib::Server server;
      const auto level = log_level_from_env();
      install_routes(server, level);
      if (level != LogLevel::quiet) std::cerr << "listening on " << host << ":" << port << "\n";
      if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
    } else if (*render) {
      const auto es = evaluate_scene(parse_scene(read_json(scene_path)));
      write_text(svg_path, viewport_text.empty() ? export_svg(es) : export_svg(es, parse_viewport(viewport_text)));
      if (!json_path.empty()) emit(encode(es), json_path);
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
