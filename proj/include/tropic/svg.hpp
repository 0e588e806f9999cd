#pragma once

// Deterministic SVG export.  Geometry stays exact until the final pixel
// coordinates, which are printed with two decimals.  Screen y points down.

#include "tropic/scene.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tropic {

struct Viewport {
  Rational x0, y0, x1, y1;
};

inline Viewport parse_viewport(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(Rational::parse(part));
  if (v.size() != 4) throw PreconditionError("viewport must be x0,y0,x1,y1");
  return {v[0], v[1], v[2], v[3]};
}

/// Bounding box of the given points with a 20% margin on each side.
inline Viewport viewport_around(const std::vector<Vec2>& pts) {
  if (pts.empty()) return {Rational(-1), Rational(-1), Rational(1), Rational(1)};
  Viewport v{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    v.x0 = min(v.x0, p.x);
    v.y0 = min(v.y0, p.y);
    v.x1 = max(v.x1, p.x);
    v.y1 = max(v.y1, p.y);
  }
  Rational w = v.x1 - v.x0, h = v.y1 - v.y0;
  if (w.sign() == 0) w = max(h, Rational(1));
  if (h.sign() == 0) h = max(w, Rational(1));
  const Rational mx = w / 5, my = h / 5;
  return {v.x0 - mx, v.y0 - my, v.x1 + mx, v.y1 + my};
}

inline std::vector<Vec2> anchor_points(const PlaneCurveGraph& g) {
  std::vector<Vec2> out;
  for (const auto& v : g.vertices) out.push_back(v.chart());
  return out;
}

inline Viewport default_viewport(const EvaluatedScene& es) {
  std::vector<Vec2> pts;
  for (const auto& e : es.elements) {
    if (e.point) pts.push_back(e.point->chart());
    if (e.graph)
      for (const auto& v : anchor_points(*e.graph)) pts.push_back(v);
    if (e.intersection)
      for (const auto& p : e.intersection->points) pts.push_back(p.location.chart());
  }
  return viewport_around(pts);
}

namespace detail {

/// Parameter interval of base + t·dir inside the box, t in [0, t_max]
/// (t_max absent for rays).
inline std::optional<std::pair<Rational, Rational>> clip(const Viewport& vp, const Vec2& base, const Vec2& dir,
                                                          std::optional<Rational> t_max) {
  Rational lo(0);
  std::optional<Rational> hi = t_max;
  auto bound = [&](const Rational& p, const Rational& d, const Rational& low, const Rational& high) {
    if (d.sign() == 0) return p >= low && p <= high;
    Rational a = (low - p) / d, b = (high - p) / d;
    if (a > b) std::swap(a, b);
    lo = max(lo, a);
    hi = hi ? min(*hi, b) : b;
    return true;
  };
  if (!bound(base.x, dir.x, vp.x0, vp.x1) || !bound(base.y, dir.y, vp.y0, vp.y1)) return std::nullopt;
  if (!hi || lo > *hi) return std::nullopt;
  return std::make_pair(lo, *hi);
}

class SvgWriter {
public:
  explicit SvgWriter(const Viewport& vp) : vp_(vp) {
    if (!(vp.x1 > vp.x0) || !(vp.y1 > vp.y0)) throw PreconditionError("export_svg: degenerate viewport");
    width_ = 640.0;
    height_ = std::round(width_ * ((vp.y1 - vp.y0) / (vp.x1 - vp.x0)).to_double());
    if (height_ < 1) height_ = 1;
  }

  [[nodiscard]] std::pair<double, double> screen(const Vec2& p) const {
    const double x = ((p.x - vp_.x0) / (vp_.x1 - vp_.x0)).to_double() * width_;
    const double y = ((vp_.y1 - p.y) / (vp_.y1 - vp_.y0)).to_double() * height_;
    return {x, y};
  }

  [[nodiscard]] bool inside(const Vec2& p) const {
    return p.x >= vp_.x0 && p.x <= vp_.x1 && p.y >= vp_.y0 && p.y <= vp_.y1;
  }

  void segment(const Vec2& a, const Vec2& b, std::int64_t multiplicity, const std::string& cls,
               const std::string& color, double stroke) {
    const auto c = clip(vp_, a, b - a, Rational(1));
    if (!c) return;
    emit(a + c->first * (b - a), a + c->second * (b - a), multiplicity, cls, color, stroke);
  }

  void ray(const Vec2& base, const Vec2& dir, std::int64_t multiplicity, const std::string& cls,
           const std::string& color, double stroke) {
    const auto c = clip(vp_, base, dir, std::nullopt);
    if (!c) return;
    emit(base + c->first * dir, base + c->second * dir, multiplicity, cls, color, stroke);
  }

  void dot(const Vec2& p, double r, const std::string& cls, const std::string& color) {
    if (!inside(p)) return;
    const auto [x, y] = screen(p);
    body_ << "<circle class=\"" << cls << "\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r)
          << "\" fill=\"" << color << "\"/>\n";
  }

  void label(const Vec2& p, const std::string& text, const std::string& color) {
    if (!inside(p)) return;
    const auto [x, y] = screen(p);
    body_ << "<text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5) << "\" fill=\"" << color
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(text) << "</text>\n";
  }

  void comment(const std::string& text) { body_ << "<!-- " << escape(text) << " -->\n"; }

  void curve(const PlaneCurveGraph& g, const std::string& color, double stroke) {
    for (const auto& e : g.bounded_edges)
      segment(g.vertices[e.from].chart(), g.vertices[e.to].chart(), e.multiplicity, "edge", color, stroke);
    for (const auto& r : g.rays) ray(g.vertices[r.vertex].chart(), r.direction.vec(), r.multiplicity, "ray", color, stroke);
    for (const auto& v : g.vertices) dot(v.chart(), 2.5, "vertex", color);
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_) << "\" height=\"" << fmt(height_)
        << "\" viewBox=\"0 0 " << fmt(width_) << " " << fmt(height_) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
    return buf;
  }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else if (c == '&') out += "&amp;";
      else if (c == '"') out += "&quot;";
      else if (c == '-') out += "&#45;";  // keeps "--" out of comments
      else out += c;
    }
    return out;
  }

private:
  void emit(const Vec2& a, const Vec2& b, std::int64_t multiplicity, const std::string& cls, const std::string& color,
            double stroke) {
    auto [ax, ay] = screen(a);
    auto [bx, by] = screen(b);
    // Multiplicity m is drawn as m parallel strokes.
    double nx = -(by - ay), ny = bx - ax;
    const double len = std::hypot(nx, ny);
    if (len > 0) {
      nx /= len;
      ny /= len;
    }
    for (std::int64_t k = 0; k < multiplicity; ++k) {
      const double off = (static_cast<double>(k) - static_cast<double>(multiplicity - 1) / 2.0) * 3.0;
      body_ << "<line class=\"" << cls << "\" x1=\"" << fmt(ax + off * nx) << "\" y1=\"" << fmt(ay + off * ny)
            << "\" x2=\"" << fmt(bx + off * nx) << "\" y2=\"" << fmt(by + off * ny) << "\" stroke=\"" << color
            << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
    }
  }

  Viewport vp_;
  double width_ = 0;
  double height_ = 0;
  std::ostringstream body_;
};

inline const std::string& palette(std::size_t i) {
  static const std::vector<std::string> colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                               "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return colors[i % colors.size()];
}

}  // namespace detail

/// Lines and curves as clipped edges and rays with their vertices, points
/// as labelled dots.  Lines named by a scene check are drawn bold.
inline std::string export_svg(const EvaluatedScene& es, const Viewport& vp) {
  detail::SvgWriter w(vp);
  std::set<std::string> bold;
  for (const auto& c : es.checks)
    for (const auto& a : c.check.args) bold.insert(a);
  std::size_t colour = 0;
  for (const auto& e : es.elements) {
    if (!e.graph) continue;
    w.comment(to_string(e.kind) + " " + e.name);
    w.curve(*e.graph, detail::palette(colour++), bold.count(e.name) ? 3.0 : 1.5);
  }
  for (const auto& e : es.elements) {
    if (e.intersection) {
      w.comment("intersection " + e.name);
      for (const auto& p : e.intersection->points) {
        w.dot(p.location.chart(), 4, "intersection", "black");
        if (p.multiplicity > 1) w.label(p.location.chart(), std::to_string(p.multiplicity), "black");
      }
    }
    if (e.point) {
      w.dot(e.point->chart(), 3.5, "point", "black");
      w.label(e.point->chart(), e.name, "black");
    }
  }
  return w.str();
}

inline std::string export_svg(const EvaluatedScene& es) { return export_svg(es, default_viewport(es)); }

/// Leaves evenly spaced on a circle in label order; internal vertices at the
/// barycentre of their neighbours (iterated to a fixed step count).
inline std::string export_tree_svg(const LabeledTree& t) {
  const auto& adj = t.graph().adj;
  const std::size_t n = adj.size();
  const int leaves = t.leaves();
  const double pi = std::acos(-1.0);
  std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
  for (int i = 0; i < leaves; ++i)
    pos[i] = {std::cos(pi / 2 - 2 * pi * i / leaves), std::sin(pi / 2 - 2 * pi * i / leaves)};
  for (int round = 0; round < 400; ++round)
    for (std::size_t v = leaves; v < n; ++v) {
      double x = 0, y = 0;
      for (int u : adj[v]) {
        x += pos[u].first;
        y += pos[u].second;
      }
      pos[v] = {x / static_cast<double>(adj[v].size()), y / static_cast<double>(adj[v].size())};
    }
  auto sx = [](double x) { return 160.0 + 120.0 * x; };
  auto sy = [](double y) { return 160.0 - 120.0 * y; };
  using detail::SvgWriter;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"320.00\" height=\"320.00\" viewBox=\"0 0 320 320\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t v = 0; v < n; ++v)
    for (int u : adj[v]) {
      if (static_cast<std::size_t>(u) < v) continue;
      out << "<line class=\"tree-edge\" x1=\"" << SvgWriter::fmt(sx(pos[v].first)) << "\" y1=\""
          << SvgWriter::fmt(sy(pos[v].second)) << "\" x2=\"" << SvgWriter::fmt(sx(pos[u].first)) << "\" y2=\""
          << SvgWriter::fmt(sy(pos[u].second)) << "\" stroke=\"black\" stroke-width=\"1.50\"/>\n";
    }
  for (std::size_t v = 0; v < n; ++v) {
    const bool leaf = static_cast<int>(v) < leaves;
    out << "<circle class=\"" << (leaf ? "leaf" : "node") << "\" cx=\"" << SvgWriter::fmt(sx(pos[v].first))
        << "\" cy=\"" << SvgWriter::fmt(sy(pos[v].second)) << "\" r=\"" << (leaf ? "4.00" : "3.00")
        << "\" fill=\"black\"/>\n";
    if (leaf)
      out << "<text x=\"" << SvgWriter::fmt(sx(1.18 * pos[v].first) - 8) << "\" y=\""
          << SvgWriter::fmt(sy(1.18 * pos[v].second) + 4)
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << SvgWriter::escape(t.labels()[v]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

/// One SVG per distinguished conic, drawn with the four points in a common
/// viewport, plus the tree diagram.  Returned as (file name, document).
inline std::vector<std::pair<std::string, std::string>> export_pencil_svgs(const PencilResult& p) {
  struct Item {
    std::string file;
    const DistinguishedConic* conic;
    PlaneCurveGraph graph;
  };
  std::vector<Item> items;
  auto file_label = [](std::string s) {
    std::string out;
    for (char c : s)
      if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    return out;
  };
  for (const auto& d : p.line_pairs) items.push_back({"line_pair_" + file_label(d.label) + ".svg", &d, {}});
  for (std::size_t k = 0; k < p.vertex_conics.size(); ++k)
    items.push_back({"vertex_" + std::to_string(p.vertex_conics[k].point + 1) + "_" + std::to_string(k) + ".svg",
                     &p.vertex_conics[k], {}});
  for (const auto& d : p.limit_conics)
    items.push_back({"limit_" + file_label(conic_term_names()[d.term]) + ".svg", &d, {}});

  std::vector<Vec2> anchors;
  for (const auto& pt : p.points) anchors.push_back(pt.chart());
  for (auto& it : items) {
    it.graph = build_curve(conic_polynomial(it.conic->coeffs));
    for (const auto& v : anchor_points(it.graph)) anchors.push_back(v);
  }
  const Viewport vp = viewport_around(anchors);

  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& it : items) {
    detail::SvgWriter w(vp);
    w.comment(it.conic->label);
    w.curve(it.graph, "#1f77b4", 1.5);
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      w.dot(p.points[k].chart(), 3.5, "point", "black");
      w.label(p.points[k].chart(), std::to_string(k + 1), "black");
    }
    out.emplace_back(it.file, w.str());
  }
  out.emplace_back("tree.svg", export_tree_svg(p.tree));
  return out;
}

}  // namespace tropic
