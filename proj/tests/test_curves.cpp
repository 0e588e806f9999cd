#include "support/oracles.hpp"
#include "tropic/conic.hpp"
#include "tropic/curve.hpp"
#include "tropic/determinant.hpp"

#include <gtest/gtest.h>

using namespace tropic;

namespace {

TropicalPolynomial conic(std::array<long, 6> a) {
  ConicCoeffs c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = Rational(a[i]);
  return conic_polynomial(c);
}

ConicCoeffs coeffs(std::array<long, 6> a) {
  ConicCoeffs c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = Rational(a[i]);
  return c;
}

std::set<Direction> ray_directions(const PlaneCurveGraph& g) {
  std::set<Direction> out;
  for (const auto& r : g.rays) out.insert(r.direction);
  return out;
}

/// Vertices dual to the 2-cells, computed by brute force: points where at
/// least three terms tie at the minimum and the tie set is not collinear.
std::set<Vec2> brute_vertices(const TropicalPolynomial& f) {
  auto terms = f.finite_terms();
  std::set<Vec2> out;
  for (std::size_t p = 0; p < terms.size(); ++p)
    for (std::size_t q = p + 1; q < terms.size(); ++q)
      for (std::size_t r = q + 1; r < terms.size(); ++r) {
        const auto& [P, aP] = terms[p];
        const auto& [Q, aQ] = terms[q];
        const auto& [R, aR] = terms[r];
        // (P-Q).x = aQ - aP, (P-R).x = aR - aP
        const Rational m11(P.i - Q.i), m12(P.j - Q.j), m21(P.i - R.i), m22(P.j - R.j);
        const Rational det = m11 * m22 - m12 * m21;
        if (det.sign() == 0) continue;
        const Rational b1 = aQ - aP, b2 = aR - aP;
        Vec2 x{(b1 * m22 - m12 * b2) / det, (m11 * b2 - m21 * b1) / det};
        ProjectivePoint pt(x);
        auto values = f.term_values(pt);
        Rational low = *std::min_element(values.begin(), values.end());
        const Rational at = aP + Rational(P.i) * x.x + Rational(P.j) * x.y;
        if (at == low) out.insert(x);
      }
  return out;
}

}  // namespace

TEST(Subdivision, FlatConicIsOneCell) {
  auto sub = regular_subdivision(conic({0, 0, 0, 0, 0, 0}));
  ASSERT_EQ(sub.cells.size(), 1u);
  EXPECT_EQ(sub.cells[0].vertices.size(), 3u);
  EXPECT_EQ(sub.cells[0].points.size(), 6u);
}

TEST(Subdivision, UnitTriangulation) {
  auto sub = regular_subdivision(conic({0, -1, 0, -1, 0, -1}));
  ASSERT_EQ(sub.cells.size(), 4u);
  for (const auto& c : sub.cells) {
    EXPECT_EQ(c.vertices.size(), 3u);
    const auto& v = c.vertices;
    // Counterclockwise with area 1/2.
    EXPECT_EQ(lattice_cross(sub.lattice[v[0]], sub.lattice[v[1]], sub.lattice[v[2]]), 1);
  }
  int interior = 0;
  for (const auto& e : sub.edges) interior += e.interior();
  EXPECT_EQ(interior, 3);
  EXPECT_EQ(sub.edges.size(), 9u);
}

TEST(Subdivision, InfiniteCoefficientsAreDropped) {
  TropicalPolynomial f(2);
  f.set({2, 0, 0}, Rational(0));
  f.set({0, 2, 0}, Rational(0));
  f.set({0, 0, 2}, Rational(0));
  f.set({1, 1, 0}, TropicalScalar::infinity());
  auto sub = regular_subdivision(f);
  EXPECT_EQ(sub.support.size(), 3u);
  EXPECT_EQ(sub.cells.size(), 1u);
}

TEST(Subdivision, BiquadraticHasInteriorVertexAndCycle) {
  // Support: the square [0,2]^2 in degree 4, centre lifted lowest.
  TropicalPolynomial f(4);
  oracle::RandomRationals r(3, 2, 5);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Rational lift = Rational((i - 1) * (i - 1) + (j - 1) * (j - 1)) + r.next() / Rational(20);
      f.set({i, j, 4 - i - j}, lift);
    }
  auto sub = regular_subdivision(f);
  std::size_t centre = 0;
  for (std::size_t p = 0; p < sub.lattice.size(); ++p)
    if (sub.lattice[p] == LatticePoint{1, 1}) centre = p;
  int cells_at_centre = 0;
  for (const auto& c : sub.cells)
    cells_at_centre += std::count(c.vertices.begin(), c.vertices.end(), centre) > 0;
  EXPECT_GE(cells_at_centre, 3);
  auto g = oracle::checked_curve(f);
  // A connected graph with E - V + 1 = 1 has exactly one cycle.
  EXPECT_EQ(static_cast<long>(g.bounded_edges.size()) - static_cast<long>(g.vertices.size()) + 1, 1);
  EXPECT_TRUE(check_balancing(g).balanced);
}

TEST(BuildCurve, StandardLine) {
  auto g = oracle::checked_curve(line_polynomial({Rational(0), Rational(0), Rational(0)}));
  ASSERT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(g.vertices[0], ProjectivePoint(0, 0, 0));
  EXPECT_TRUE(g.bounded_edges.empty());
  EXPECT_EQ(ray_directions(g), (std::set<Direction>{{-1, -1}, {0, 1}, {1, 0}}));
  for (const auto& r : g.rays) EXPECT_EQ(r.multiplicity, 1);
}

TEST(BuildCurve, LineVertexIsMinusCoefficients) {
  auto g = build_curve(line_polynomial({Rational(2), Rational(-1), Rational(5)}));
  ASSERT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(g.vertices[0], ProjectivePoint(-2, 1, -5));
}

TEST(BuildCurve, DoubleLine) {
  auto g = oracle::checked_curve(conic({0, 0, 0, 0, 0, 0}));
  ASSERT_EQ(g.vertices.size(), 1u);
  ASSERT_EQ(g.rays.size(), 3u);
  for (const auto& r : g.rays) EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(classify_conic(coeffs({0, 0, 0, 0, 0, 0})).tag, ConicTag::double_line);
}

TEST(BuildCurve, ProperConicCaseD) {
  auto a = coeffs({0, -2, 0, -2, 0, -2});
  ASSERT_EQ(classify_conic(a).tag, ConicTag::case_d);
  auto g = oracle::checked_curve(conic_polynomial(a));
  EXPECT_EQ(g.vertices.size(), 4u);
  EXPECT_EQ(g.bounded_edges.size(), 3u);
  EXPECT_EQ(g.rays.size(), 6u);
  // One vertex carries no ray.
  std::vector<int> rays_at(g.vertices.size(), 0);
  for (const auto& r : g.rays) ++rays_at[r.vertex];
  EXPECT_EQ(std::count(rays_at.begin(), rays_at.end(), 0), 1);
}

TEST(BuildCurve, CollinearSupport) {
  // x^2 ⊕ 1 xy ⊕ y^2 restricted to the edge z = 0: the lines x = y ± 1.
  TropicalPolynomial f(2);
  f.set({2, 0, 0}, Rational(0));
  f.set({1, 1, 0}, Rational(-1));
  f.set({0, 2, 0}, Rational(0));
  auto g = oracle::checked_curve(f);
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(g.rays.size(), 4u);
  EXPECT_TRUE(check_balancing(g).balanced);
  for (const auto& v : g.vertices) EXPECT_TRUE(point_on_curve(f, v));
  EXPECT_TRUE(point_on_curve(f, ProjectivePoint(Vec2{Rational(7), Rational(6)})));
  EXPECT_TRUE(graph_contains(g, ProjectivePoint(Vec2{Rational(7), Rational(6)})));

  TropicalPolynomial single(1);
  single.set({1, 0, 0}, Rational(3));
  EXPECT_TRUE(build_curve(single).empty());
}

TEST(PointOnCurve, LineExamples) {
  auto f = line_polynomial({Rational(0), Rational(0), Rational(0)});
  EXPECT_TRUE(point_on_curve(f, {0, 0, 0}));
  EXPECT_FALSE(point_on_curve(f, {1, 2, 0}));
  EXPECT_TRUE(point_on_curve(f, {0, 5, 0}));
}

TEST(Balancing, MutatedRayIsReported) {
  auto g = build_curve(line_polynomial({Rational(0), Rational(1), Rational(2)}));
  ASSERT_TRUE(check_balancing(g).balanced);
  g.rays[1].multiplicity = 2;
  auto report = check_balancing(g);
  EXPECT_FALSE(report.balanced);
  ASSERT_TRUE(report.vertex.has_value());
  EXPECT_EQ(*report.vertex, g.rays[1].vertex);
  EXPECT_TRUE(check_balancing(PlaneCurveGraph{}).balanced);
}

TEST(BuildCurve, DualityOnRandomPolynomials) {
  oracle::RandomRationals r(100, 4, 3);
  for (int t = 0; t < 60; ++t) {
    const int d = static_cast<int>(r.integer(1, 4));
    TropicalPolynomial f = oracle::random_full_polynomial(r, d);
    // Occasionally delete terms.
    if (r.chance(0.3))
      for (const auto& s : simplex_points(d))
        if (r.chance(0.2)) f.set(s, TropicalScalar::infinity());
    if (f.finite_terms().size() < 3) continue;
    auto g = oracle::checked_curve(f);
    ASSERT_TRUE(check_balancing(g).balanced) << check_balancing(g).message;
    const auto& sub = *g.subdivision;
    if (sub.dimension != 2) continue;
    EXPECT_EQ(g.vertices.size(), sub.cells.size());
    std::size_t interior = 0;
    for (const auto& e : sub.edges) interior += e.interior();
    EXPECT_EQ(g.bounded_edges.size(), interior);
    EXPECT_EQ(g.rays.size(), sub.edges.size() - interior);
    for (std::size_t e = 0; e < g.bounded_edges.size(); ++e) {
      const auto& dual = sub.edges[g.edge_dual[e]];
      const Vec2 dv{Rational(sub.lattice[dual.b].i - sub.lattice[dual.a].i),
                    Rational(sub.lattice[dual.b].j - sub.lattice[dual.a].j)};
      const Vec2 ev = g.vertices[g.bounded_edges[e].to].chart() - g.vertices[g.bounded_edges[e].from].chart();
      EXPECT_EQ(dot(dv, ev).sign(), 0);
      const Vec2 mid = Rational(1, 2) * (g.vertices[g.bounded_edges[e].to].chart() + g.vertices[g.bounded_edges[e].from].chart());
      EXPECT_TRUE(point_on_curve(f, ProjectivePoint(mid)));
    }
    for (std::size_t k = 0; k < g.rays.size(); ++k) {
      const auto& dual = sub.edges[g.ray_dual[k]];
      EXPECT_EQ(g.rays[k].direction.dx * (sub.lattice[dual.b].i - sub.lattice[dual.a].i) +
                    g.rays[k].direction.dy * (sub.lattice[dual.b].j - sub.lattice[dual.a].j),
                0);
    }
    std::set<Vec2> built;
    for (const auto& v : g.vertices) {
      EXPECT_TRUE(point_on_curve(f, v));
      built.insert(v.chart());
    }
    EXPECT_EQ(built, brute_vertices(f));
  }
}

TEST(BuildCurve, MembershipMatchesGraphOnGrid) {
  oracle::RandomRationals r(55, 3, 1);
  for (int t = 0; t < 12; ++t) {
    const int d = static_cast<int>(r.integer(1, 3));
    auto f = oracle::random_full_polynomial(r, d);
    auto g = oracle::checked_curve(f);
    for (int x = -16; x <= 16; ++x)
      for (int y = -16; y <= 16; ++y) {
        ProjectivePoint p(Vec2{Rational(x, 2), Rational(y, 2)});
        ASSERT_EQ(point_on_curve(f, p), graph_contains(g, p)) << p << " degree " << d;
      }
  }
}

TEST(Conic, ProperCone) {
  EXPECT_TRUE(is_proper_conic(coeffs({0, -1, 0, -1, 0, -1})));
  EXPECT_FALSE(is_proper_conic(coeffs({0, 1, 0, 0, 0, 0})));
  EXPECT_TRUE(is_proper_conic(coeffs({0, 0, 0, 0, 0, 0})));
  EXPECT_THROW(is_proper_conic({TropicalScalar::infinity(), 0, 0, 0, 0, 0}), PreconditionError);
}

TEST(Conic, CaseB) {
  auto c = classify_conic(coeffs({0, 0, 0, 0, 0, -1}));
  EXPECT_EQ(c.tag, ConicTag::case_b);
  TropMatrix rows{{0, 0, -1}, {0, 0, 0}, {-1, 0, 0}};
  EXPECT_FALSE(is_tropically_singular(rows));
}

TEST(Conic, CaseCSubtypes) {
  // 2a2 < a1+a3, 2a4 < a3+a5, 2a6 >= a1+a5.
  auto neg = classify_conic(coeffs({0, -1, 0, -2, 0, 0}));
  EXPECT_EQ(neg.tag, ConicTag::case_c);
  EXPECT_EQ(neg.axis, ConicAxis::y);
  EXPECT_EQ(neg.subtype, CaseCSubtype::positive);  // 2(-1) + 0 - 0 - 2(-2) = 2
  auto pos = classify_conic(coeffs({0, -2, 0, -1, 0, 0}));
  EXPECT_EQ(pos.subtype, CaseCSubtype::negative);
  // On the boundary 2a2 + a5 = a1 + 2a4 the discriminant ties.
  EXPECT_EQ(classify_conic(coeffs({0, -1, 0, -1, 0, 0})).tag, ConicTag::union_of_two_lines);
  EXPECT_EQ(classify_conic(coeffs({0, -1, 0, -1, 0, 1})).tag, ConicTag::union_of_two_lines);
}

TEST(Conic, CaseE) {
  // Strictly proper with a2 + a4 > a3 + a6.
  auto a = coeffs({0, -1, 0, -1, 0, -3});
  EXPECT_EQ(classify_conic(a).tag, ConicTag::case_e);
  auto g = oracle::checked_curve(conic_polynomial(a));
  EXPECT_EQ(g.vertices.size(), 4u);
  EXPECT_EQ(g.bounded_edges.size(), 3u);
  std::vector<int> rays_at(g.vertices.size(), 0);
  for (const auto& r : g.rays) ++rays_at[r.vertex];
  EXPECT_EQ(std::count(rays_at.begin(), rays_at.end(), 0), 0);
}

TEST(Conic, ProductsOfLinesAreDegenerate) {
  oracle::RandomRationals r(404);
  for (int t = 0; t < 300; ++t) {
    std::array<Rational, 3> u{r.next(), r.next(), r.next()}, v{r.next(), r.next(), r.next()};
    ConicCoeffs a{u[0] + v[0],
                  min(u[0] + v[1], u[1] + v[0]),
                  u[1] + v[1],
                  min(u[1] + v[2], u[2] + v[1]),
                  u[2] + v[2],
                  min(u[0] + v[2], u[2] + v[0])};
    auto tag = classify_conic(a).tag;
    EXPECT_TRUE(tag == ConicTag::union_of_two_lines || tag == ConicTag::double_line);
    if (u[0] - v[0] == u[1] - v[1] && u[1] - v[1] == u[2] - v[2]) {
      EXPECT_EQ(tag, ConicTag::double_line);
    }
  }
}

TEST(Conic, TagsMatchCurveStructure) {
  oracle::RandomRationals r(808, 4, 2);
  int proper = 0;
  for (int t = 0; t < 800; ++t) {
    ConicCoeffs a;
    for (auto& c : a) c = r.next();
    auto cls = classify_conic(a);
    auto g = oracle::checked_curve(conic_polynomial(a));
    const auto& sub = *g.subdivision;
    bool four_triangles = sub.cells.size() == 4;
    for (const auto& c : sub.cells) four_triangles = four_triangles && c.vertices.size() == 3;
    const bool tag_proper = cls.tag == ConicTag::case_d || cls.tag == ConicTag::case_e;
    EXPECT_EQ(tag_proper, four_triangles) << to_string(cls.tag);
    if (tag_proper) {
      ++proper;
      EXPECT_TRUE(is_proper_conic(a));
      std::vector<int> rays_at(g.vertices.size(), 0);
      for (const auto& ray : g.rays) ++rays_at[ray.vertex];
      EXPECT_EQ(cls.tag == ConicTag::case_d, std::count(rays_at.begin(), rays_at.end(), 0) == 1);
    }
    if (cls.tag == ConicTag::case_a) {
      EXPECT_EQ(g.vertices.size(), 1u);
    }
  }
  EXPECT_GT(proper, 20);
}
