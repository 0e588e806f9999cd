#include "support/oracles.hpp"
#include "tropic/json_io.hpp"
#include "tropic/pappus.hpp"
#include "tropic/pencil.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>

using namespace tropic;

namespace {

ProjectivePoint random_point(oracle::RandomRationals& r) { return {r.next(), r.next(), r.next()}; }

/// Componentwise cross product on plain rationals.
std::array<Rational, 3> cross_oracle(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return {min(a[1] + b[2], a[2] + b[1]), min(a[2] + b[0], a[0] + b[2]), min(a[0] + b[1], a[1] + b[0])};
}

std::array<Rational, 3> plain(const ProjectivePoint& p) { return {p[0], p[1], p[2]}; }
std::array<Rational, 3> plain(const Triple& t) { return {t[0].value(), t[1].value(), t[2].value()}; }

nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(TROPIC_FIXTURE_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

Split split_from_names(const nlohmann::json& side) {
  Split s = 0;
  const auto& names = conic_term_names();
  for (const auto& n : side)
    for (int t = 0; t < 6; ++t)
      if (names[t] == n.get<std::string>()) s |= Split{1} << t;
  return normalize_split(s, 6);
}

std::set<Split> golden_splits(const nlohmann::json& fixture) {
  std::set<Split> out;
  for (const auto& pair : fixture.at("splits")) out.insert(split_from_names(pair[1]));
  return out;
}

}  // namespace

TEST(TropCross, Examples) {
  EXPECT_EQ(trop_cross({0, 0, 0}, {0, 0, 0}), (Triple{0, 0, 0}));
  EXPECT_EQ(trop_cross({0, 0, 0}, {0, 1, 3}), (Triple{1, 0, 0}));
  const LineCoeffs l{1, 0, 0};
  EXPECT_TRUE(line_contains(l, {0, 0, 0}));
  EXPECT_TRUE(line_contains(l, {0, 1, 3}));
  EXPECT_THROW(trop_cross({TropicalScalar::infinity(), 0, 0}, {0, 0, 0}), PreconditionError);
}

TEST(TropCross, JoinContainsBothPointsEvenWhenEqual) {
  oracle::RandomRationals r(11);
  for (int it = 0; it < 500; ++it) {
    const auto p = random_point(r);
    const auto q = r.chance(0.2) ? p.scaled(r.next()) : random_point(r);
    const auto l = stable_join(p, q);
    EXPECT_EQ(plain(l), cross_oracle(plain(p), plain(q)));
    EXPECT_TRUE(line_contains(l, p));
    EXPECT_TRUE(line_contains(l, q));
  }
}

TEST(TropCross, MeetLiesOnBothLines) {
  oracle::RandomRationals r(12);
  for (int it = 0; it < 300; ++it) {
    const LineCoeffs l{r.next(), r.next(), r.next()};
    const LineCoeffs m = r.chance(0.2) ? l : LineCoeffs{r.next(), r.next(), r.next()};
    const auto p = stable_meet(l, m);
    EXPECT_TRUE(line_contains(l, p));
    EXPECT_TRUE(line_contains(m, p));
  }
}

TEST(ConicThroughFive, FiveEqualPointsGiveTheDoubleLine) {
  const ProjectivePoint o(0, 0, 0);
  const auto a = conic_through_five({o, o, o, o, o});
  for (const auto& c : a) EXPECT_EQ(c, TropicalScalar(0));
  EXPECT_EQ(classify_conic(a).tag, ConicTag::double_line);
  const auto g = oracle::checked_curve(conic_polynomial(a));
  ASSERT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(g.vertices[0], o);
  for (const auto& ray : g.rays) EXPECT_EQ(ray.multiplicity, 2);
}

TEST(ConicThroughFive, CoefficientsMatchBruteForceMinors) {
  oracle::RandomRationals r(13);
  for (int it = 0; it < 60; ++it) {
    std::vector<ProjectivePoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(random_point(r));
    const auto a = conic_through_five(pts);
    const auto c = conic_matrix(pts);
    for (std::size_t t = 0; t < 6; ++t) EXPECT_EQ(a[t], oracle::brute_det(c.without_columns({t})).value);
  }
}

TEST(ConicThroughFive, ProperAndThroughThePoints) {
  oracle::RandomRationals r(14, 6, 2);
  for (int it = 0; it < 300; ++it) {
    std::vector<ProjectivePoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(k > 0 && r.chance(0.25) ? pts[r.integer(0, k - 1)] : random_point(r));
    const auto a = conic_through_five(pts);
    EXPECT_TRUE(is_proper_conic(a));
    const auto f = conic_polynomial(a);
    for (const auto& p : pts) EXPECT_TRUE(point_on_curve(f, p)) << p;
  }
}

TEST(LinesConcurrent, LinesThroughTheMeet) {
  oracle::RandomRationals r(15);
  for (int it = 0; it < 200; ++it) {
    const LineCoeffs l{r.next(), r.next(), r.next()};
    const LineCoeffs m{r.next(), r.next(), r.next()};
    const auto p = stable_meet(l, m);
    const auto third = stable_join(p, random_point(r));
    const auto c = lines_concurrent(l, m, third);
    ASSERT_TRUE(c.concurrent);
    ASSERT_TRUE(c.witness);
    EXPECT_TRUE(line_contains(l, *c.witness));
    EXPECT_TRUE(line_contains(m, *c.witness));
    EXPECT_TRUE(line_contains(third, *c.witness));
  }
}

TEST(LinesConcurrent, PappusCounterexample) {
  const auto lines = pappus_counterexample_lines();
  const auto& triples = pappus_triples();
  for (int t = 0; t < 8; ++t) {
    const auto& tr = triples[t];
    EXPECT_TRUE(lines_concurrent(lines[tr[0]], lines[tr[1]], lines[tr[2]]).concurrent) << "hypothesis " << t;
  }
  const auto& last = triples[8];
  EXPECT_FALSE(lines_concurrent(lines[last[0]], lines[last[1]], lines[last[2]]).concurrent);
}

// Concurrency of three lines means their coefficient vectors lie on a common
// line, which is tropical singularity; the geometric decision must agree.
TEST(LinesConcurrent, AgreesWithSingularityOfTheCoefficientMatrix) {
  oracle::RandomRationals r(16, 3, 1);
  int concurrent = 0;
  for (int it = 0; it < 1500; ++it) {
    std::array<LineCoeffs, 3> l;
    for (auto& u : l) u = {r.next(), r.next(), r.next()};
    const auto m = TropMatrix::from_rows({{l[0].begin(), l[0].end()}, {l[1].begin(), l[1].end()},
                                          {l[2].begin(), l[2].end()}});
    const bool c = lines_concurrent(l[0], l[1], l[2]).concurrent;
    concurrent += c;
    EXPECT_EQ(c, oracle::brute_det(m).optimal_count >= 2);
  }
  EXPECT_GT(concurrent, 100);
}

TEST(Trees, Counts) {
  const long expected[] = {1, 3, 15, 105, 945, 10395};
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(static_cast<long>(enumerate_trees(n).size()), expected[n - 3]) << n;
  const auto trees = enumerate_trees(6);
  EXPECT_EQ(std::set<LabeledTree>(trees.begin(), trees.end()).size(), 105u);
  int caterpillars = 0;
  for (const auto& t : trees) {
    EXPECT_TRUE(t.trivalent());
    EXPECT_EQ(t.splits().size(), 3u);
    caterpillars += t.shape() == TreeShape::caterpillar;
  }
  EXPECT_EQ(caterpillars, 90);
}

TEST(Trees, SplitsMustBeCompatible) {
  // {0,1}|rest and {0,2}|rest cross.
  EXPECT_THROW(LabeledTree(6, {0b111100, 0b111010}), PreconditionError);
  EXPECT_THROW(LabeledTree(6, {0b000010}), PreconditionError);
  const LabeledTree star(6, {});
  EXPECT_EQ(star.shape(), TreeShape::non_trivalent);
  EXPECT_EQ(star.internal_degrees(), std::vector<int>{6});
}

TEST(Trees, PlanarRealizability) {
  // Caterpillar {x^2,xy} | y^2 | yz | {z^2,xz} (a planar one).
  const auto cat = conic_tree({0b000011, 0b000111, 0b110000});
  EXPECT_EQ(cat.shape(), TreeShape::caterpillar);
  EXPECT_TRUE(is_planar_realizable(cat));
  // {x^2, y^2} against the rest: not an arc.
  const auto bad = conic_tree({0b000101, 0b000111, 0b110000});
  EXPECT_FALSE(is_planar_realizable(bad));
  EXPECT_THROW(is_planar_realizable(LabeledTree(6, {})), PreconditionError);

  int total = 0, caterpillars = 0;
  for (const auto& t : enumerate_trees(6)) {
    if (!is_planar_realizable(t)) continue;
    ++total;
    caterpillars += t.shape() == TreeShape::caterpillar;
  }
  EXPECT_EQ(total, 14);
  EXPECT_EQ(caterpillars, 12);
}

TEST(Trees, CompatibilityMatchesRealizabilityOnConicSupport) {
  const std::vector<SupportPoint> support(conic_support().begin(), conic_support().end());
  int compatible = 0;
  for (const auto& t : enumerate_trees(6)) {
    const auto c = is_compatible(t, support);
    ASSERT_NE(c, Compatibility::degenerate_support);
    compatible += c == Compatibility::compatible;
    EXPECT_EQ(c == Compatibility::compatible, is_planar_realizable(t));
  }
  EXPECT_EQ(compatible, 14);
}

TEST(Trees, CompatibilityOnSquareAndSegment) {
  // Unit square in cyclic order 0, 1, 2, 3: only the pairings of adjacent
  // corners name polygon edges.
  const std::vector<SupportPoint> square{{0, 0, 2}, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  const auto trees = enumerate_trees(4);
  int ok = 0;
  for (const auto& t : trees) {
    const auto c = is_compatible(t, square);
    ok += c == Compatibility::compatible;
    if (t.quartet(0, 1, 2, 3) == 2) {
      EXPECT_EQ(c, Compatibility::incompatible);
    }
  }
  EXPECT_EQ(ok, 2);

  const std::vector<SupportPoint> segment{{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}};
  for (const auto& t : trees) EXPECT_EQ(is_compatible(t, segment), Compatibility::degenerate_support);
}

TEST(Pencil, CaterpillarFixtureMatchesGoldenSplits) {
  const auto fixture = load_fixture("pencil_caterpillar.json");
  const auto pts = json::decode_points(fixture.at("points"));
  const auto pencil = pencil_through_four(pts);

  // Recompute the quartet splits from brute-force minors.
  std::array<std::array<Rational, 6>, 6> p;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      const auto d = oracle::brute_det(pencil.matrix.without_columns({i, j}));
      ASSERT_EQ(d.optimal_count, 1);
      p[i][j] = p[j][i] = d.value.value();
      EXPECT_EQ(pencil.p(static_cast<int>(i), static_cast<int>(j)), p[i][j]);
    }
  std::set<Split> brute;
  for (Split s = 2; s < 64; s += 2) {
    if (__builtin_popcount(s) < 2 || __builtin_popcount(s) > 4) continue;
    bool ok = true;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = 0; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d) {
            auto in = [&](int x) { return (s >> x) & 1u; };
            if (!(in(a) && in(b) && !in(c) && !in(d))) continue;
            const Rational own = p[a][b] + p[c][d];
            ok = ok && own > p[a][c] + p[b][d] && own > p[a][d] + p[b][c];
          }
    if (ok) brute.insert(s);
  }
  const std::set<Split> computed(pencil.tree.splits().begin(), pencil.tree.splits().end());
  EXPECT_EQ(computed, brute);
  EXPECT_EQ(computed, golden_splits(fixture));
  EXPECT_EQ(pencil.shape, TreeShape::caterpillar);
  EXPECT_TRUE(is_planar_realizable(pencil.tree));
}

TEST(Pencil, SnowflakeFixture) {
  const auto fixture = load_fixture("pencil_snowflake.json");
  const auto pencil = pencil_through_four(json::decode_points(fixture.at("points")));
  EXPECT_EQ(pencil.shape, TreeShape::snowflake);
  EXPECT_TRUE(is_planar_realizable(pencil.tree));
  const std::set<Split> computed(pencil.tree.splits().begin(), pencil.tree.splits().end());
  EXPECT_EQ(computed, golden_splits(fixture));
}

TEST(Pencil, DegenerateInputIsRejected) {
  const ProjectivePoint p(0, 0, 0), q(1, 2, 0), s(3, -1, 0);
  try {
    pencil_through_four({p, p, q, s});
    FAIL() << "expected a genericity error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("singular 4x4 submatrix"), std::string::npos);
  }
}

TEST(Pencil, DistinguishedConicsLieOnThePencil) {
  const auto pencil = pencil_through_four({{0, 6, 0}, {5, 3, 0}, {10, 0, 0}, {8, 8, 0}});
  ASSERT_EQ(pencil.limit_conics.size(), 6u);
  ASSERT_EQ(pencil.line_pairs.size(), 3u);
  EXPECT_EQ(pencil.vertex_conics.size(), 4u);
  std::vector<DistinguishedConic> all = pencil.limit_conics;
  all.insert(all.end(), pencil.line_pairs.begin(), pencil.line_pairs.end());
  all.insert(all.end(), pencil.vertex_conics.begin(), pencil.vertex_conics.end());
  for (const auto& d : all) {
    EXPECT_TRUE(on_pencil(pencil, d.coeffs)) << d.label;
    const auto f = conic_polynomial(d.coeffs);
    for (const auto& pt : pencil.points) EXPECT_TRUE(point_on_curve(f, pt)) << d.label;
  }
  for (const auto& d : pencil.line_pairs) {
    const auto tag = classify_conic(d.coeffs).tag;
    EXPECT_TRUE(tag == ConicTag::union_of_two_lines || tag == ConicTag::double_line) << d.label;
  }
  for (const auto& d : pencil.vertex_conics) EXPECT_TRUE(is_vertex_of(d.coeffs, pencil.points[d.point]));
  for (const auto& d : pencil.limit_conics) {
    const auto g = oracle::checked_curve(conic_polynomial(d.coeffs));
    // The tentacle of the missing term is gone and three vertices remain.
    EXPECT_EQ(g.rays.size(), 5u) << d.label;
    EXPECT_EQ(g.vertices.size(), 3u) << d.label;
  }
}

TEST(Pencil, RandomQuadruplesGiveRealizableTrees) {
  oracle::RandomRationals r(17, 8, 3);
  std::set<LabeledTree> seen;
  int generic = 0;
  for (int it = 0; it < 400; ++it) {
    std::vector<ProjectivePoint> pts;
    for (int k = 0; k < 4; ++k) pts.push_back({r.next(), r.next(), Rational(0)});
    try {
      const auto pencil = pencil_through_four(pts);
      ++generic;
      ASSERT_TRUE(pencil.tree.trivalent());
      EXPECT_TRUE(is_planar_realizable(pencil.tree));
      seen.insert(pencil.tree);
      for (const auto& d : pencil.limit_conics) EXPECT_TRUE(on_pencil(pencil, d.coeffs));
    } catch (const PreconditionError&) {
    }
  }
  EXPECT_GT(generic, 200);
  EXPECT_GE(seen.size(), 10u);
}

TEST(Pappus, FrozenTraceMatchesComponentwiseOracle) {
  const std::array<ProjectivePoint, 5> pts{{{0, 0, 0}, {3, 1, 0}, {7, -2, 0}, {-1, 5, 0}, {2, 8, 0}}};
  const auto trace = pappus_construct(pts);
  using P3 = std::array<Rational, 3>;
  auto x = [](const P3& a, const P3& b) { return cross_oracle(a, b); };
  const P3 p1 = plain(pts[0]), p2 = plain(pts[1]), p3 = plain(pts[2]), p4 = plain(pts[3]), p5 = plain(pts[4]);
  const P3 a = x(p1, p4), b = x(p2, p4), c = x(p3, p4), a1 = x(p1, p5), b1 = x(p2, p5), c1 = x(p3, p5);
  const P3 p6 = x(b, c1), p7 = x(a1, c), p8 = x(a, b1);
  const std::array<P3, 9> lines{a, b, c, a1, b1, c1, x(p1, p6), x(p2, p7), x(p3, p8)};
  for (int k = 0; k < 9; ++k) EXPECT_EQ(plain(trace.lines[k]), lines[k]) << pappus_line_names()[k];
  EXPECT_EQ(plain(trace.derived[0]), p6);
  EXPECT_EQ(plain(trace.derived[1]), p7);
  EXPECT_EQ(plain(trace.derived[2]), p8);
  EXPECT_TRUE(trace.singular);
  EXPECT_EQ(trace.singular, trace.concurrent);
  // The eight hypotheses hold by construction.
  for (int t = 0; t < 8; ++t) {
    const auto& tr = pappus_triples()[t];
    EXPECT_TRUE(lines_concurrent(trace.lines[tr[0]], trace.lines[tr[1]], trace.lines[tr[2]]).concurrent) << t;
  }
}

TEST(Pappus, IdenticalPointsCollapse) {
  const ProjectivePoint p(1, 2, 3);
  const auto trace = pappus_construct({p, p, p, p, p});
  for (const auto& l : trace.lines)
    EXPECT_TRUE(projectively_equal({l.begin(), l.end()}, {trace.lines[0].begin(), trace.lines[0].end()}));
  EXPECT_TRUE(trace.singular);
  EXPECT_TRUE(trace.concurrent);
}

TEST(Pappus, RandomInstancesAreSingular) {
  oracle::RandomRationals r(18);
  for (int it = 0; it < 300; ++it) {
    std::array<ProjectivePoint, 5> pts{random_point(r), random_point(r), random_point(r), random_point(r),
                                       random_point(r)};
    const auto trace = pappus_construct(pts);
    EXPECT_TRUE(trace.singular) << json::encode(trace).dump();
    EXPECT_EQ(trace.singular, trace.concurrent);
  }
}
