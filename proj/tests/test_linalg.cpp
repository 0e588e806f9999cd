#include "support/oracles.hpp"
#include "tropic/cramer.hpp"
#include "tropic/determinant.hpp"
#include "tropic/tp3.hpp"

#include <gtest/gtest.h>

using namespace tropic;

namespace {

const TropicalScalar inf = TropicalScalar::infinity();

std::vector<TropicalScalar> normalized(const std::vector<TropicalScalar>& v) {
  std::vector<TropicalScalar> out;
  for (const auto& c : v) out.push_back(c.is_infinite() ? c : TropicalScalar(c.value() - v.front().value()));
  return out;
}

}  // namespace

TEST(TropDet, AllZerosIsSingular) {
  auto cert = trop_det(TropMatrix(3, 3));
  EXPECT_EQ(cert.value, TropicalScalar(0));
  EXPECT_TRUE(cert.singular);
  ASSERT_EQ(cert.witnesses.size(), 2u);
  EXPECT_EQ(cert.witnesses[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(cert.witnesses[1], (std::vector<int>{0, 2, 1}));
}

TEST(TropDet, UniqueIdentityOptimum) {
  TropMatrix a{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  auto cert = trop_det(a);
  EXPECT_EQ(cert.value, TropicalScalar(0));
  EXPECT_FALSE(cert.singular);
  ASSERT_EQ(cert.witnesses.size(), 1u);
  EXPECT_EQ(cert.witnesses[0], (std::vector<int>{0, 1, 2}));
  // The other five permutations give 2, 2, 4, 4, 4.
  std::vector<int> perm{0, 1, 2};
  std::vector<TropicalScalar> weights;
  while (std::next_permutation(perm.begin(), perm.end())) weights.push_back(permutation_weight(a, perm));
  std::sort(weights.begin(), weights.end());
  EXPECT_EQ(weights, (std::vector<TropicalScalar>{2, 2, 4, 4, 4}));
}

TEST(TropDet, PappusConclusionBlock) {
  // Permutation sums are 6, 2, 12, 6, 6, 4: the minimum 2 is unique.
  TropMatrix a{{2, 6, 0}, {6, 4, 0}, {0, 0, 0}};
  auto brute = oracle::brute_det(a);
  EXPECT_EQ(brute.value, TropicalScalar(2));
  EXPECT_EQ(brute.optimal_count, 1);
  auto cert = trop_det(a);
  EXPECT_EQ(cert.value, brute.value);
  EXPECT_FALSE(cert.singular);
  EXPECT_EQ(cert.witnesses.front(), (std::vector<int>{0, 2, 1}));
}

TEST(TropDet, SmallSingularityExamples) {
  EXPECT_TRUE(is_tropically_singular(TropMatrix{{0, 0}, {0, 0}}));
  EXPECT_FALSE(is_tropically_singular(TropMatrix{{0, 1}, {2, 0}}));
  EXPECT_FALSE(is_tropically_singular(TropMatrix{{5}}));
  EXPECT_THROW(trop_det(TropMatrix(2, 3)), PreconditionError);
}

TEST(TropDet, InfiniteEntries) {
  auto cert = trop_det(TropMatrix{{inf, 1}, {inf, 2}});
  EXPECT_TRUE(cert.value.is_infinite());
  EXPECT_FALSE(cert.singular);
  EXPECT_TRUE(cert.witnesses.empty());

  auto finite = trop_det(TropMatrix{{inf, 1}, {2, inf}});
  EXPECT_EQ(finite.value, TropicalScalar(3));
  EXPECT_FALSE(finite.singular);
  EXPECT_EQ(finite.witnesses.front(), (std::vector<int>{1, 0}));
}

TEST(TropDet, MatchesBruteForce) {
  oracle::RandomRationals r(2024, 3, 2);
  for (int t = 0; t < 400; ++t) {
    const auto k = static_cast<std::size_t>(r.integer(1, 6));
    auto a = oracle::random_matrix(r, k, k, 0.15);
    auto cert = trop_det(a);
    auto brute = oracle::brute_det(a);
    if (brute.optimal_count == 0) {
      EXPECT_TRUE(cert.value.is_infinite());
      EXPECT_FALSE(cert.singular);
      continue;
    }
    ASSERT_EQ(cert.value, brute.value) << a;
    EXPECT_EQ(cert.singular, brute.optimal_count >= 2) << a;
    for (const auto& w : cert.witnesses) EXPECT_EQ(permutation_weight(a, w), cert.value);
    if (cert.singular) {
      EXPECT_NE(cert.witnesses[0], cert.witnesses[1]);
    }
  }
}

TEST(TropDet, RowScalingAndPermutationInvariance) {
  oracle::RandomRationals r(77);
  for (int t = 0; t < 100; ++t) {
    const auto k = static_cast<std::size_t>(r.integer(2, 5));
    auto a = oracle::random_matrix(r, k, k);
    auto base = trop_det(a);
    TropMatrix shifted = a;
    const Rational c = r.next();
    for (std::size_t j = 0; j < k; ++j) shifted(0, j) = trop_mul(shifted(0, j), c);
    EXPECT_EQ(trop_det(shifted).value, trop_mul(base.value, c));
    TropMatrix swapped = a;
    for (std::size_t j = 0; j < k; ++j) std::swap(swapped(0, j), swapped(k - 1, j));
    EXPECT_EQ(trop_det(swapped).value, base.value);
    EXPECT_EQ(trop_det(a.transposed()).value, base.value);
  }
}

TEST(Cramer, TwoByThreeExample) {
  TropMatrix c{{0, 0, 0}, {0, 1, 3}};
  auto sol = cramer_solve(c);
  EXPECT_EQ(sol.coords, (std::vector<TropicalScalar>{1, 0, 0}));
  for (const auto& m : sol.minors) EXPECT_FALSE(m.singular);
  ASSERT_TRUE(sol.linkage_tree.has_value());
  EXPECT_EQ(sol.linkage_tree->edges.size(), 2u);
  EXPECT_TRUE(solves_rows(c, sol.coords));
}

TEST(Cramer, EqualRowsStillDefined) {
  TropMatrix c{{0, 1, 2}, {0, 1, 2}};
  auto sol = cramer_solve(c);
  for (const auto& m : sol.minors) EXPECT_TRUE(m.singular);
  EXPECT_FALSE(sol.linkage_tree.has_value());
  EXPECT_EQ(sol.coords.size(), 3u);
  EXPECT_TRUE(solves_rows(c, sol.coords));
}

TEST(Cramer, RejectsWrongShape) {
  EXPECT_THROW(cramer_solve(TropMatrix(3, 3)), PreconditionError);
  EXPECT_THROW(cramer_solve(TropMatrix{{0, inf, 1}, {0, 1, 2}}), PreconditionError);
}

TEST(Cramer, CircuitsAndRowsOnRandomSystems) {
  oracle::RandomRationals r(8);
  int generic = 0;
  for (int t = 0; t < 150; ++t) {
    const auto n = static_cast<std::size_t>(r.integer(3, 6));
    auto c = oracle::random_matrix(r, n - 1, n);
    auto sol = cramer_solve(c);
    // Each circuit of the point case is a pair of coordinates j0 < j1:
    // w_{J∪j0} + x_{j1} and w_{J∪j1} + x_{j0} tie, i.e. x_j0 - x_j1 equals
    // the difference of the minors, which holds by construction.
    bool all_nonsingular = true;
    for (const auto& m : sol.minors) all_nonsingular = all_nonsingular && !m.singular;
    if (!all_nonsingular) continue;
    ++generic;
    EXPECT_TRUE(solves_rows(c, sol.coords)) << c;
    auto link = linkage_tree(c);
    std::vector<TropicalScalar> p(link.point.begin(), link.point.end());
    EXPECT_TRUE(projectively_equal(p, sol.coords)) << c;
    EXPECT_EQ(link.tree.edges.size(), n - 1);
  }
  EXPECT_GT(generic, 50);
}

TEST(LinkageTree, TwoByThreeExample) {
  TropMatrix c{{0, 0, 0}, {0, 1, 3}};
  auto link = linkage_tree(c);
  EXPECT_EQ(link.tree.edges, (std::vector<std::pair<int, int>>{{1, 2}, {0, 1}}));
  std::vector<TropicalScalar> p(link.point.begin(), link.point.end());
  EXPECT_EQ(normalized(p), normalized({1, 0, 0}));
  EXPECT_TRUE(link.transport.unique);
}

TEST(LinkageTree, InhomogeneousSquareSystemGivesStar) {
  // A ⊙ x = b with the right-hand side as column 3.
  TropMatrix c{{0, 10, 10, 1}, {10, 0, 10, 2}, {10, 10, 0, 3}};
  auto link = linkage_tree(c);
  auto deg = link.tree.degrees();
  EXPECT_EQ(deg[3], 3);
  for (auto [a, b] : link.tree.edges) EXPECT_TRUE(a == 3 || b == 3);
  std::vector<TropicalScalar> p(link.point.begin(), link.point.end());
  EXPECT_TRUE(projectively_equal(p, cramer_solve(c).coords));
}

TEST(LinkageTree, RejectsSingularSubmatrix) {
  try {
    linkage_tree(TropMatrix{{0, 0, 0}, {0, 0, 0}});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("singular submatrix"), std::string::npos);
  }
}

TEST(Transportation, UniqueAndNonUniqueOptima) {
  auto unique = solve_transportation({{0, 5}, {5, 0}}, {1, 1}, {1, 1});
  EXPECT_TRUE(unique.unique);
  EXPECT_EQ(unique.cost, Rational(0));
  auto tied = solve_transportation({{0, 0}, {0, 0}}, {1, 1}, {1, 1});
  EXPECT_FALSE(tied.unique);
}

TEST(TP3, CaseTwelveThirtyFour) {
  PlueckerTP3 p{1, 0, 0, 0, 0, 1};
  auto line = tp3_line(p);
  EXPECT_EQ(line.case_tag, TP3Case::split_12_34);
  EXPECT_EQ(line.endpoint_1, (PointTP3{1, 1, 0, 0}));
  EXPECT_EQ(line.endpoint_2, (PointTP3{0, 0, 1, 1}));
  EXPECT_TRUE(on_tp3_line(p, line.endpoint_1));
  EXPECT_TRUE(on_tp3_line(p, line.endpoint_2));
}

TEST(TP3, AllZeroIsDegenerate) {
  auto line = tp3_line(PlueckerTP3{0, 0, 0, 0, 0, 0});
  EXPECT_EQ(line.case_tag, TP3Case::degenerate);
  EXPECT_EQ(line.endpoint_1, (PointTP3{0, 0, 0, 0}));
  EXPECT_EQ(line.endpoint_2, line.endpoint_1);
}

TEST(TP3, RejectsPlueckerViolation) {
  EXPECT_THROW(tp3_line(PlueckerTP3{-1, 0, 0, 0, 0, 0}), PreconditionError);
}

TEST(TP3, RandomValidVectorsHaveEndpointsOnTheLine) {
  oracle::RandomRationals r(31);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    PlueckerTP3 p{r.next(), r.next(), r.next(), r.next(), r.next(), r.next()};
    // Force the relation by raising the unique minimum to the next value.
    Rational s1 = p.a12 + p.a34, s2 = p.a13 + p.a24, s3 = p.a14 + p.a23;
    std::array<Rational, 3> s{s1, s2, s3};
    std::sort(s.begin(), s.end());
    if (s[0] != s[1]) {
      if (s1 == s[0]) p.a12 += s[1] - s1;
      else if (s2 == s[0]) p.a13 += s[1] - s2;
      else p.a14 += s[1] - s3;
    }
    auto line = tp3_line(p);
    EXPECT_TRUE(on_tp3_line(p, line.endpoint_1));
    EXPECT_TRUE(on_tp3_line(p, line.endpoint_2));
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

TEST(TP3, CaseThirteenTwentyFour) {
  PlueckerTP3 p{0, 1, 0, 0, 1, 0};
  auto line = tp3_line(p);
  EXPECT_EQ(line.case_tag, TP3Case::split_13_24);
  EXPECT_EQ(line.endpoint_1, (PointTP3{0, 1, 0, 1}));
  EXPECT_EQ(line.endpoint_2, (PointTP3{1, 0, 1, 0}));
  EXPECT_TRUE(on_tp3_line(p, line.endpoint_1));
  EXPECT_TRUE(on_tp3_line(p, line.endpoint_2));
}

TEST(TP3, CaseFourteenTwentyThree) {
  PlueckerTP3 p{0, 0, 1, 1, 0, 0};
  auto line = tp3_line(p);
  EXPECT_EQ(line.case_tag, TP3Case::split_14_23);
  EXPECT_EQ(line.endpoint_1, (PointTP3{0, 1, 1, 0}));
  EXPECT_EQ(line.endpoint_2, (PointTP3{1, 0, 0, 1}));
  EXPECT_TRUE(on_tp3_line(p, line.endpoint_1));
  EXPECT_TRUE(on_tp3_line(p, line.endpoint_2));
}

TEST(TP3, StrictSumInFirstEndpointLeavesTheLine) {
  // Using the strict pairing sum in place of the tied one produces a point
  // that fails a circuit, so the tied sum is the right entry.
  PlueckerTP3 p{0, 1, 0, 0, 1, 0};
  EXPECT_FALSE(on_tp3_line(p, PointTP3{p.a23 + p.a34, p.a13 + p.a34, p.a13 + p.a24, p.a13 + p.a23}));
  PlueckerTP3 q{0, 0, 1, 1, 0, 0};
  EXPECT_FALSE(on_tp3_line(q, PointTP3{q.a24 + q.a34, q.a14 + q.a34, q.a14 + q.a24, q.a14 + q.a23}));
}
