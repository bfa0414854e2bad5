#include "conesing/error.hpp"
#include "conesing/resolution.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace conesing {
namespace {

std::vector<std::int64_t> self_intersections(const DualGraph& g) {
  std::vector<std::int64_t> out;
  for (const auto& n : g.nodes()) out.push_back(n.self_intersection);
  return out;
}

TEST(BuildGraph, Examples) {
  const DualGraph xd = build_graph(SeifertData(7, {}));
  EXPECT_EQ(xd.size(), 1u);
  EXPECT_EQ(xd.nodes()[0], (GraphNode{-7, true}));

  const DualGraph a3 = build_graph(SeifertData(2, {{2, 1}, {2, 1}}));
  EXPECT_EQ(self_intersections(a3), (std::vector<std::int64_t>{-2, -2, -2}));
  EXPECT_EQ(a3.central(), 0u);
  EXPECT_EQ(a3.edges(), (std::vector<DualGraph::Edge>{{0, 1}, {0, 2}}));

  const DualGraph e8 = build_graph(SeifertData(2, {{2, 1}, {3, 2}, {5, 4}}));
  EXPECT_EQ(e8.size(), 8u);
  EXPECT_EQ(self_intersections(e8), std::vector<std::int64_t>(8, -2));
  std::vector<int> valence(8, 0);
  for (const auto& [a, b] : e8.edges()) {
    ++valence[a];
    ++valence[b];
  }
  EXPECT_EQ(valence[e8.central()], 3);
}

TEST(DualGraph, Validation) {
  EXPECT_THROW(DualGraph({}, {}), InvalidInput);
  EXPECT_THROW(DualGraph({{-2, false}}, {}), InvalidInput);
  EXPECT_THROW(DualGraph({{-2, true}, {-2, true}}, {{0, 1}}), InvalidInput);
  EXPECT_THROW(DualGraph({{0, true}}, {}), InvalidInput);
  EXPECT_THROW(DualGraph({{-2, true}, {-2, false}}, {}), InvalidInput);
  EXPECT_THROW(DualGraph({{-2, true}, {-2, false}}, {{0, 0}}), InvalidInput);
  EXPECT_THROW(DualGraph({{-2, true}, {-2, false}, {-2, false}}, {{0, 1}, {0, 1}}), InvalidInput);
  // A branch node of valence 3 is not star-shaped.
  EXPECT_THROW(DualGraph({{-2, true}, {-2, false}, {-2, false}, {-2, false}, {-2, false}},
                         {{0, 1}, {1, 2}, {1, 3}, {1, 4}}),
               InvalidInput);
  EXPECT_NO_THROW(DualGraph({{-1, true}}, {}));
}

TEST(IntersectionMatrix, Examples) {
  EXPECT_EQ(intersection_matrix(build_graph(SeifertData(5, {}))), (RationalMatrix{{-5}}));
  EXPECT_EQ(intersection_matrix(build_graph(SeifertData(2, {{2, 1}}))),
            (RationalMatrix{{-2, 1}, {1, -2}}));
}

TEST(Discrepancies, Examples) {
  for (std::int64_t d = 1; d <= 30; ++d) {
    const DiscrepancyReport r = discrepancies(build_graph(SeifertData(d, {})));
    EXPECT_EQ(r.mld, Rational(2, d));
    EXPECT_EQ(r.log_discrepancies, std::vector<Rational>{Rational(2, d)});
  }
  const DiscrepancyReport smooth = discrepancies(build_graph(SeifertData(1, {})));
  EXPECT_EQ(smooth.mld, Rational(2));
  EXPECT_TRUE(smooth.is_klt);
}

TEST(Discrepancies, DuValGraphsAreCrepant) {
  std::vector<SeifertData> ade;
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (std::int64_t l = 1; l <= 6; ++l) {
      std::vector<SeifertBranch> br;
      if (k > 1) br.push_back({k, k - 1});
      if (l > 1) br.push_back({l, l - 1});
      ade.emplace_back(2, br);  // A_{k+l-1}
    }
  }
  for (std::int64_t n = 4; n <= 12; ++n) ade.emplace_back(2, std::vector<SeifertBranch>{{2, 1}, {2, 1}, {n - 2, n - 3}});
  ade.emplace_back(2, std::vector<SeifertBranch>{{2, 1}, {3, 2}, {3, 2}});
  ade.emplace_back(2, std::vector<SeifertBranch>{{2, 1}, {3, 2}, {4, 3}});
  ade.emplace_back(2, std::vector<SeifertBranch>{{2, 1}, {3, 2}, {5, 4}});
  for (const auto& s : ade) {
    const DualGraph g = build_graph(s);
    EXPECT_TRUE(is_negative_definite(intersection_matrix(g))) << s.str();
    const DiscrepancyReport r = discrepancies(g);
    EXPECT_EQ(r.log_discrepancies, std::vector<Rational>(g.size(), Rational(1))) << s.str();
    EXPECT_EQ(r.mld, Rational(1));
    EXPECT_EQ(r.canonical_index, 1);
  }
}

TEST(Discrepancies, NotContractible) {
  EXPECT_THROW(discrepancies(build_graph(SeifertData(1, {{2, 1}, {2, 1}}))), NotContractible);
  EXPECT_THROW(solve_log_discrepancies(RationalMatrix{{-1, 1}, {1, -1}}), NotContractible);
}

TEST(Discrepancies, CyclicQuotientIndex) {
  // 1/5(1,2): chain [3, 2] gives a = (3/5, 4/5).
  const DiscrepancyReport r = discrepancies(build_graph(SeifertData(3, {{2, 1}})));
  EXPECT_EQ(r.log_discrepancies, (std::vector<Rational>{Rational(3, 5), Rational(4, 5)}));
  EXPECT_EQ(r.mld, Rational(3, 5));
  EXPECT_EQ(r.canonical_index, 5);
}

TEST(BlowupOracle, Examples) {
  for (int rounds = 1; rounds <= 4; ++rounds) {
    EXPECT_EQ(mld_blowup_oracle(build_graph(SeifertData(5, {})), rounds), Rational(2, 5));
  }
  EXPECT_EQ(mld_blowup_oracle(build_graph(SeifertData(2, {{2, 1}, {2, 1}})), 3), Rational(1));
  EXPECT_EQ(mld_blowup_oracle(build_graph(SeifertData(1, {})), 5), Rational(2));
  EXPECT_THROW(mld_blowup_oracle(build_graph(SeifertData(1, {})), 0), InvalidInput);
  EXPECT_THROW(mld_blowup_oracle(build_graph(SeifertData(1, {{2, 1}, {3, 1}, {7, 1}})), 2),
               InvalidInput);
}

TEST(ToricOracle, Examples) {
  EXPECT_EQ(toric_mld_oracle(SeifertData(2, {})), Rational(1));
  EXPECT_EQ(toric_mld_oracle(SeifertData(2, {{2, 1}, {2, 1}})), Rational(1));
  for (std::int64_t d = 1; d <= 20; ++d) EXPECT_EQ(toric_mld_oracle(SeifertData(d, {})), Rational(2, d));
  EXPECT_THROW(toric_mld_oracle(SeifertData(2, {{2, 1}, {3, 2}, {5, 4}})), InvalidInput);
}

TEST(Resolve, RejectsBoundary) {
  EXPECT_EQ(resolve(ConeTriple(QDivisorP1::parse("inf:3"))).mld, Rational(2, 3));
  EXPECT_THROW(resolve(ConeTriple(QDivisorP1::parse("inf:3"), QDivisorP1::parse("0:1/2"))),
               InvalidInput);
}

// Actual blow-ups: the library's combination rule is checked against re-solving the
// blown-up (no longer star-shaped) intersection matrix from scratch.
RationalMatrix blow_up_node(const RationalMatrix& m, std::size_t i) {
  const std::size_t n = m.rows();
  RationalMatrix out(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = m(r, c);
  }
  out(i, i) -= Rational(1);
  out(n, n) = Rational(-1);
  out(i, n) = out(n, i) = Rational(1);
  return out;
}

RationalMatrix blow_up_crossing(const RationalMatrix& m, std::size_t i, std::size_t j) {
  RationalMatrix out = blow_up_node(m, i);
  const std::size_t n = m.rows();
  out(j, j) -= Rational(1);
  out(i, j) = out(j, i) = Rational(0);
  out(j, n) = out(n, j) = Rational(1);
  return out;
}

TEST(BlowupOracle, CombinationRuleMatchesExplicitBlowups) {
  const std::vector<SeifertData> cases{SeifertData(3, {{2, 1}}), SeifertData(2, {{2, 1}, {3, 2}, {5, 4}}),
                                       SeifertData(4, {{3, 1}, {5, 2}}), SeifertData(2, {{2, 1}, {2, 1}, {3, 1}})};
  for (const auto& s : cases) {
    const DualGraph g = build_graph(s);
    const RationalMatrix m = intersection_matrix(g);
    const std::vector<Rational> a = solve_log_discrepancies(m);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto b = solve_log_discrepancies(blow_up_node(m, i));
      EXPECT_EQ(b.back(), a[i] + Rational(1));
      EXPECT_EQ(std::vector<Rational>(b.begin(), b.end() - 1), a);
    }
    for (const auto& [i, j] : g.edges()) {
      const auto b = solve_log_discrepancies(blow_up_crossing(m, i, j));
      EXPECT_EQ(b.back(), a[i] + a[j]);
      EXPECT_EQ(std::vector<Rational>(b.begin(), b.end() - 1), a);
    }
  }
}

std::vector<SeifertData> random_seifert(std::mt19937_64& rng, int count, std::size_t max_branches) {
  std::uniform_int_distribution<std::int64_t> bdist(-1, 6);
  std::uniform_int_distribution<std::size_t> kdist(0, max_branches);
  std::uniform_int_distribution<std::int64_t> adist(2, 13);
  std::vector<SeifertData> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<SeifertBranch> br;
    const std::size_t k = kdist(rng);
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t alpha = adist(rng);
      std::int64_t beta = std::uniform_int_distribution<std::int64_t>(1, alpha - 1)(rng);
      while (std::gcd(alpha, beta) != 1) --beta;
      br.push_back({alpha, beta});
    }
    out.emplace_back(bdist(rng), br);
  }
  return out;
}

TEST(ResolutionProperty, NegativeDefiniteIffPositiveEuler) {
  std::mt19937_64 rng(5);
  for (const auto& s : random_seifert(rng, 600, 4)) {
    const bool positive = s.euler_number().sign() > 0;
    if (s.b() < 1) {
      EXPECT_FALSE(positive);  // such stars are not even valid dual graphs
      EXPECT_THROW(build_graph(s), InvalidInput);
      continue;
    }
    EXPECT_EQ(is_negative_definite(intersection_matrix(build_graph(s))), positive) << s.str();
  }
}

TEST(ResolutionProperty, AgreesWithIndependentSolver) {
  std::mt19937_64 rng(6);
  for (const auto& s : random_seifert(rng, 400, 4)) {
    if (s.euler_number().sign() <= 0) continue;
    std::vector<std::pair<std::int64_t, std::int64_t>> br;
    for (const auto& b : s.branches()) br.emplace_back(b.alpha, b.beta);
    const auto expected = oracle::log_discrepancies(oracle::star_matrix(s.b(), br));
    const DiscrepancyReport r = discrepancies(build_graph(s));
    ASSERT_EQ(r.log_discrepancies.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(r.log_discrepancies[i], Rational(expected[i].num(), expected[i].den())) << s.str();
    }
  }
}

TEST(ResolutionProperty, OraclesAgreeWithGraphSolve) {
  std::mt19937_64 rng(8);
  int toric = 0;
  int blowup = 0;
  for (const auto& s : random_seifert(rng, 300, 3)) {
    if (s.euler_number().sign() <= 0) continue;
    const DualGraph g = build_graph(s);
    const DiscrepancyReport r = discrepancies(g);
    if (s.branches().size() <= 2) {
      EXPECT_EQ(toric_mld_oracle(s), r.mld) << s.str();
      ++toric;
    }
    if (r.is_klt && g.size() <= 12) {
      EXPECT_EQ(mld_blowup_oracle(g, 3), r.mld) << s.str();
      ++blowup;
    }
  }
  EXPECT_GT(toric, 50);
  EXPECT_GT(blowup, 50);
}

}  // namespace
}  // namespace conesing
