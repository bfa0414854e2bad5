#include "conesing/cone.hpp"
#include "conesing/error.hpp"
#include "conesing/resolution.hpp"

#include <gtest/gtest.h>

#include <random>

namespace conesing {
namespace {

ConeTriple cone(const char* d, const char* b = "") {
  return ConeTriple(QDivisorP1::parse(d), QDivisorP1::parse(b));
}

TEST(ConeTriple, Invariants) {
  EXPECT_THROW(cone("inf:0"), InvalidInput);
  EXPECT_THROW(cone("0:1/2,inf:-1"), InvalidInput);
  EXPECT_THROW(cone("inf:1", "0:1"), InvalidInput);
  EXPECT_THROW(cone("inf:1", "0:-1/2"), InvalidInput);
  EXPECT_NO_THROW(cone("inf:1", "0:1/2"));
}

TEST(LogFanoQuotient, Examples) {
  const auto q1 = log_fano_quotient(cone("inf:2"));
  EXPECT_TRUE(q1.delta.empty());
  EXPECT_TRUE(q1.boundary.empty());
  EXPECT_EQ(log_fano_quotient(cone("0:1/2,inf:1/2")).delta, QDivisorP1::parse("0:1/2,inf:1/2"));
  EXPECT_THROW(log_fano_quotient(cone("0:1/2,1:1/2,inf:1/2,2:1/2")), NotLogFano);
  EXPECT_FALSE(is_klt_cone(cone("0:1/2,1:1/2,inf:1/2,2:1/2")));
  EXPECT_THROW(log_fano_quotient(cone("0:1/2,inf:1", "0:1/2")), NotLogFano);  // 1/2 + 1/2 at 0
  EXPECT_TRUE(is_klt_cone(cone("0:1/2,1:1/3,inf:-4/5")));
}

TEST(FanoAngle, Examples) {
  for (std::int64_t d = 1; d <= 12; ++d) {
    const ConeTriple t(QDivisorP1::point(PointP1::infinity(), d));
    EXPECT_EQ(fano_angle(t), Rational(d, 2));
    EXPECT_EQ(vertex_log_discrepancy(t), Rational(2, d));
  }
  EXPECT_EQ(fano_angle(cone("0:1/2,inf:1/2")), Rational(1));
  EXPECT_EQ(vertex_log_discrepancy(cone("0:1/2,inf:1/2")), Rational(1));
  EXPECT_EQ(fano_angle(cone("0:1/2,1:1/3,inf:-4/5")), Rational(1));
  EXPECT_EQ(vertex_log_discrepancy(cone("0:1/2,1:1/3,inf:-4/5")), Rational(1));
}

TEST(Isotropy, Examples) {
  EXPECT_EQ(isotropy_at(cone("5:3"), PointP1::at(5)), 1);
  EXPECT_EQ(isotropy_at(cone("5:3"), PointP1::infinity()), 1);
  EXPECT_EQ(max_isotropy(cone("5:3")), 1);
  EXPECT_EQ(isotropy_at(cone("0:1/2,1:2/3"), PointP1::at(1)), 3);
  EXPECT_EQ(max_isotropy(cone("0:1/2,1:2/3")), 6);
  EXPECT_EQ(max_isotropy(cone("0:1/2,inf:1/2")), 2);
}

TEST(Veronese, Examples) {
  const ConeTriple t = cone("0:1/2,inf:1/2");
  EXPECT_EQ(veronese(t, 1), t);
  EXPECT_EQ(veronese(t, 2), cone("0:1,inf:1"));
  EXPECT_EQ(max_isotropy(veronese(t, 2)), 1);
  EXPECT_EQ(veronese(cone("inf:3"), 2), cone("inf:6"));
  EXPECT_EQ(veronese(cone("inf:1", "0:1/3"), 4).boundary(), QDivisorP1::parse("0:1/3"));
  EXPECT_THROW(veronese(t, 0), InvalidInput);
}

TEST(Epsilon0Bound, Examples) {
  EXPECT_EQ(epsilon0_bound(1, 2), Rational(1, 2));
  EXPECT_EQ(epsilon0_bound(Rational(1, 3), 1), Rational(1, 3));
  EXPECT_EQ(epsilon0_bound(1, Rational(1, 2)), Rational(1));
  EXPECT_THROW(epsilon0_bound(0, 1), InvalidInput);
  EXPECT_THROW(epsilon0_bound(1, -1), InvalidInput);
}

TEST(Summary, Fields) {
  const ConeSummary s = summarize(cone("0:1/2,1:2/3,inf:1"));
  EXPECT_EQ(s.degree, Rational(13, 6));
  EXPECT_EQ(s.cartier_index, 6);
  EXPECT_EQ(s.max_isotropy, 6);
  EXPECT_EQ(s.fano_angle, Rational(13, 6) / (Rational(2) - Rational(1, 2) - Rational(2, 3)));
  EXPECT_EQ(s.vertex_log_discrepancy, s.fano_angle.reciprocal());
}

TEST(CentralFiber, Examples) {
  const CentralFiber xd = central_fiber_of_plt_blowup({{}, QDivisorP1::parse("inf:5"), 1});
  EXPECT_EQ(xd.cone, cone("inf:5"));
  EXPECT_EQ(xd.cover, cone("inf:5"));
  EXPECT_EQ(xd.degree, 1);

  const CentralFiber a1 = central_fiber_of_plt_blowup({{2, 2}, QDivisorP1::parse("0:1/2,inf:1/2"), 2});
  EXPECT_EQ(a1.cover, cone("inf:2"));
  EXPECT_EQ(a1.degree, 2);
  EXPECT_EQ(max_isotropy(a1.cover), 1);

  const CentralFiber half = central_fiber_of_plt_blowup({{2}, QDivisorP1::parse("0:1/2"), 2});
  EXPECT_EQ(half.cover, cone("inf:1"));
  EXPECT_EQ(half.degree, 2);
}

TEST(CentralFiber, RejectsBadData) {
  EXPECT_THROW(central_fiber_of_plt_blowup({{2}, QDivisorP1::parse("0:1/2"), 1}), InvalidInput);
  EXPECT_THROW(central_fiber_of_plt_blowup({{3}, QDivisorP1::parse("0:1/2"), 6}), InvalidInput);
  EXPECT_THROW(central_fiber_of_plt_blowup({{}, QDivisorP1::parse("inf:-1"), 1}), InvalidInput);
  EXPECT_THROW(central_fiber_of_plt_blowup({{}, QDivisorP1::parse("inf:1"), 0}), InvalidInput);
  EXPECT_THROW(central_fiber_of_plt_blowup(
                   {{2, 2, 2, 2}, QDivisorP1::parse("0:1/2,1:1/2,2:1/2,inf:1/2"), 2}),
               InvalidInput);
  // q = 1 entries carry no Diff and are ignored.
  EXPECT_NO_THROW(central_fiber_of_plt_blowup({{1, 2}, QDivisorP1::parse("0:1/2"), 2}));
}

TEST(CentralFiber, VertexBlowupRoundTrip) {
  const ConeTriple t = cone("0:1/2,1:1/3,inf:-4/5");
  const PltBlowupData data = vertex_blowup_data(t);
  EXPECT_EQ(data.m, 30);
  EXPECT_EQ(data.minus_e_degree(), Rational(1, 30));
  const CentralFiber f = central_fiber_of_plt_blowup(data);
  EXPECT_EQ(f.cone.polarization(), canonical_form(t.polarization()));
  EXPECT_EQ(f.cover, cone("inf:1"));
  EXPECT_EQ(max_isotropy(f.cover), 1);
}

QDivisorP1 random_polarization(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> npts(0, 3);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> num(-6, 8);
  for (;;) {
    QDivisorP1 d;
    const int k = npts(rng);
    for (int i = 0; i < k; ++i) d.add(PointP1::at(i), Rational(num(rng), den(rng)));
    d.add(PointP1::infinity(), Rational(num(rng), den(rng)));
    if (degree(d).sign() > 0) return d;
  }
}

TEST(ConeProperty, VeroneseIsotropyLaw) {
  std::mt19937_64 rng(2019);
  std::uniform_int_distribution<std::int64_t> mdist(1, 12);
  for (int i = 0; i < 500; ++i) {
    const ConeTriple t(random_polarization(rng));
    const std::int64_t m = mdist(rng);
    EXPECT_LE(max_isotropy(t), m * max_isotropy(veronese(t, m))) << t.polarization().str();
    const std::int64_t c = cartier_index(t.polarization());
    EXPECT_EQ(max_isotropy(veronese(t, c)), 1);
  }
}

TEST(ConeProperty, BoundaryNeverShrinksTheAngle) {
  std::mt19937_64 rng(2020);
  std::uniform_int_distribution<int> den(2, 9);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    const QDivisorP1 d = random_polarization(rng);
    if (!is_klt_cone(ConeTriple(d))) continue;
    const int q = den(rng);
    const ConeTriple with_b(d, QDivisorP1::point(PointP1::at(Rational(1, 2)), Rational(1, q)));
    if (!is_klt_cone(with_b)) continue;
    ++compared;
    EXPECT_GE(fano_angle(with_b), fano_angle(ConeTriple(d)));
  }
  EXPECT_GT(compared, 100);
}

TEST(ConeProperty, VertexMatchesCentralNode) {
  std::mt19937_64 rng(2021);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const ConeTriple t(random_polarization(rng));
    if (!is_klt_cone(t) || fractional_profile(t.polarization()).size() > 3) continue;
    const DualGraph g = build_graph(normalize_seifert(t.polarization()));
    const DiscrepancyReport r = discrepancies(g);
    EXPECT_EQ(r.log_discrepancies[g.central()], vertex_log_discrepancy(t));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace conesing
