#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "srge/wick_engine.hpp"

using namespace srge;

TEST(TaylorSeries, ReciprocalAndPow) {
  cplx c(0.3, -0.2), a(1.1, 0.4);
  // 1/(z - a) around c: -(1/(a-c)) sum ((z-c)/(a-c))^j
  auto inv = (TaylorSeries::identity(c, 8) - a).reciprocal();
  for (int j = 0; j <= 8; ++j) EXPECT_NEAR(std::abs(inv[j] + std::pow(a - c, -(j + 1))), 0, 1e-12);
  auto p3 = (TaylorSeries::identity(c, 6) - a).pow(3);
  EXPECT_NEAR(std::abs(p3[0] - std::pow(c - a, 3)), 0, 1e-13);
  EXPECT_NEAR(std::abs(p3[2] - 3.0 * (c - a)), 0, 1e-13);
  EXPECT_NEAR(std::abs(p3[3] - 1.0), 0, 1e-13);
  EXPECT_NEAR(std::abs(p3[4]), 0, 1e-13);
  auto m2 = (TaylorSeries::identity(c, 6) - a).pow(-2);
  auto one = m2 * (TaylorSeries::identity(c, 6) - a).pow(2);
  EXPECT_NEAR(std::abs(one[0] - 1.0), 0, 1e-12);
  for (int j = 1; j <= 6; ++j) EXPECT_NEAR(std::abs(one[j]), 0, 1e-10);
}

TEST(TaylorSeries, DerivativesMatchFiniteDifferences) {
  // f(z) = z^3 / (z + 2), derivatives by central differences of the closed form
  cplx c(0.4, 0.7);
  auto z = TaylorSeries::identity(c, 5);
  auto f = z.pow(3) * (z + cplx(2.0)).reciprocal();
  auto fz = [](cplx x) { return x * x * x / (x + 2.0); };
  double h = 1e-3;
  cplx d1 = (fz(c + h) - fz(c - h)) / (2 * h);
  cplx d2 = (fz(c + h) - 2.0 * fz(c) + fz(c - h)) / (h * h);
  EXPECT_NEAR(std::abs(deriv_at(f, 0) - fz(c)), 0, 1e-13);
  EXPECT_NEAR(std::abs(deriv_at(f, 1) - d1), 0, 1e-6);
  EXPECT_NEAR(std::abs(deriv_at(f, 2) - d2), 0, 1e-5);
}

TEST(TaylorSeries, MismatchedCentersThrow) {
  auto a = TaylorSeries::identity(0.0, 3);
  auto b = TaylorSeries::identity(1.0, 3);
  EXPECT_THROW(a + b, DomainError);
}

TEST(Splits, EnumeratesAllSubsets) {
  auto s = splits(4);
  EXPECT_EQ(s.size(), 16u);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    EXPECT_EQ(s[mask].vertex_set.size() + s[mask].pair_set.size(), 4u);
    EXPECT_EQ(int(s[mask].vertex_set.size()), std::popcount(mask));
  }
  EXPECT_THROW(splits(kMaxModes + 1), DomainError);
}

TEST(PerfectMatchings, DoubleFactorialCount) {
  std::vector<int> pos;
  std::size_t expected = 1;
  for (int l = 1; l <= 5; ++l) {
    pos.push_back(2 * l - 2);
    pos.push_back(2 * l - 1);
    expected *= 2 * l - 1;
    auto ms = perfect_matchings(pos);
    EXPECT_EQ(ms.size(), expected);
    std::set<Pairing> distinct(ms.begin(), ms.end());
    EXPECT_EQ(distinct.size(), expected);
  }
  EXPECT_TRUE(perfect_matchings({1, 2, 3}).empty());
}

TEST(PairValue, N1ClosedFormMatchesResidues) {
  for (double r : {0.2, 0.5, 0.73}) {
    auto g = SheetGeometry::make(1, r);
    for (int kp = 1; kp <= 4; ++kp)
      for (int kq = 1; kq <= 4; ++kq)
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            EXPECT_NEAR(std::abs(pair_value(g, p, kp, q, kq) - pair_value_n1(p + 1, q + 1, kp, kq)), 0, 1e-9)
                << r << " " << p << q << kp << kq;
  }
}

TEST(PairValue, N1MatchesQuadrature) {
  for (auto [p, q, kp, kq] : std::vector<std::array<int, 4>>{{1, 2, 2, 2}, {1, 1, 1, 2}, {2, 1, 3, 1}}) {
    cplx quad = oracle::pair_value_quadrature(1, p, kp, q, kq, 0.4, 0.05, 512);
    EXPECT_NEAR(std::abs(quad - pair_value_n1(p, q, kp, kq)), 0, 1e-8);
  }
}

TEST(PairValue, N2MatchesQuadrature) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ur(0.2, 0.8);
  std::uniform_int_distribution<int> sheet(1, 4), k(1, 3);
  for (int trial = 0; trial < 6; ++trial) {
    double r = ur(rng);
    int p = sheet(rng), q = sheet(rng), kp = k(rng), kq = k(rng);
    cplx quad = oracle::pair_value_quadrature(2, p, kp, q, kq, r, 0.05, 512);
    EXPECT_NEAR(std::abs(quad - pair_value_n2(p, q, kp, kq, r)), 0, 1e-8) << p << q << kp << kq << " r=" << r;
  }
}

TEST(PairValue, Symmetric) {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int kp = 1; kp <= 3; ++kp)
        for (int kq = 1; kq <= 3; ++kq)
          EXPECT_NEAR(std::abs(pair_value_n2(p, q, kp, kq, 0.37) - pair_value_n2(q, p, kq, kp, 0.37)), 0, 1e-10);
}

TEST(PairValue, BadSheet) {
  EXPECT_THROW(pair_value_n1(0, 1, 1, 1), DomainError);
  EXPECT_THROW(pair_value_n2(5, 1, 1, 1, 0.5), DomainError);
}

TEST(VertexTerm, N1FluxPartMatchesClosedForm) {
  // theta part reduces to -L(k)/(2 pi), L = sigma beta (e^{-2 pi i sigma r k} - 1); alpha part vanishes.
  for (double r : {0.15, 0.5, 0.8})
    for (int k = 1; k <= 5; ++k)
      for (int sheet = 0; sheet < 2; ++sheet) {
        auto g = SheetGeometry::make(1, r);
        double beta = 1.3, alpha = 0.7;
        auto v = vertex_term(g, sheet, k, beta, {alpha, -alpha});
        int s = sheet == 0 ? 1 : -1;
        cplx L = double(s) * beta * (std::polar(1.0, -2 * kPi * s * r * k) - 1.0);
        EXPECT_NEAR(std::abs(v.c1 + L / (2 * kPi)), 0, 1e-12);
        EXPECT_NEAR(std::abs(v.c0), 0, 1e-12);
      }
}

TEST(AssembleContractions, MatchesExplicitEnumeration) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  const int m = 6;
  std::vector<VertexTerm> v(m);
  for (auto& t : v) t = {cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
  std::vector<std::vector<cplx>> pair(m, std::vector<cplx>(m));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) pair[a][b] = pair[b][a] = cplx(u(rng), u(rng));
  auto got = assemble_contractions(v, pair);
  for (double t : {-1.2, 0.4, 2.0}) {
    cplx ref(0.0);
    for (auto& s : splits(m)) {
      cplx pv(1.0);
      for (int i : s.vertex_set) pv *= v[i].c0 + v[i].c1 * t;
      cplx haf(0.0);
      for (auto& pr : perfect_matchings(s.pair_set)) {
        cplx x(1.0);
        for (auto [a, b] : pr) x *= pair[a][b];
        haf += x;
      }
      if (s.pair_set.empty()) haf = 1.0;
      ref += pv * haf;
    }
    EXPECT_NEAR(std::abs(oracle::horner(got, t) - ref), 0, 1e-11);
  }
}

TEST(Modes, BudgetAndFlatten) {
  auto f = flatten_modes({ChiralModeList{1, 2}, ChiralModeList{}, ChiralModeList{3}});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2].sheet, 2);
  EXPECT_EQ(f[2].k, 3);
  EXPECT_THROW(check_mode_budget(kMaxModes + 1), DomainError);
}
