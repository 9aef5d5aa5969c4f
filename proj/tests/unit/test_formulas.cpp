#include "fatbetti/formulas.hpp"
#include "fatbetti/koszul.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fatbetti;

namespace {

MonomialIdeal monomial_power_times(const RingDescriptor& ring, const Monomial& m,
                                   const std::vector<int>& support, int d) {
  return multiply(MonomialIdeal::variable_power(ring, support, d), m);
}

Monomial x(int nv, std::initializer_list<std::pair<int, int>> powers) {
  std::vector<int> e(static_cast<std::size_t>(nv), 0);
  for (auto [i, p] : powers) e[static_cast<std::size_t>(i)] = p;
  return Monomial(e);
}

// U = sum_t x1^t (x2..xn)^{a0-t}, V = sum_t x0^t x1^{a0-a1+t} (x2..xn)^{a1-t}.
MonomialIdeal U_of(int n, int a0, int a1) {
  const RingDescriptor ring(n + 1);
  MonomialIdeal U(ring);
  for (int t = 0; t <= a0 - a1; ++t)
    U = sum(U, monomial_power_times(ring, x(n + 1, {{1, t}}), variable_range(2, n), a0 - t));
  return U;
}

MonomialIdeal V_of(int n, int a0, int a1) {
  const RingDescriptor ring(n + 1);
  MonomialIdeal V(ring);
  for (int t = 1; t <= a1; ++t)
    V = sum(V, monomial_power_times(ring, x(n + 1, {{0, t}, {1, a0 - a1 + t}}), variable_range(2, n),
                                    a1 - t));
  return V;
}

// Strongly stable closure of a random set of same-degree monomials.
MonomialIdeal random_stable(std::mt19937& rng, const RingDescriptor& ring, int d, int seeds) {
  auto all = monomials_of_degree(ring, d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::set<Monomial> closed;
  std::vector<Monomial> stack;
  for (int k = 0; k < seeds; ++k) stack.push_back(all[pick(rng)]);
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    if (!closed.insert(m).second) continue;
    for (int j = 1; j < ring.num_vars; ++j)
      if (m[j] > 0)
        for (int i = 0; i < j; ++i) stack.push_back(m.times_variable(i) / Monomial::variable(ring.num_vars, j));
  }
  return MonomialIdeal(ring, {closed.begin(), closed.end()});
}

BettiTable diagram(int nv, const std::vector<std::vector<std::uint64_t>>& rows,
                   const std::vector<int>& row_index) {
  auto t = BettiTable::quotient_of_proper(nv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      if (rows[r][i]) t.set(static_cast<int>(i) + 1, static_cast<int>(i) + 1 + row_index[r], rows[r][i]);
  return t;
}

}  // namespace

TEST(PowerBetti, MatchesOracle) {
  for (int nv = 2; nv <= 5; ++nv)
    for (int s = 1; s <= nv; ++s)
      for (int d = 1; d <= 4; ++d) {
        const RingDescriptor ring(nv);
        const auto I = MonomialIdeal::variable_power(ring, variable_range(nv - s, nv - 1), d);
        EXPECT_EQ(power_betti(s, d, ring), koszul_betti(I)) << nv << " " << s << " " << d;
      }
}

TEST(TwoPoints, PublishedDiagramForMultiplicitiesFiveAndFour) {
  const auto expected = diagram(6,
                                {{91, 280, 330, 175, 35},
                                 {20, 80, 120, 80, 20},
                                 {10, 40, 60, 40, 10},
                                 {4, 16, 24, 16, 4},
                                 {1, 4, 6, 4, 1}},
                                {4, 5, 6, 7, 8});
  EXPECT_EQ(two_points_betti(5, 5, 4), expected);
  EXPECT_EQ(two_points_betti(5, 5, 4).total(1), 126u);
}

TEST(TwoPoints, MatchesOracle) {
  for (int n = 2; n <= 4; ++n)
    for (int a0 = 1; a0 <= 4; ++a0)
      for (int a1 = 1; a1 <= a0; ++a1) {
        const auto cfg = FatPointConfig::coordinate_points(n, {a0, a1});
        EXPECT_EQ(two_points_betti(n, a0, a1), koszul_betti(fat_point_ideal(cfg)))
            << n << " " << a0 << " " << a1;
      }
}

TEST(TwoPoints, SplittingPiecesMatchOracle) {
  for (int n = 2; n <= 4; ++n)
    for (int a0 = 1; a0 <= 4; ++a0)
      for (int a1 = 1; a1 <= a0; ++a1) {
        const RingDescriptor ring(n + 1);
        const auto U = U_of(n, a0, a1), V = V_of(n, a0, a1);
        EXPECT_EQ(u_betti(n, a0, a1), koszul_betti(U)) << n << a0 << a1;
        EXPECT_EQ(v_betti(n, a0, a1), koszul_betti(V)) << n << a0 << a1;
        EXPECT_EQ(ucapv_betti(n, a0, a1), koszul_betti(intersect(U, V))) << n << a0 << a1;
        EXPECT_EQ(intersect(U, V),
                  monomial_power_times(ring, x(n + 1, {{0, 1}, {1, a0 - a1 + 1}}),
                                       variable_range(2, n), a1));
      }
}

TEST(TwoPoints, BinomialIdentity) {
  for (int n = 2; n <= 12; ++n)
    for (int a1 = 1; a1 <= 12; ++a1)
      for (int q = 1; q <= n + 1; ++q) {
        const auto [lhs, rhs] = two_point_identity(n, a1, q);
        EXPECT_EQ(lhs, rhs) << n << " " << a1 << " " << q;
      }
}

TEST(EqualMultiplicities, DoublePointsMatchOracle) {
  for (int n = 2; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto cfg = FatPointConfig::coordinate_points(n, std::vector<int>(r + 1, 2));
      EXPECT_EQ(double_points_betti(n, r), koszul_betti(fat_point_ideal(cfg))) << n << " " << r;
    }
}

TEST(EqualMultiplicities, TriplePointsMatchOracle) {
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto cfg = FatPointConfig::coordinate_points(n, std::vector<int>(r + 1, 3));
      EXPECT_EQ(triple_points_betti(n, r), koszul_betti(fat_point_ideal(cfg))) << n << " " << r;
    }
}

TEST(EqualMultiplicities, PublishedDiagramForFourTriplePoints) {
  const auto expected = diagram(6,
                                {{4, 3, 0, 0, 0},
                                 {27, 84, 96, 48, 9},
                                 {24, 92, 132, 84, 20},
                                 {6, 24, 36, 24, 6}},
                                {2, 3, 4, 5});
  EXPECT_EQ(triple_points_betti(5, 3), expected);
}

TEST(EliahouKervaire, MatchesOracleOnStableIdeals) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const RingDescriptor ring(2 + trial % 4);
    MonomialIdeal I = random_stable(rng, ring, 2 + trial % 3, 2);
    if (trial % 2) I = sum(I, random_stable(rng, ring, 4, 1));
    ASSERT_TRUE(is_stable(I));
    EXPECT_EQ(ek_stable_betti(I), koszul_betti(I)) << I.to_string();
  }
}

TEST(EliahouKervaire, RejectsNonStable) {
  const RingDescriptor ring(3);
  EXPECT_THROW(ek_stable_betti(MonomialIdeal(ring, {Monomial{0, 1, 0}})), std::invalid_argument);
}

TEST(LexWithHoles, BothRoutesMatchOracle) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = 2 + trial % 4;
    const int d = 1 + trial % 4;
    const RingDescriptor ring(nv);
    HoleBounds b = HoleBounds::unbounded(nv);
    std::uniform_int_distribution<int> lim(1, d + 1), coin(0, 2);
    for (auto& l : b.limits)
      if (coin(rng)) l = lim(rng);
    const auto L = apply_holes(MonomialIdeal::variable_power(ring, variable_range(0, nv - 1), d), b);
    if (L.is_zero()) continue;
    const auto oracle = koszul_betti(L);
    EXPECT_EQ(ghp_holes_betti(d, b, ring), oracle) << L.to_string();
    EXPECT_EQ(ce_deletion_betti(d, b, ring), oracle) << L.to_string();
  }
}

TEST(Pipeline, MatchesOracle) {
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {2, {1}}, {2, {3}}, {2, {2, 2}}, {2, {3, 2, 1}}, {3, {2, 1}}, {3, {3, 2, 2}},
      {3, {2, 2, 2, 2}}, {3, {4, 3, 1, 1}}, {4, {2, 2, 1}}, {4, {3, 3, 3, 2, 1}}};
  for (const auto& [n, mults] : cases) {
    const auto cfg = FatPointConfig::coordinate_points(n, mults);
    EXPECT_EQ(hh_pipeline_betti(cfg), koszul_betti(fat_point_ideal(cfg))) << n;
  }
}

TEST(Pipeline, AgreesWithSpecialisedFormulas) {
  EXPECT_EQ(hh_pipeline_betti(FatPointConfig::coordinate_points(5, {5, 4})), two_points_betti(5, 5, 4));
  EXPECT_EQ(hh_pipeline_betti(FatPointConfig::coordinate_points(5, {3, 3, 3, 3})),
            triple_points_betti(5, 3));
  EXPECT_EQ(hh_pipeline_betti(FatPointConfig::coordinate_points(6, {2, 2, 2, 2, 2})),
            double_points_betti(6, 4));
  EXPECT_EQ(hh_pipeline_betti(FatPointConfig::coordinate_points(4, {4})),
            power_betti(4, 4, RingDescriptor(5)));
}
