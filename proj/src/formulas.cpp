#include "fatbetti/formulas.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace fatbetti {

namespace {

void require_two_point_args(int n, int a0, int a1) {
  if (n < 2) throw std::invalid_argument("two-point formulas need n >= 2");
  if (a1 < 1 || a0 < a1) throw std::invalid_argument("two-point formulas need a0 >= a1 >= 1");
}

void require_equal_mult_args(int n, int r) {
  if (n < 2) throw std::invalid_argument("equal-multiplicity formulas need n >= 2");
  if (r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
}

}  // namespace

BettiTable power_betti(int s, int d, const RingDescriptor& ring) {
  if (s < 1 || s > ring.num_vars) throw std::invalid_argument("power_betti: need 1 <= s <= n+1");
  if (d < 1) throw std::invalid_argument("power_betti: need d >= 1");
  auto t = BettiTable::quotient_of_proper(ring.num_vars);
  for (int q = 1; q <= ring.num_vars; ++q)
    t.add(q, q + d - 1, binom(d + s - 1, d + q - 1) * binom(d + q - 2, q - 1));
  return t;
}

BettiTable u_betti(int n, int a0, int a1) {
  require_two_point_args(n, a0, a1);
  auto t = BettiTable::quotient_of_proper(n + 1);
  for (int q = 1; q <= n + 1; ++q) {
    BigInt v = binom(a0 + n - 2, a0 + q - 1) * binom(a0 + q - 2, q - 1);
    for (int i = 1; i <= a0 - a1; ++i) v += binom(a0 - i + n - 2, a0 - i) * binom(n - 1, q - 1);
    t.add(q, q + a0 - 1, v);
  }
  return t;
}

BettiTable v_betti(int n, int a0, int a1) {
  require_two_point_args(n, a0, a1);
  auto t = BettiTable::quotient_of_proper(n + 1);
  for (int q = 1; q <= n + 1; ++q) {
    t.add(q, q + a0, binom(a1 + n - 3, a1 + q - 2) * binom(a1 + q - 3, q - 1));
    for (int i = 2; i <= a1; ++i)
      t.add(q, q + a0 + i - 1, binom(a1 - i + n - 2, a1 - i) * binom(n - 1, q - 1));
  }
  return t;
}

BettiTable ucapv_betti(int n, int a0, int a1) {
  require_two_point_args(n, a0, a1);
  auto t = BettiTable::quotient_of_proper(n + 1);
  // Stated as beta_{q-1, q+a0} for q >= 1; the q = 1 term is beta_{0,*}.
  for (int q = 2; q <= n + 2; ++q)
    t.add(q - 1, q + a0, binom(a1 + n - 2, a1 + q - 2) * binom(a1 + q - 3, q - 2));
  return t;
}

std::pair<BigInt, BigInt> two_point_identity(int n, int a1, int q) {
  BigInt lhs = binom(a1 + n - 3, a1 + q - 2) * binom(a1 + q - 3, q - 1) +
               binom(a1 + n - 2, a1 + q - 2) * binom(a1 + q - 3, q - 2);
  BigInt rhs = binom(a1 + n - 3, a1 - 1) * binom(n - 1, q - 1);
  return {lhs, rhs};
}

BettiTable two_points_betti(int n, int a0, int a1) {
  require_two_point_args(n, a0, a1);
  auto t = BettiTable::quotient_of_proper(n + 1);
  for (int q = 1; q <= n + 1; ++q) {
    BigInt first = binom(a0 + n - 2, a0 + q - 1) * binom(a0 + q - 2, q - 1);
    for (int i = 1; i <= a0 - a1; ++i) first += binom(a0 - i + n - 2, a0 - i) * binom(n - 1, q - 1);
    t.add(q, q + a0 - 1, first);
    for (int i = 0; i <= a1 - 1; ++i)
      t.add(q, q + a0 + i, binom(a1 - i + n - 3, a1 - i - 1) * binom(n - 1, q - 1));
  }
  return t;
}

BettiTable double_points_betti(int n, int r) {
  require_equal_mult_args(n, r);
  auto t = BettiTable::quotient_of_proper(n + 1);
  for (int q = 1; q <= n + 1; ++q) {
    t.add(q, q + 1, binom(n - r + 1, q + 1) * binom(q, q - 1));
    BigInt middle = 0;
    for (int i = 0; i <= r - 1; ++i) middle += (n - r) * (r - i) * binom(n - i - 1, q - 1);
    for (int i = 0; i <= r - 2; ++i) middle += binom(r - i, 2) * binom(n - i - 2, q - 1);
    t.add(q, q + 2, middle);
    t.add(q, q + 3, binom(r + 1, 2) * binom(n - 1, q - 1));
  }
  return t;
}

BettiTable triple_points_betti(int n, int r) {
  require_equal_mult_args(n, r);
  auto t = BettiTable::quotient_of_proper(n + 1);
  for (int q = 1; q <= n + 1; ++q) {
    t.add(q, q + 2, binom(n - r + 2, q + 2) * binom(q + 1, q - 1));

    BigInt second = 0;
    for (int i = 0; i <= r - 1; ++i)
      second += (r - i) * binom(n - r + 1, 2) * binom(n - i - 1, q - 1);
    for (int i = 0; i <= r - 2; ++i) second += binom(r - i, 2) * (n - r) * binom(n - i - 2, q - 1);
    for (int i = 0; i <= r - 3; ++i) second += binom(r - i, 3) * binom(n - i - 3, q - 1);
    t.add(q, q + 3, second);

    t.add(q, q + 4,
          2 * binom(r + 1, 3) * binom(n - 1, q - 1) + binom(r + 1, 3) * binom(n - 2, q - 1) +
              (n - r) * binom(r + 1, 2) * binom(n - 1, q - 1));
    t.add(q, q + 5, binom(r + 1, 2) * binom(n - 1, q - 1));
  }
  return t;
}

BettiTable ek_stable_betti(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) throw std::invalid_argument("ek_stable_betti: ideal is not stable");
  const int nv = ideal.ring().num_vars;
  BettiTable t(nv);
  if (ideal.is_unit()) return t;
  t.set(0, 0, 1);
  for (const auto& m : ideal.gens())
    for (int i = 1; i <= m.max_index() + 1; ++i)
      t.add(i, i + m.degree() - 1, binom(m.max_index(), i - 1));
  return t;
}

BettiTable ghp_holes_betti(int d, const HoleBounds& bounds, const RingDescriptor& ring) {
  if (static_cast<int>(bounds.limits.size()) != ring.num_vars)
    throw std::invalid_argument("hole bounds must cover every variable");
  const auto L = apply_holes(MonomialIdeal::variable_power(ring, variable_range(0, ring.num_vars - 1), d),
                             bounds);
  BettiTable t(ring.num_vars);
  if (L.is_unit()) return t;
  t.set(0, 0, 1);
  for (const auto& m : L.gens()) {
    const int free_dirs = m.max_index() - bounds.saturated_below_max(m);
    for (int i = 1; i <= free_dirs + 1; ++i) t.add(i, i + d - 1, binom(free_dirs, i - 1));
  }
  return t;
}

BettiTable ce_deletion_betti(int d, const HoleBounds& bounds, const RingDescriptor& ring) {
  if (static_cast<int>(bounds.limits.size()) != ring.num_vars)
    throw std::invalid_argument("hole bounds must cover every variable");
  BettiTable t(ring.num_vars);
  if (d == 0) {
    if (bounds.admits(Monomial::one(ring.num_vars))) return t;  // unit ideal
    t.set(0, 0, 1);
    return t;
  }
  t.set(0, 0, 1);
  for (const auto& m : monomials_of_degree(ring, d)) {
    const int top = m.max_index();
    for (std::uint32_t S = 0; S < (1u << top); ++S) {
      bool survives = true;
      for (int k = 0; k < ring.num_vars && survives; ++k) {
        const auto& lim = bounds.limits[static_cast<std::size_t>(k)];
        const int degree_in_k = m[k] + ((k < top && (S >> k) & 1u) ? 1 : 0);
        if (lim && degree_in_k > *lim - 1) survives = false;
      }
      if (!survives) continue;
      const int size = std::popcount(S);
      t.add(size + 1, d + size, std::uint64_t{1});
    }
  }
  return t;
}

BettiTable hh_pipeline_betti(const FatPointConfig& config) {
  config.validate();
  if (!config.coordinate_placement())
    throw std::invalid_argument("hh_pipeline_betti needs coordinate placement");
  const RingDescriptor ring = config.ring();
  const int nv = ring.num_vars;
  const int a0 = config.multiplicities.front();
  const int top = top_generator_degree(config);

  // Total Betti numbers of R/I_<D>; zero ideal below a0.
  auto totals = [&](int D) {
    std::vector<BigInt> beta(static_cast<std::size_t>(nv) + 2, 0);
    if (D < a0) return beta;
    const auto comp = component_as_lex_with_holes(config, D - a0);
    const auto table = ghp_holes_betti(comp.degree, comp.bounds, ring);
    for (int i = 1; i <= nv; ++i) beta[static_cast<std::size_t>(i)] = table.total(i);
    return beta;
  };
  auto row = [&](int d) {
    const auto upper = totals(d + 1);
    const auto lower = totals(d);
    std::vector<BigInt> out(static_cast<std::size_t>(nv) + 1, 0);
    for (int i = 1; i <= nv; ++i)
      out[static_cast<std::size_t>(i)] = upper[static_cast<std::size_t>(i)] +
                                         lower[static_cast<std::size_t>(i) + 1] -
                                         lower[1] * binom(nv, i);
    return out;
  };

  auto t = BettiTable::quotient_of_proper(nv);
  for (int d = a0 - 1; d <= top - 1; ++d) {
    const auto values = row(d);
    for (int i = 1; i <= nv; ++i) t.add(i, i + d, values[static_cast<std::size_t>(i)]);
  }
  // Past the top generator degree I_<d+1> = m I_<d> and the row must cancel.
  for (const auto& v : row(top))
    if (v != 0)
      throw std::domain_error("hh_pipeline_betti: row " + std::to_string(top) +
                              " past the top generator degree does not vanish");
  return t;
}

}  // namespace fatbetti
