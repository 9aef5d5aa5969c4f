#include "fatbetti/mapping_cone.hpp"

#include "fatbetti/fat_points.hpp"
#include "fatbetti/koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatbetti {

BettiTable cone_contribution(int num_vars, int s, int degree) {
  BettiTable t(num_vars);
  for (int q = 1; q <= s + 1; ++q) t.add(q, degree + q - 1, binom(s, q - 1));
  return t;
}

ConeTrace iterate_cone(const MonomialIdeal& seed, const BettiTable& seed_table,
                       const std::vector<Monomial>& additions) {
  for (std::size_t k = 1; k < additions.size(); ++k)
    if (additions[k].degree() < additions[k - 1].degree())
      throw std::invalid_argument("iterate_cone: additions must be weakly increasing in degree");
  ConeTrace trace(seed);
  trace.table = seed_table;
  const int nv = seed.ring().num_vars;
  for (const auto& m : additions) {
    ConeStep step{m, quotient_by_monomial(trace.ideal, m), std::nullopt, false, BettiTable(nv)};
    step.variables = step.colon.variable_support();
    step.regularity_ok = trace.table.regularity() <= m.degree() - 1;
    if (step.variables) {
      step.contribution = cone_contribution(nv, static_cast<int>(step.variables->size()), m.degree());
      for (const auto& [key, v] : step.contribution.entries()) trace.table.add(key.first, key.second, v);
    }
    trace.certified = trace.certified && step.minimal();
    trace.ideal = sum(trace.ideal, MonomialIdeal(trace.ideal.ring(), {m}));
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

bool check_minmap_hypothesis(const MonomialIdeal& J, const Monomial& m, std::optional<int> degree_cap) {
  if (J.contains(m)) throw std::invalid_argument("check_minmap_hypothesis: m lies in J");
  if (!quotient_by_monomial(J, m).variable_support()) return false;
  return koszul_betti(J, degree_cap).regularity() <= m.degree() - 1;
}

OrderSearch search_good_order(const MonomialIdeal& seed, std::vector<Monomial> additions) {
  std::sort(additions.begin(), additions.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  OrderSearch out{{}, {}, seed};
  while (!additions.empty()) {
    const int d = additions.front().degree();
    auto pick = additions.end();
    for (auto it = additions.begin(); it != additions.end() && it->degree() == d; ++it)
      if (quotient_by_monomial(out.ideal, *it).variable_support()) {
        pick = it;
        break;
      }
    if (pick == additions.end()) {
      out.stuck = std::move(additions);
      return out;
    }
    out.ideal = sum(out.ideal, MonomialIdeal(out.ideal.ring(), {*pick}));
    out.order.push_back(*pick);
    additions.erase(pick);
  }
  return out;
}

std::pair<MonomialIdeal, std::vector<Monomial>> u_cone_order(int n, int a0, int a1) {
  if (n < 2 || a1 < 1 || a0 < a1) throw std::invalid_argument("u_cone_order needs n >= 2, a0 >= a1 >= 1");
  const RingDescriptor ring(n + 1);
  const auto tail = variable_range(2, n);
  std::vector<Monomial> additions;
  for (int t = 1; t <= a0 - a1; ++t)
    for (const auto& mu : monomials_of_degree(ring, a0 - t, tail)) additions.push_back(mu.times_variable(1, t));
  return {MonomialIdeal::variable_power(ring, tail, a0), additions};
}

std::pair<MonomialIdeal, std::vector<Monomial>> double_points_cone_order(int n, int r, bool descending_g1) {
  const auto sets = fatabbi_generators(n, r, 2);
  const RingDescriptor ring(n + 1);
  auto g1 = sets[1], g2 = sets[2];
  std::sort(g1.begin(), g1.end());
  std::sort(g2.begin(), g2.end());
  if (descending_g1) std::reverse(g1.begin(), g1.end());
  std::vector<Monomial> additions = g1;
  additions.insert(additions.end(), g2.begin(), g2.end());
  return {MonomialIdeal(ring, sets[0]), additions};
}

}  // namespace fatbetti
