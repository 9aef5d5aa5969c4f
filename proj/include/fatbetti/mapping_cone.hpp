#pragma once

// Iterated mapping cones: R/(J, m) is resolved from R/J and R/(J : m)(-deg m).
// When J : m is generated by s variables and reg(R/J) <= deg m - 1 the cone
// is minimal and adds C(s, q-1) to beta_{q, deg m + q - 1}.

#include "fatbetti/betti_table.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <optional>
#include <vector>

namespace fatbetti {

struct ConeStep {
  Monomial added;
  MonomialIdeal colon;                        // J : m for the ideal J before the step
  std::optional<std::vector<int>> variables;  // set when the colon is variable-generated
  bool regularity_ok = false;                 // reg(R/J) <= deg m - 1 by the running table
  BettiTable contribution;                    // empty when the colon is not variable-generated

  bool minimal() const { return variables.has_value() && regularity_ok; }
};

struct ConeTrace {
  std::vector<ConeStep> steps;
  MonomialIdeal ideal;  // seed + every addition
  BettiTable table;     // seed table + every contribution
  bool certified = true;

  explicit ConeTrace(MonomialIdeal start) : ideal(std::move(start)) {}
};

/// C(s, q-1) at (q, degree + q - 1) for q >= 1.
BettiTable cone_contribution(int num_vars, int s, int degree);

/// Adds `additions` to `seed` one at a time, starting from `seed_table`
/// (the caller's Betti table of R/seed). Non-variable colons are recorded
/// and clear the certificate; nothing is thrown for them.
/// Throws std::invalid_argument if additions decrease in degree.
ConeTrace iterate_cone(const MonomialIdeal& seed, const BettiTable& seed_table,
                       const std::vector<Monomial>& additions);

/// J : m is variable-generated and reg(R/J) <= deg m - 1, with the
/// regularity taken from the Koszul oracle. Throws std::invalid_argument if m is in J.
bool check_minmap_hypothesis(const MonomialIdeal& J, const Monomial& m,
                             std::optional<int> degree_cap = std::nullopt);

struct OrderSearch {
  std::vector<Monomial> order;
  std::vector<Monomial> stuck;  // remaining additions when no candidate works
  MonomialIdeal ideal;          // ideal reached

  bool found() const { return stuck.empty(); }
};

/// Greedy: among the remaining additions of minimal degree take the first, in
/// ascending lex order, whose colon against the current ideal is variable-generated.
OrderSearch search_good_order(const MonomialIdeal& seed, std::vector<Monomial> additions);

/// Seed (x2..xn)^{a0} and the other U-generators of the two-point split,
/// block by block in the power of x1 and descending lex within a block.
std::pair<MonomialIdeal, std::vector<Monomial>> u_cone_order(int n, int a0, int a1);

/// Seed G_0 for r+1 coordinate double points, then G_1 and G_2 each in
/// ascending lex (or G_1 descending when `descending_g1`).
std::pair<MonomialIdeal, std::vector<Monomial>> double_points_cone_order(int n, int r,
                                                                         bool descending_g1 = false);

}  // namespace fatbetti
