#pragma once

#include "fatbetti/betti_table.hpp"
#include "fatbetti/fat_point_config.hpp"
#include "fatbetti/koszul.hpp"
#include "fatbetti/monomial_ideal.hpp"
#include "fatbetti/subspace_ideal.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fatbetti {

/// R/I is not one-dimensional (Hilbert function does not settle at a positive constant).
class DimensionNotOne : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hilbert-function multiplicity disagrees with the Betti-table formula.
class MultiplicityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CwlReport {
  bool componentwise_linear = true;
  std::vector<int> checked_degrees;
  std::vector<int> failing_degrees;
};

/// I_<d> has a d-linear resolution for d from the smallest to the largest
/// generator degree (plus `extra_degrees` beyond it).
CwlReport is_componentwise_linear(const MonomialIdeal& ideal, int extra_degrees = 0,
                                  std::optional<int> cap = std::nullopt);

template <typename Field>
CwlReport is_componentwise_linear(const GradedSubspaceIdeal<Field>& ideal, int extra_degrees = 0) {
  CwlReport report;
  const int lo = min_generator_degree(ideal), hi = max_generator_degree(ideal) + extra_degrees;
  for (int d = lo; d <= hi; ++d) {
    report.checked_degrees.push_back(d);
    if (!has_linear_resolution(component(ideal, d), d)) report.failing_degrees.push_back(d);
  }
  report.componentwise_linear = report.failing_degrees.empty();
  return report;
}

/// First value h with H(d) = H(d+1) = H(d+2) = h for some d >= from.
/// Throws DimensionNotOne if h is 0 or no repeat shows up by degree `through`.
std::uint64_t stabilized_hilbert_value(const std::function<std::uint64_t(int)>& hilbert, int from,
                                       int through);

/// ((-1)^c / c!) sum_i (-1)^i sum_j beta_{i,j} j^c, the multiplicity of a
/// Cohen-Macaulay R/I of codimension c.
Rational betti_multiplicity(const BettiTable& table, int codim);

/// e(R/I) for one-dimensional R/I, cross-checked against the Betti table
/// (computed by the oracle when not supplied). Throws DimensionNotOne or
/// MultiplicityMismatch.
std::uint64_t multiplicity(const MonomialIdeal& ideal, std::optional<BettiTable> table = std::nullopt);

template <typename Field>
std::uint64_t multiplicity(const GradedSubspaceIdeal<Field>& ideal,
                           std::optional<BettiTable> table = std::nullopt);

struct MultiplicityReport {
  int codim = 0;
  std::uint64_t e = 0;
  std::vector<int> min_shifts;  // m_1..m_c
  std::vector<int> max_shifts;  // M_1..M_c
  Rational lower;               // (1/c!) prod m_i
  Rational upper;               // (1/c!) prod M_i
  bool lower_holds = false;
  bool upper_holds = false;
  std::optional<Rational> closed_form;       // fat points only
  std::optional<bool> upper_within_closed_form;

  bool holds() const { return lower_holds && upper_holds && upper_within_closed_form.value_or(true); }
};

/// Bounds from a Betti table with c = codim and known multiplicity e.
MultiplicityReport multiplicity_bounds(const BettiTable& table, int codim, std::uint64_t e);

/// (1/n!) prod_{i=0}^{n-1} (a0 + a1 + i), with a1 = 0 for a single point.
Rational fat_point_upper_bound(const FatPointConfig& config);

MultiplicityReport check_multiplicity_conjecture(const MonomialIdeal& ideal);
/// Coordinate configs go through the monomial ideal, explicit ones through
/// the subspace route over the config's field. Adds the closed-form bound.
MultiplicityReport check_multiplicity_conjecture(const FatPointConfig& config);

/// Pieces needed to analyse an explicit fat-point configuration.
int subspace_degree_bound(const FatPointConfig& config);

template <typename Field>
std::uint64_t multiplicity(const GradedSubspaceIdeal<Field>& ideal, std::optional<BettiTable> table) {
  const int top = ideal.max_degree();
  const auto e = stabilized_hilbert_value(
      [&](int d) { return hilbert_function(ideal, d); }, max_generator_degree(ideal), top);
  const BettiTable t = table ? *table : koszul_betti(ideal);
  const Rational from_betti = betti_multiplicity(t, ideal.ring().num_vars - 1);
  if (from_betti != Rational(e))
    throw MultiplicityMismatch("Hilbert function gives " + std::to_string(e) +
                               " but the Betti table gives " + from_betti.str());
  return e;
}

}  // namespace fatbetti
