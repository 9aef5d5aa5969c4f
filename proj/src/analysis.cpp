#include "fatbetti/analysis.hpp"

#include "fatbetti/fat_points.hpp"

#include <numeric>

namespace fatbetti {

CwlReport is_componentwise_linear(const MonomialIdeal& ideal, int extra_degrees, std::optional<int> cap) {
  CwlReport report;
  if (ideal.is_zero()) return report;
  for (int d = ideal.min_generator_degree(); d <= ideal.max_generator_degree() + extra_degrees; ++d) {
    report.checked_degrees.push_back(d);
    if (!has_linear_resolution(component(ideal, d), d, cap)) report.failing_degrees.push_back(d);
  }
  report.componentwise_linear = report.failing_degrees.empty();
  return report;
}

std::uint64_t stabilized_hilbert_value(const std::function<std::uint64_t(int)>& hilbert, int from,
                                       int through) {
  if (through - from < 2)
    throw DimensionNotOne("need at least three degrees past " + std::to_string(from) +
                          " to detect stabilization");
  std::uint64_t a = hilbert(from), b = hilbert(from + 1);
  for (int d = from + 2; d <= through; ++d) {
    const std::uint64_t c = hilbert(d);
    if (a == b && b == c) {
      if (c == 0) throw DimensionNotOne("R/I is Artinian (Hilbert function reaches 0)");
      return c;
    }
    a = b;
    b = c;
  }
  throw DimensionNotOne("Hilbert function does not stabilize by degree " + std::to_string(through));
}

Rational betti_multiplicity(const BettiTable& table, int codim) {
  BigInt sum = 0;
  for (const auto& [key, v] : table.entries()) {
    BigInt term = v;
    for (int k = 0; k < codim; ++k) term *= key.second;
    sum += (key.first % 2 == 0) ? term : BigInt(-term);
  }
  BigInt factorial = 1;
  for (int k = 2; k <= codim; ++k) factorial *= k;
  Rational e = make_rational(sum, factorial);
  return codim % 2 == 0 ? e : Rational(-e);
}

std::uint64_t multiplicity(const MonomialIdeal& ideal, std::optional<BettiTable> table) {
  const int from = ideal.max_generator_degree();
  const auto e = stabilized_hilbert_value([&](int d) { return hilbert_function(ideal, d); }, from,
                                          from + 4 * ideal.ring().num_vars + 8);
  const BettiTable t = table ? *table : koszul_betti(ideal);
  const Rational from_betti = betti_multiplicity(t, ideal.ring().num_vars - 1);
  if (from_betti != Rational(e))
    throw MultiplicityMismatch("Hilbert function gives " + std::to_string(e) +
                               " but the Betti table gives " + from_betti.str());
  return e;
}

MultiplicityReport multiplicity_bounds(const BettiTable& table, int codim, std::uint64_t e) {
  MultiplicityReport r;
  r.codim = codim;
  r.e = e;
  BigInt lo = 1, hi = 1, factorial = 1;
  for (int i = 1; i <= codim; ++i) {
    const int m = table.min_degree(i), M = table.max_degree(i);
    if (m < 0) throw std::invalid_argument("Betti table has an empty column " + std::to_string(i));
    r.min_shifts.push_back(m);
    r.max_shifts.push_back(M);
    lo *= m;
    hi *= M;
    factorial *= i;
  }
  r.lower = make_rational(lo, factorial);
  r.upper = make_rational(hi, factorial);
  r.lower_holds = r.lower <= Rational(e);
  r.upper_holds = Rational(e) <= r.upper;
  return r;
}

Rational fat_point_upper_bound(const FatPointConfig& config) {
  const int a = config.multiplicities.at(0) + (config.num_points() > 1 ? config.multiplicities[1] : 0);
  BigInt num = 1, den = 1;
  for (int i = 0; i < config.n; ++i) {
    num *= a + i;
    den *= i + 1;
  }
  return make_rational(num, den);
}

MultiplicityReport check_multiplicity_conjecture(const MonomialIdeal& ideal) {
  const BettiTable table = koszul_betti(ideal);
  return multiplicity_bounds(table, ideal.ring().num_vars - 1, multiplicity(ideal, table));
}

int subspace_degree_bound(const FatPointConfig& config) {
  return std::accumulate(config.multiplicities.begin(), config.multiplicities.end(), 0) + config.n + 5;
}

MultiplicityReport check_multiplicity_conjecture(const FatPointConfig& config) {
  config.validate();
  MultiplicityReport r;
  if (config.coordinate_placement()) {
    r = check_multiplicity_conjecture(fat_point_ideal(config));
  } else {
    r = with_field(config.field, [&](auto field) {
      const auto I = fat_point_subspace_ideal(config, field, subspace_degree_bound(config));
      const BettiTable table = koszul_betti(I);
      return multiplicity_bounds(table, config.n, multiplicity(I, table));
    });
  }
  r.closed_form = fat_point_upper_bound(config);
  r.upper_within_closed_form = r.upper <= *r.closed_form;
  return r;
}

}  // namespace fatbetti
