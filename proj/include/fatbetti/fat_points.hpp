#pragma once

#include "fatbetti/fat_point_config.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <optional>
#include <vector>

namespace fatbetti {

/// Per-variable exponent limits d_i of a lex ideal with holes: a generator is
/// kept iff its x_i-exponent is at most d_i - 1. nullopt means no limit.
struct HoleBounds {
  std::vector<std::optional<int>> limits;

  static HoleBounds unbounded(int num_vars) { return {std::vector<std::optional<int>>(num_vars)}; }

  bool admits(const Monomial& m) const;
  /// Number of indices k < max(m) with x_k^{d_k - 1} | m.
  int saturated_below_max(const Monomial& m) const;

  bool operator==(const HoleBounds&) const = default;
};

/// Generators of the base ideal that survive the bounds.
MonomialIdeal apply_holes(const MonomialIdeal& base, const HoleBounds& bounds);

/// I = p_0^{a_0} ∩ ... ∩ p_r^{a_r} with p_i the ideal of the i-th coordinate point.
/// Throws std::invalid_argument for explicit placement or more than n+1 points.
MonomialIdeal fat_point_ideal(const FatPointConfig& config);

/// G_0, ..., G_a for r+1 coordinate points of equal multiplicity a in P^n:
/// G_0 holds the degree-a monomials in x_{r+1}..x_n, G_t the degree-(a+t)
/// monomials whose first r+1 exponents are <= t with at least two equal to t.
std::vector<std::vector<Monomial>> fatabbi_generators(int n, int r, int a);

/// Degree-(a_0 + t) monomials of the coordinate fat-point ideal, read off
/// the exponent bounds b_i <= a_0 - a_i + t (i <= r). Descending lex.
std::vector<Monomial> degree_piece(const FatPointConfig& config, int t);

struct LexWithHoles {
  MonomialIdeal base;  // m^{a_0 + t}
  HoleBounds bounds;   // d_i = a_0 - a_i + t + 1 for i <= r
  int degree;
};

/// I_<a_0 + t> presented as a hole-filtered power of the maximal ideal.
LexWithHoles component_as_lex_with_holes(const FatPointConfig& config, int t);

/// Degree of the top minimal generators: a_0 + a_1 for two or more points,
/// a_0 for a single point.
int top_generator_degree(const FatPointConfig& config);

}  // namespace fatbetti
