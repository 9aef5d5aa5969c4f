#pragma once

#include "fatbetti/ring.hpp"

#include <optional>
#include <vector>

namespace fatbetti {

/// Monomial ideal stored by its minimal generators, sorted in descending lex.
///
/// The empty generator set is the zero ideal; the unit ideal is {1}.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingDescriptor ring) : ring_(ring) {}
  /// Minimalizes `gens`; every monomial must live in `ring`.
  MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens);

  static MonomialIdeal unit(RingDescriptor ring);
  /// (x_i : i in support)^d.
  static MonomialIdeal variable_power(RingDescriptor ring, const std::vector<int>& support, int d);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  int min_generator_degree() const;  // 0 for the zero ideal
  int max_generator_degree() const;  // 0 for the zero ideal

  std::vector<Monomial> generators_of_degree(int d) const;

  /// Variables generating this ideal when every generator is a single
  /// variable (the zero ideal gives the empty set), otherwise nullopt.
  std::optional<std::vector<int>> variable_support() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_.num_vars == b.ring_.num_vars && a.gens_ == b.gens_;
  }

  std::string to_string() const;

 private:
  RingDescriptor ring_;
  std::vector<Monomial> gens_;
};

/// Drops every generator divisible by another; result sorted descending lex.
MonomialIdeal minimalize(const RingDescriptor& ring, std::vector<Monomial> gens);

/// I : m, generated by g / gcd(g, m) over the generators g of I.
MonomialIdeal quotient_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// Minimal generators of I ∩ J from pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// m · I.
MonomialIdeal multiply(const MonomialIdeal& ideal, const Monomial& m);

/// I_<d>: the ideal generated by the degree-d monomials of I.
MonomialIdeal component(const MonomialIdeal& ideal, int d);

/// Degree-d monomials of I in descending lex.
std::vector<Monomial> degree_part(const MonomialIdeal& ideal, int d);

/// Stable in the Eliahou-Kervaire sense: x_i m / x_max(m) stays in I for every
/// minimal generator m and every i <= max(m).
bool is_stable(const MonomialIdeal& ideal);

}  // namespace fatbetti
