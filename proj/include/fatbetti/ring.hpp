#pragma once

#include "fatbetti/field.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fatbetti {

/// k[x_0, ..., x_{num_vars-1}] over the given field.
struct RingDescriptor {
  int num_vars = 1;
  ScalarField field{};

  RingDescriptor() = default;
  explicit RingDescriptor(int vars, ScalarField f = {});

  /// Projective dimension n, so that the ring is k[x_0..x_n].
  int projective_dim() const { return num_vars - 1; }
  bool operator==(const RingDescriptor&) const = default;
};

/// Exponent vector x_0^{e_0} ... x_{k}^{e_k}. The all-zero vector is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

  static Monomial one(int num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }
  static Monomial variable(int num_vars, int index);

  int num_vars() const { return static_cast<int>(exp_.size()); }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exp_; }
  int degree() const;

  /// Largest index with a positive exponent, or -1 for the monomial 1.
  int max_index() const;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws std::invalid_argument if `other` does not divide.
  Monomial operator/(const Monomial& other) const;
  Monomial times_variable(int i, int power = 1) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Pure lex comparison with x_0 > x_1 > ... (larger first exponent wins).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exp_ <=> b.exp_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Human-readable form such as "x0^2*x3"; "1" for the unit monomial.
  std::string to_string() const;

 private:
  std::vector<int> exp_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Binomial coefficient with the vanishing conventions used by every Betti
/// formula: C(a, b) = 0 for b < 0, C(a, 0) = 1, and C(a, b) = 0 when a < b.
BigInt binom(long long a, long long b);

/// Same value as a machine integer; throws std::overflow_error if it does not fit.
long long binom_ll(long long a, long long b);

/// All degree-d monomials in the variables of `support`, in descending lex
/// order. `support` must be nonempty when d > 0.
std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int d,
                                          const std::vector<int>& support);

/// Degree-d monomials in all variables, descending lex.
std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int d);

/// Variable indices [first, last] as a support list.
std::vector<int> variable_range(int first, int last);

}  // namespace fatbetti
