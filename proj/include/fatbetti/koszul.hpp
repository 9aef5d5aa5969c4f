#pragma once

// Ground-truth Betti numbers from Koszul homology:
//   beta_{i,j}(R/I) = dim H_i(K(x_0..x_n) ⊗ R/I)_j,
// obtained by rank-nullity on the two differentials adjacent to each cell.
// For monomial ideals the complex splits by multidegree and every piece is
// a small ±1 matrix.

#include "fatbetti/betti_table.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <optional>
#include <stdexcept>

namespace fatbetti {

class CapTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// max generator degree + number of variables + 2.
int default_degree_cap(int max_generator_degree, int num_vars);

/// Checks that the rows known in every column (j - i <= cap - num_vars) end
/// with two all-zero rows after the last nonzero entry; throws CapTooSmall
/// otherwise. Returns the table unchanged.
BettiTable certify_complete(BettiTable raw, int cap);

/// Degree of the lcm of all generators. Every nonzero beta_{i,j} of a
/// monomial ideal has j at most this, so it is an exact degree cap.
int lcm_lattice_top(const MonomialIdeal& ideal);

/// Betti table of R/I over the ring's field, computed from the Koszul
/// complex in every multidegree of total degree <= cap. An explicit cap is
/// certified or rejected with CapTooSmall; without one the default cap is
/// raised until the certificate holds or reaches lcm_lattice_top.
BettiTable koszul_betti(const MonomialIdeal& ideal, std::optional<int> cap = std::nullopt);

/// dim_k (R/I)_d: degree-d monomials outside I.
std::uint64_t hilbert_function(const MonomialIdeal& ideal, int d);

/// True iff beta_{i,j}(R/I) = 0 for every i >= 1 with j != i + d - 1.
/// Requires I to be generated in degree d.
bool has_linear_resolution(const MonomialIdeal& ideal, int d,
                           std::optional<int> cap = std::nullopt);

/// Shared by the monomial and subspace routes.
bool is_linear_table(const BettiTable& table, int d);

}  // namespace fatbetti
