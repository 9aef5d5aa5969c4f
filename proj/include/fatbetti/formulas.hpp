#pragma once

// Closed-form graded Betti numbers. Every routine returns a full BettiTable
// of R/I (beta_{0,0} = 1) so results compare entrywise with the oracle.

#include "fatbetti/betti_table.hpp"
#include "fatbetti/fat_point_config.hpp"
#include "fatbetti/fat_points.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <utility>

namespace fatbetti {

/// R/(x_{i_1}, ..., x_{i_s})^d:
///   beta_{q,q+d-1} = C(d+s-1, d+q-1) C(d+q-2, q-1).
BettiTable power_betti(int s, int d, const RingDescriptor& ring);

/// Two coordinate fat points of multiplicities a0 >= a1 in P^n (n >= 2).
BettiTable two_points_betti(int n, int a0, int a1);

/// The three pieces of the splitting of the two-point ideal into U and V.
BettiTable u_betti(int n, int a0, int a1);
BettiTable v_betti(int n, int a0, int a1);
/// R/(U ∩ V) with U ∩ V = x0 x1^{a0-a1+1} (x2..xn)^{a1}, in ordinary indexing.
BettiTable ucapv_betti(int n, int a0, int a1);

/// Both sides of the identity that merges the V and U ∩ V contributions:
///   C(a1+n-3, a1+q-2) C(a1+q-3, q-1) + C(a1+n-2, a1+q-2) C(a1+q-3, q-2)
///     = C(a1+n-3, a1-1) C(n-1, q-1).
std::pair<BigInt, BigInt> two_point_identity(int n, int a1, int q);

/// r+1 <= n+1 coordinate double points in P^n.
BettiTable double_points_betti(int n, int r);

/// r+1 <= n+1 coordinate triple points in P^n.
BettiTable triple_points_betti(int n, int r);

/// Eliahou-Kervaire: beta_{i, i+deg m-1} += C(max(m), i-1) over minimal
/// generators m. Throws std::invalid_argument unless the ideal is stable.
BettiTable ek_stable_betti(const MonomialIdeal& ideal);

/// Lex ideal with holes L (hole-filtered m^d):
///   beta_{i,i+d-1}(R/L) = sum over G(L) of C(max(m) - b(m), i-1).
BettiTable ghp_holes_betti(int d, const HoleBounds& bounds, const RingDescriptor& ring);

/// Same ideal, by deleting Eliahou-Kervaire symbols (m, S) of m^d whose
/// multidegree exceeds a bound and counting the survivors.
BettiTable ce_deletion_betti(int d, const HoleBounds& bounds, const RingDescriptor& ring);

/// Full table of R/I for coordinate fat points, assembled from the
/// components I_<d> (lex ideals with holes) via
///   beta_{i,i+d}(R/I) = beta_i(R/I_<d+1>) + beta_{i+1}(R/I_<d>) - beta_1(R/I_<d>) C(n+1, i).
/// Throws std::domain_error if an entry comes out negative or the row past
/// the top generator degree does not vanish.
BettiTable hh_pipeline_betti(const FatPointConfig& config);

}  // namespace fatbetti
