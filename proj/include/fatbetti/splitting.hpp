#pragma once

#include "fatbetti/betti_table.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fatbetti {

/// A proposed splitting M = U + V with maps phi: G(U ∩ V) -> G(U) and
/// psi: G(U ∩ V) -> G(V), stored as association lists keyed by w.
struct SplitCandidate {
  MonomialIdeal U;
  MonomialIdeal V;
  std::vector<std::pair<Monomial, Monomial>> phi;
  std::vector<std::pair<Monomial, Monomial>> psi;
};

struct SplitVerdict {
  enum class Kind { verified, refuted, inconclusive };
  Kind kind = Kind::inconclusive;
  std::string reason;
  /// The offending w (one element) or subset H for a refutation.
  std::vector<Monomial> witness;

  bool verified() const { return kind == Kind::verified; }
  bool refuted() const { return kind == Kind::refuted; }
};

std::string to_string(SplitVerdict::Kind kind);

/// Largest |G(U ∩ V)| for which every subset H is checked.
inline constexpr std::size_t kExhaustiveSubsetLimit = 18;

/// Checks the splitting conditions:
///   G(M) is the disjoint union of G(U) and G(V), both nonzero;
///   (a) w = lcm(phi(w), psi(w)) for every w in G(U ∩ V);
///   (b) lcm(phi(H)) and lcm(psi(H)) strictly divide lcm(H) for every nonempty H.
/// (b) is exhaustive up to kExhaustiveSubsetLimit generators; past that it
/// covers singletons, pairs and `subset_budget` random subsets drawn from
/// `seed`, and a clean pass is reported as inconclusive.
/// Throws std::invalid_argument if phi or psi is not a total map into G(U), G(V).
SplitVerdict verify_splitting(const MonomialIdeal& M, const SplitCandidate& cand,
                              std::size_t subset_budget = 4096, std::uint64_t seed = 1);

/// beta_{i,j}(R/M) = beta_{i,j}(R/U) + beta_{i,j}(R/V) + beta_{i-1,j}(R/(U ∩ V)) for i >= 1,
/// with beta_{0,0}(R/M) = 1. Throws std::invalid_argument on a ring mismatch.
BettiTable recombine_betti(const BettiTable& bU, const BettiTable& bV, const BettiTable& bUcapV);

/// Splitting of the ideal of two coordinate fat points (a0 >= a1) in P^n:
///   U = sum_{t=0}^{a0-a1} x1^t (x2..xn)^{a0-t},
///   V = sum_{t=1}^{a1} x0^t x1^{a0-a1+t} (x2..xn)^{a1-t}.
/// For w = x0 x1^{a0-a1+1} mu: phi(w) = x1^{a0-a1} mu (the only U-generator
/// dividing w) and psi(w) = w / x_max(w).
SplitCandidate fatabbi_split(int n, int a0, int a1);

}  // namespace fatbetti
