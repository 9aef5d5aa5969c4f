#include "fatbetti/koszul.hpp"

#include "fatbetti/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace fatbetti {

int default_degree_cap(int max_generator_degree, int num_vars) {
  return max_generator_degree + num_vars + 2;
}

BettiTable certify_complete(BettiTable raw, int cap) {
  const int full_rows = cap - raw.num_vars();
  int last_row = -1;
  for (const auto& [key, v] : raw.entries()) last_row = std::max(last_row, key.second - key.first);
  if (last_row >= 0 && last_row + 2 > full_rows)
    throw CapTooSmall("degree cap " + std::to_string(cap) + " leaves rows up to " +
                      std::to_string(full_rows) + " complete but row " +
                      std::to_string(last_row) +
                      " is nonzero; two zero rows are needed past it");
  return raw;
}

namespace {

// Koszul homology of R/I in a single multidegree alpha.
//
// Basis of K_i in degree alpha: e_S ⊗ x^{alpha - e_S} for |S| = i, S ⊆ supp(alpha),
// with x^{alpha - e_S} a standard monomial. x^{alpha - e_S} lies in I iff some
// generator g | alpha has g_k < alpha_k for all k in S, i.e. S avoids the set
// of coordinates where g is tight against alpha.
template <typename Field>
class MultidegreeComplex {
 public:
  using Scalar = typename Field::Scalar;

  MultidegreeComplex(Field field, std::vector<std::uint32_t> tight_masks, int support_size)
      : field_(field), tight_(std::move(tight_masks)), s_(support_size) {
    const std::uint32_t full = (1u << s_);
    index_.assign(full, -1);
    by_size_.assign(static_cast<std::size_t>(s_) + 1, {});
    for (std::uint32_t S = 0; S < full; ++S) {
      if (!standard(S)) continue;
      auto& bucket = by_size_[static_cast<std::size_t>(std::popcount(S))];
      index_[S] = static_cast<int>(bucket.size());
      bucket.push_back(S);
    }
  }

  // beta_i for i = 0..s.
  std::vector<std::uint64_t> homology() const {
    std::vector<Eigen::Index> ranks(static_cast<std::size_t>(s_) + 2, 0);
    for (int i = 1; i <= s_; ++i) ranks[static_cast<std::size_t>(i)] = differential_rank(i);
    std::vector<std::uint64_t> betti(static_cast<std::size_t>(s_) + 1, 0);
    for (int i = 0; i <= s_; ++i) {
      const auto dim = static_cast<Eigen::Index>(by_size_[static_cast<std::size_t>(i)].size());
      betti[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(
          dim - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i) + 1]);
    }
    return betti;
  }

 private:
  bool standard(std::uint32_t S) const {
    return std::all_of(tight_.begin(), tight_.end(),
                       [S](std::uint32_t t) { return (S & t) != 0; });
  }

  Eigen::Index differential_rank(int i) const {
    const auto& cols = by_size_[static_cast<std::size_t>(i)];
    const auto& rows = by_size_[static_cast<std::size_t>(i) - 1];
    if (cols.empty() || rows.empty()) return 0;
    DenseMatrix<Scalar> d(static_cast<Eigen::Index>(rows.size()),
                          static_cast<Eigen::Index>(cols.size()));
    d.setConstant(field_(0));
    const Scalar plus = field_(1), minus = field_(-1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint32_t S = cols[c];
      int position = 0;
      for (int k = 0; k < s_; ++k) {
        if (!(S & (1u << k))) continue;
        const int r = index_[S & ~(1u << k)];
        if (r >= 0) d(r, static_cast<Eigen::Index>(c)) = (position % 2 == 0) ? plus : minus;
        ++position;
      }
    }
    return rank(d);
  }

  Field field_;
  std::vector<std::uint32_t> tight_;
  int s_;
  std::vector<int> index_;
  std::vector<std::vector<std::uint32_t>> by_size_;
};

template <typename Field>
BettiTable multigraded_koszul(const MonomialIdeal& ideal, Field field, int cap) {
  const RingDescriptor& ring = ideal.ring();
  const int nv = ring.num_vars;
  BettiTable raw(nv);
  std::vector<int> support;
  std::vector<std::uint32_t> tight;
  for (int j = 0; j <= cap; ++j) {
    for (const Monomial& alpha : monomials_of_degree(ring, j)) {
      support.clear();
      for (int k = 0; k < nv; ++k)
        if (alpha[k] > 0) support.push_back(k);
      tight.clear();
      Monomial lattice = Monomial::one(nv);
      bool inside = false;  // some S is never standard: whole complex vanishes
      for (const Monomial& g : ideal.gens()) {
        if (!g.divides(alpha)) continue;
        lattice = lcm(lattice, g);
        std::uint32_t mask = 0;
        for (std::size_t p = 0; p < support.size(); ++p)
          if (g[support[p]] == alpha[support[p]]) mask |= (1u << p);
        if (mask == 0) {
          inside = true;
          break;
        }
        tight.push_back(mask);
      }
      if (inside) continue;
      if (tight.empty()) {
        // Full exterior algebra on supp(alpha): exact unless alpha = 1.
        if (j == 0) raw.add(0, 0, std::uint64_t{1});
        continue;
      }
      // Outside the lcm lattice some support coordinate is tight for no
      // generator and the complex is a cone, hence exact.
      if (!(lattice == alpha)) continue;
      MultidegreeComplex<Field> complex(field, tight, static_cast<int>(support.size()));
      const auto betti = complex.homology();
      for (std::size_t i = 0; i < betti.size(); ++i) raw.add(static_cast<int>(i), j, betti[i]);
    }
  }
  return raw;
}

}  // namespace

int lcm_lattice_top(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  Monomial top = Monomial::one(ideal.ring().num_vars);
  for (const auto& g : ideal.gens()) top = lcm(top, g);
  return top.degree();
}

BettiTable koszul_betti(const MonomialIdeal& ideal, std::optional<int> cap) {
  const int nv = ideal.ring().num_vars;
  if (nv > 30) throw std::invalid_argument("at most 30 variables supported");
  const int max_deg = ideal.max_generator_degree();
  const int exact = lcm_lattice_top(ideal);
  int c = cap.value_or(default_degree_cap(max_deg, nv));
  if (c < max_deg)
    throw CapTooSmall("degree cap " + std::to_string(c) + " is below the generator degree " +
                      std::to_string(max_deg));
  for (;;) {
    BettiTable raw = with_field(ideal.ring().field, [&](auto field) {
      return multigraded_koszul(ideal, field, std::min(c, exact));
    });
    if (c >= exact) return raw;
    if (cap) return certify_complete(std::move(raw), c);
    try {
      return certify_complete(std::move(raw), c);
    } catch (const CapTooSmall&) {
      c += nv;
    }
  }
}

std::uint64_t hilbert_function(const MonomialIdeal& ideal, int d) {
  std::uint64_t count = 0;
  for (const auto& m : monomials_of_degree(ideal.ring(), d))
    if (!ideal.contains(m)) ++count;
  return count;
}

bool is_linear_table(const BettiTable& table, int d) {
  for (const auto& [key, v] : table.entries())
    if (key.first >= 1 && key.second != key.first + d - 1) return false;
  return true;
}

bool has_linear_resolution(const MonomialIdeal& ideal, int d, std::optional<int> cap) {
  for (const auto& g : ideal.gens())
    if (g.degree() != d)
      throw std::invalid_argument("has_linear_resolution: ideal is not generated in degree " +
                                  std::to_string(d));
  return is_linear_table(koszul_betti(ideal, cap), d);
}

}  // namespace fatbetti
