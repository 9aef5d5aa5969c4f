#pragma once

// Homogeneous ideals presented degree by degree: I_d is a subspace of R_d
// given in reduced row echelon form over the descending-lex monomial basis.
// This covers non-monomial ideals such as fat points in non-coordinate
// position, where the Betti numbers come from the graded Koszul complex.

#include "fatbetti/betti_table.hpp"
#include "fatbetti/fat_point_config.hpp"
#include "fatbetti/koszul.hpp"
#include "fatbetti/linalg.hpp"
#include "fatbetti/monomial_ideal.hpp"

#include <bit>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace fatbetti {

/// Descending-lex monomial bases of R_0 .. R_D with reverse lookup.
class MonomialBases {
 public:
  MonomialBases(const RingDescriptor& ring, int max_degree) {
    for (int d = 0; d <= max_degree; ++d) {
      bases_.push_back(monomials_of_degree(ring, d));
      auto& lookup = index_.emplace_back();
      for (std::size_t k = 0; k < bases_.back().size(); ++k)
        lookup.emplace(bases_.back()[k], static_cast<Eigen::Index>(k));
    }
  }
  int max_degree() const { return static_cast<int>(bases_.size()) - 1; }
  const std::vector<Monomial>& operator[](int d) const { return bases_[static_cast<std::size_t>(d)]; }
  Eigen::Index index_of(const Monomial& m) const {
    return index_[static_cast<std::size_t>(m.degree())].at(m);
  }

 private:
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, Eigen::Index, MonomialHash>> index_;
};

template <typename Field>
class GradedSubspaceIdeal {
 public:
  using Scalar = typename Field::Scalar;
  using Piece = EchelonForm<Scalar>;

  /// The zero ideal with pieces known in degrees 0..max_degree.
  GradedSubspaceIdeal(RingDescriptor ring, Field field, int max_degree)
      : ring_(ring),
        field_(field),
        bases_(std::make_shared<const MonomialBases>(ring, max_degree)),
        pieces_(static_cast<std::size_t>(max_degree) + 1) {
    for (int d = 0; d <= max_degree; ++d) pieces_[static_cast<std::size_t>(d)].rows.resize(0, size(d));
  }

  const RingDescriptor& ring() const { return ring_; }
  const Field& field() const { return field_; }
  int max_degree() const { return bases_->max_degree(); }
  const MonomialBases& bases() const { return *bases_; }
  Eigen::Index size(int d) const { return static_cast<Eigen::Index>((*bases_)[d].size()); }

  const Piece& piece(int d) const {
    check_degree(d);
    return pieces_[static_cast<std::size_t>(d)];
  }
  Eigen::Index dim(int d) const { return piece(d).rank(); }

  /// Replaces I_d by the row span of `spanning_rows` (columns indexed by R_d's basis).
  void set_piece(int d, const DenseMatrix<Scalar>& spanning_rows) {
    check_degree(d);
    if (spanning_rows.cols() != size(d)) throw std::invalid_argument("piece has wrong width");
    pieces_[static_cast<std::size_t>(d)] = reduced_row_echelon(spanning_rows);
  }

  /// Coordinates of x^mu in (R/I)_e over the standard (non-pivot) monomials.
  /// Returns (standard index, coefficient) pairs.
  std::vector<std::pair<Eigen::Index, Scalar>> normal_form(const Monomial& mu) const {
    const int e = mu.degree();
    const auto& layout = standard_layout(e);
    const Eigen::Index t = bases_->index_of(mu);
    std::vector<std::pair<Eigen::Index, Scalar>> out;
    if (layout.position[static_cast<std::size_t>(t)] >= 0) {
      out.emplace_back(layout.position[static_cast<std::size_t>(t)], field_(1));
      return out;
    }
    const Piece& p = piece(e);
    const Eigen::Index row = layout.pivot_row[static_cast<std::size_t>(t)];
    for (Eigen::Index c = 0; c < size(e); ++c) {
      const auto pos = layout.position[static_cast<std::size_t>(c)];
      if (pos >= 0 && !is_zero(p.rows(row, c))) out.emplace_back(pos, -p.rows(row, c));
    }
    return out;
  }

  /// Number of standard monomials of degree e (= dim (R/I)_e).
  Eigen::Index quotient_dim(int e) const { return size(e) - dim(e); }

 private:
  struct Layout {
    std::vector<Eigen::Index> position;   // standard index, or -1 for pivots
    std::vector<Eigen::Index> pivot_row;  // row of the piece owning the pivot
  };

  void check_degree(int d) const {
    if (d < 0 || d > max_degree())
      throw std::out_of_range("degree " + std::to_string(d) + " outside the known pieces 0.." +
                              std::to_string(max_degree()));
  }

  const Layout& standard_layout(int e) const {
    auto it = layouts_.find(e);
    if (it != layouts_.end()) return it->second;
    const Piece& p = piece(e);
    Layout l;
    l.position.assign(static_cast<std::size_t>(size(e)), -1);
    l.pivot_row.assign(static_cast<std::size_t>(size(e)), -1);
    for (Eigen::Index r = 0; r < p.rank(); ++r)
      l.pivot_row[static_cast<std::size_t>(p.pivots[static_cast<std::size_t>(r)])] = r;
    Eigen::Index next = 0;
    for (Eigen::Index c = 0; c < size(e); ++c)
      if (l.pivot_row[static_cast<std::size_t>(c)] < 0) l.position[static_cast<std::size_t>(c)] = next++;
    return layouts_.emplace(e, std::move(l)).first->second;
  }

  RingDescriptor ring_;
  Field field_;
  std::shared_ptr<const MonomialBases> bases_;
  std::vector<Piece> pieces_;
  mutable std::map<int, Layout> layouts_;
};

/// Spanning rows of R_1 · I_d inside R_{d+1}.
template <typename Field>
DenseMatrix<typename Field::Scalar> linear_multiples(const GradedSubspaceIdeal<Field>& ideal, int d) {
  using Scalar = typename Field::Scalar;
  const auto& p = ideal.piece(d);
  const int nv = ideal.ring().num_vars;
  DenseMatrix<Scalar> rows(p.rank() * nv, ideal.size(d + 1));
  rows.setConstant(ideal.field()(0));
  for (Eigen::Index r = 0; r < p.rank(); ++r)
    for (int k = 0; k < nv; ++k)
      for (Eigen::Index c = 0; c < ideal.size(d); ++c) {
        if (is_zero(p.rows(r, c))) continue;
        const Monomial m = ideal.bases()[d][static_cast<std::size_t>(c)].times_variable(k);
        rows(r * nv + k, ideal.bases().index_of(m)) = p.rows(r, c);
      }
  return rows;
}

/// Degreewise presentation of a monomial ideal.
template <typename Field>
GradedSubspaceIdeal<Field> to_subspace_ideal(const MonomialIdeal& ideal, Field field, int max_degree) {
  using Scalar = typename Field::Scalar;
  GradedSubspaceIdeal<Field> out(ideal.ring(), field, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    const auto members = degree_part(ideal, d);
    DenseMatrix<Scalar> rows(static_cast<Eigen::Index>(members.size()), out.size(d));
    rows.setConstant(field(0));
    for (std::size_t r = 0; r < members.size(); ++r)
      rows(static_cast<Eigen::Index>(r), out.bases().index_of(members[r])) = field(1);
    out.set_piece(d, rows);
  }
  return out;
}

/// R_1 · I_d ⊆ I_{d+1} for every d below the top known degree.
template <typename Field>
bool is_ideal(const GradedSubspaceIdeal<Field>& ideal) {
  for (int d = 0; d < ideal.max_degree(); ++d) {
    const auto multiples = linear_multiples(ideal, d);
    if (multiples.rows() == 0) continue;
    DenseMatrix<typename Field::Scalar> stacked(ideal.dim(d + 1) + multiples.rows(), ideal.size(d + 1));
    stacked.topRows(ideal.dim(d + 1)) = ideal.piece(d + 1).rows;
    stacked.bottomRows(multiples.rows()) = multiples;
    if (rank(stacked) != ideal.dim(d + 1)) return false;
  }
  return true;
}

/// Number of minimal generators in each degree: dim I_d - dim(R_1 · I_{d-1}).
template <typename Field>
std::map<int, Eigen::Index> generator_degrees(const GradedSubspaceIdeal<Field>& ideal) {
  std::map<int, Eigen::Index> out;
  for (int d = 0; d <= ideal.max_degree(); ++d) {
    const Eigen::Index from_below = d == 0 ? 0 : rank(linear_multiples(ideal, d - 1));
    if (ideal.dim(d) > from_below) out[d] = ideal.dim(d) - from_below;
  }
  return out;
}

template <typename Field>
int max_generator_degree(const GradedSubspaceIdeal<Field>& ideal) {
  const auto g = generator_degrees(ideal);
  return g.empty() ? 0 : g.rbegin()->first;
}

template <typename Field>
int min_generator_degree(const GradedSubspaceIdeal<Field>& ideal) {
  const auto g = generator_degrees(ideal);
  return g.empty() ? 0 : g.begin()->first;
}

/// I_<d>: zero below d, I_d in degree d, and R_{e-d} · I_d above.
template <typename Field>
GradedSubspaceIdeal<Field> component(const GradedSubspaceIdeal<Field>& ideal, int d) {
  GradedSubspaceIdeal<Field> out(ideal.ring(), ideal.field(), ideal.max_degree());
  if (d > ideal.max_degree()) return out;
  out.set_piece(d, ideal.piece(d).rows);
  for (int e = d; e < ideal.max_degree(); ++e) out.set_piece(e + 1, linear_multiples(out, e));
  return out;
}

template <typename Field>
std::uint64_t hilbert_function(const GradedSubspaceIdeal<Field>& ideal, int d) {
  return static_cast<std::uint64_t>(ideal.quotient_dim(d));
}

namespace detail {

// Subsets of {0..nv-1} of size i as bitmasks, increasing.
inline std::vector<std::uint32_t> subsets_of_size(int nv, int i) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t S = 0; S < (1u << nv); ++S)
    if (std::popcount(S) == i) out.push_back(S);
  return out;
}

// Rank of d_i : K_{i,j} -> K_{i-1,j} for the graded Koszul complex of R/I.
template <typename Field>
Eigen::Index graded_differential_rank(const GradedSubspaceIdeal<Field>& ideal, int i, int j) {
  using Scalar = typename Field::Scalar;
  const int nv = ideal.ring().num_vars;
  if (i < 1 || i > nv || j - i < 0) return 0;
  const auto col_sets = subsets_of_size(nv, i);
  const auto row_sets = subsets_of_size(nv, i - 1);
  const Eigen::Index col_q = ideal.quotient_dim(j - i);
  const Eigen::Index row_q = ideal.quotient_dim(j - i + 1);
  if (col_q == 0 || row_q == 0) return 0;
  std::unordered_map<std::uint32_t, Eigen::Index> row_block;
  for (std::size_t r = 0; r < row_sets.size(); ++r)
    row_block[row_sets[r]] = static_cast<Eigen::Index>(r) * row_q;

  // Standard monomials of degree j - i, in basis order.
  std::vector<Monomial> standard;
  {
    const auto& piece = ideal.piece(j - i);
    std::vector<bool> pivot(static_cast<std::size_t>(ideal.size(j - i)), false);
    for (auto c : piece.pivots) pivot[static_cast<std::size_t>(c)] = true;
    for (Eigen::Index c = 0; c < ideal.size(j - i); ++c)
      if (!pivot[static_cast<std::size_t>(c)])
        standard.push_back(ideal.bases()[j - i][static_cast<std::size_t>(c)]);
  }

  DenseMatrix<Scalar> d(static_cast<Eigen::Index>(row_sets.size()) * row_q,
                        static_cast<Eigen::Index>(col_sets.size()) * col_q);
  d.setConstant(ideal.field()(0));
  for (std::size_t cs = 0; cs < col_sets.size(); ++cs) {
    const std::uint32_t S = col_sets[cs];
    for (Eigen::Index m = 0; m < col_q; ++m) {
      const Eigen::Index col = static_cast<Eigen::Index>(cs) * col_q + m;
      int position = 0;
      for (int k = 0; k < nv; ++k) {
        if (!(S & (1u << k))) continue;
        const Eigen::Index base = row_block.at(S & ~(1u << k));
        const Scalar sign = ideal.field()(position % 2 == 0 ? 1 : -1);
        for (const auto& [pos, coeff] :
             ideal.normal_form(standard[static_cast<std::size_t>(m)].times_variable(k)))
          d(base + pos, col) += sign * coeff;
        ++position;
      }
    }
  }
  return rank(d);
}

}  // namespace detail

/// Betti table of R/I from the graded Koszul complex, degrees j <= cap.
/// The ideal's pieces must be known through degree cap.
template <typename Field>
BettiTable koszul_betti(const GradedSubspaceIdeal<Field>& ideal, std::optional<int> cap = std::nullopt) {
  const int nv = ideal.ring().num_vars;
  const int c = cap.value_or(default_degree_cap(max_generator_degree(ideal), nv));
  if (c > ideal.max_degree())
    throw CapTooSmall("degree cap " + std::to_string(c) + " exceeds the known pieces (through degree " +
                      std::to_string(ideal.max_degree()) + ")");
  BettiTable raw(nv);
  for (int j = 0; j <= c; ++j) {
    std::vector<Eigen::Index> ranks(static_cast<std::size_t>(nv) + 2, 0);
    for (int i = 1; i <= nv; ++i) ranks[static_cast<std::size_t>(i)] = detail::graded_differential_rank(ideal, i, j);
    for (int i = 0; i <= nv && i <= j; ++i) {
      const Eigen::Index dim = binom_ll(nv, i) * ideal.quotient_dim(j - i);
      raw.add(i, j, static_cast<std::uint64_t>(dim - ranks[static_cast<std::size_t>(i)] -
                                               ranks[static_cast<std::size_t>(i) + 1]));
    }
  }
  return certify_complete(std::move(raw), c);
}

template <typename Field>
bool has_linear_resolution(const GradedSubspaceIdeal<Field>& ideal, int d,
                           std::optional<int> cap = std::nullopt) {
  const auto gens = generator_degrees(ideal);
  if (gens.size() != 1 || gens.begin()->first != d)
    throw std::invalid_argument("has_linear_resolution: ideal is not generated in degree " +
                                std::to_string(d));
  return is_linear_table(koszul_betti(ideal, cap), d);
}

/// Ideal of fat points at explicit coordinates, degree by degree:
/// I_d = ∩_i { f in R_d : every partial derivative of order < a_i vanishes at P_i }.
/// Needs characteristic 0 or larger than max_degree.
template <typename Field>
GradedSubspaceIdeal<Field> fat_point_subspace_ideal(const FatPointConfig& config, Field field,
                                                    int max_degree) {
  using Scalar = typename Field::Scalar;
  config.validate();
  if (config.coordinate_placement())
    throw std::invalid_argument("fat_point_subspace_ideal needs explicit coordinates");
  const std::uint32_t p = field.characteristic();
  if (p != 0 && p <= static_cast<std::uint32_t>(max_degree))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is too small for the derivative criterion up to degree " +
                                std::to_string(max_degree));
  const RingDescriptor ring(config.n + 1, ScalarField{p});
  GradedSubspaceIdeal<Field> out(ring, field, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    const auto& basis = out.bases()[d];
    std::vector<std::vector<Scalar>> conditions;
    for (int pt = 0; pt < config.num_points(); ++pt) {
      const auto& P = config.coordinates[static_cast<std::size_t>(pt)];
      const int a = config.multiplicities[static_cast<std::size_t>(pt)];
      for (int order = 0; order < a && order <= d; ++order) {
        for (const Monomial& beta : monomials_of_degree(ring, order)) {
          std::vector<Scalar> row;
          row.reserve(basis.size());
          for (const Monomial& gamma : basis) {
            if (!beta.divides(gamma)) {
              row.push_back(field(0));
              continue;
            }
            Scalar v = field(1);
            for (int k = 0; k < ring.num_vars; ++k) {
              for (int t = 0; t < beta[k]; ++t) v *= field(gamma[k] - t);
              for (int t = 0; t < gamma[k] - beta[k]; ++t) v *= field(P[static_cast<std::size_t>(k)]);
            }
            row.push_back(v);
          }
          conditions.push_back(std::move(row));
        }
      }
    }
    DenseMatrix<Scalar> cond(static_cast<Eigen::Index>(conditions.size()), out.size(d));
    for (std::size_t r = 0; r < conditions.size(); ++r)
      for (std::size_t c = 0; c < conditions[r].size(); ++c)
        cond(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = conditions[r][c];
    out.set_piece(d, kernel_basis(cond));
  }
  return out;
}

/// Equality of two presentations through their common known degrees.
template <typename Field>
bool same_pieces(const GradedSubspaceIdeal<Field>& a, const GradedSubspaceIdeal<Field>& b, int through) {
  for (int d = 0; d <= through; ++d) {
    const auto& pa = a.piece(d);
    const auto& pb = b.piece(d);
    if (pa.pivots != pb.pivots) return false;
    for (Eigen::Index r = 0; r < pa.rank(); ++r)
      for (Eigen::Index c = 0; c < a.size(d); ++c)
        if (!(pa.rows(r, c) == pb.rows(r, c))) return false;
  }
  return true;
}

}  // namespace fatbetti
