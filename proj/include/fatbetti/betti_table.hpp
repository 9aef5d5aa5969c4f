#pragma once

#include "fatbetti/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fatbetti {

/// Graded Betti numbers beta_{i,j}(R/I), stored sparsely (zeros absent).
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree j)

  BettiTable() = default;
  explicit BettiTable(int num_vars) : num_vars_(num_vars) {}

  /// Table {beta_{0,0} = 1}.
  static BettiTable quotient_of_proper(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::uint64_t operator()(int i, int j) const;
  void add(int i, int j, std::uint64_t value);
  /// Adds a formula value; throws std::domain_error if it is negative or too large.
  void add(int i, int j, const BigInt& value);
  void set(int i, int j, std::uint64_t value);

  /// beta_i = sum_j beta_{i,j}.
  std::uint64_t total(int i) const;
  int max_index() const;          // largest i with a nonzero entry, -1 if empty
  /// Largest j - i over nonzero entries (Castelnuovo-Mumford regularity of R/I).
  int regularity() const;
  int min_degree(int i) const;    // -1 if column empty
  int max_degree(int i) const;    // -1 if column empty

  /// Copy with every i >= 1 entry moved from degree j to j + shift.
  BettiTable shifted(int shift) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int num_vars_ = 0;
  std::map<Key, std::uint64_t> entries_;
};

/// First bidegree (in key order) where the tables differ, if any.
std::optional<BettiTable::Key> first_difference(const BettiTable& a, const BettiTable& b);

}  // namespace fatbetti
