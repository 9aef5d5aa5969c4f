#include "fatbetti/betti_table.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace fatbetti {

BettiTable BettiTable::quotient_of_proper(int num_vars) {
  BettiTable t(num_vars);
  t.set(0, 0, 1);
  return t;
}

std::uint64_t BettiTable::operator()(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

void BettiTable::add(int i, int j, const BigInt& value) {
  if (value < 0)
    throw std::domain_error("negative Betti contribution at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  if (value > std::numeric_limits<std::uint64_t>::max())
    throw std::domain_error("Betti number overflow");
  add(i, j, value.convert_to<std::uint64_t>());
}

void BettiTable::set(int i, int j, std::uint64_t value) {
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t t = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) t += v;
  return t;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

int BettiTable::regularity() const {
  int r = std::numeric_limits<int>::min();
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return entries_.empty() ? 0 : r;
}

int BettiTable::min_degree(int i) const {
  for (const auto& [key, v] : entries_)
    if (key.first == i) return key.second;
  return -1;
}

int BettiTable::max_degree(int i) const {
  int m = -1;
  for (const auto& [key, v] : entries_)
    if (key.first == i) m = key.second;
  return m;
}

BettiTable BettiTable::shifted(int shift) const {
  BettiTable out(num_vars_);
  for (const auto& [key, v] : entries_)
    out.add(key.first, key.first == 0 ? key.second : key.second + shift, v);
  return out;
}

std::optional<BettiTable::Key> first_difference(const BettiTable& a, const BettiTable& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first))
      return ia->first;
    if (ia == a.entries().end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace fatbetti
