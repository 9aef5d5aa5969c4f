#include "fatbetti/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatbetti {

namespace {

void check_ring(const RingDescriptor& ring, const Monomial& m) {
  if (m.num_vars() != ring.num_vars)
    throw std::invalid_argument("monomial " + m.to_string() + " has " +
                                std::to_string(m.num_vars()) + " variables, ring has " +
                                std::to_string(ring.num_vars));
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring().num_vars != b.ring().num_vars)
    throw std::invalid_argument("ideals live in different rings");
}

}  // namespace

MonomialIdeal minimalize(const RingDescriptor& ring, std::vector<Monomial> gens) {
  for (const auto& g : gens) check_ring(ring, g);
  // Ascending degree first so every potential divisor is seen before its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return MonomialIdeal(ring, std::move(kept));
}

MonomialIdeal::MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens) : ring_(ring) {
  for (const auto& g : gens) check_ring(ring, g);
  const bool sorted_minimal = [&] {
    if (!std::is_sorted(gens.begin(), gens.end(), std::greater<>())) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j && gens[i].divides(gens[j])) return false;
    return true;
  }();
  if (sorted_minimal) {
    gens_ = std::move(gens);
  } else {
    gens_ = minimalize(ring, std::move(gens)).gens_;
  }
}

MonomialIdeal MonomialIdeal::unit(RingDescriptor ring) {
  return MonomialIdeal(ring, {Monomial::one(ring.num_vars)});
}

MonomialIdeal MonomialIdeal::variable_power(RingDescriptor ring, const std::vector<int>& support,
                                            int d) {
  if (d == 0) return unit(ring);
  return MonomialIdeal(ring, monomials_of_degree(ring, d, support));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }

bool MonomialIdeal::contains(const Monomial& m) const {
  check_ring(ring_, m);
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

int MonomialIdeal::min_generator_degree() const {
  int d = gens_.empty() ? 0 : gens_.front().degree();
  for (const auto& g : gens_) d = std::min(d, g.degree());
  return d;
}

int MonomialIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(int d) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_)
    if (g.degree() == d) out.push_back(g);
  return out;
}

std::optional<std::vector<int>> MonomialIdeal::variable_support() const {
  std::vector<int> vars;
  for (const auto& g : gens_) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.max_index());
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

MonomialIdeal quotient_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  check_ring(ideal.ring(), m);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(g / gcd(g, m));
  return minimalize(ideal.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& ideal, const Monomial& m) {
  check_ring(ideal.ring(), m);
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g * m);
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

std::vector<Monomial> degree_part(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ideal.ring(), d))
    if (ideal.contains(m)) out.push_back(std::move(m));
  return out;
}

MonomialIdeal component(const MonomialIdeal& ideal, int d) {
  return MonomialIdeal(ideal.ring(), degree_part(ideal, d));
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& m : ideal.gens()) {
    const int top = m.max_index();
    if (top < 0) continue;
    for (int i = 0; i < top; ++i) {
      Monomial moved = m.times_variable(i).times_variable(top, -1);
      if (!ideal.contains(moved)) return false;
    }
  }
  return true;
}

}  // namespace fatbetti
