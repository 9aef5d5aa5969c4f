#include "fatbetti/fat_points.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatbetti {

FatPointConfig FatPointConfig::coordinate_points(int n, std::vector<int> multiplicities,
                                                 ScalarField field) {
  FatPointConfig c;
  c.n = n;
  c.multiplicities = std::move(multiplicities);
  c.field = field;
  c.validate();
  return c;
}

void FatPointConfig::validate() const {
  if (n < 1) throw std::invalid_argument("projective dimension must be at least 1");
  if (multiplicities.empty()) throw std::invalid_argument("no fat points given");
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 1) throw std::invalid_argument("multiplicities must be positive");
    if (i > 0 && multiplicities[i] > multiplicities[i - 1])
      throw std::invalid_argument("multiplicities must be weakly decreasing");
  }
  fatbetti::validate(field);
  if (coordinate_placement()) {
    if (num_points() > n + 1)
      throw std::invalid_argument("coordinate placement holds at most n+1 = " +
                                  std::to_string(n + 1) + " points, got " +
                                  std::to_string(num_points()));
    return;
  }
  if (coordinates.size() != multiplicities.size())
    throw std::invalid_argument("one coordinate vector per multiplicity is required");
  for (const auto& p : coordinates) {
    if (static_cast<int>(p.size()) != n + 1)
      throw std::invalid_argument("points need n+1 homogeneous coordinates");
    if (std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; }))
      throw std::invalid_argument("the zero vector is not a projective point");
  }
  for (std::size_t a = 0; a < coordinates.size(); ++a)
    for (std::size_t b = a + 1; b < coordinates.size(); ++b) {
      const auto& p = coordinates[a];
      const auto& q = coordinates[b];
      bool proportional = true;
      for (std::size_t i = 0; i < p.size() && proportional; ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          if (p[i] * q[j] != p[j] * q[i]) {
            proportional = false;
            break;
          }
      if (proportional)
        throw std::invalid_argument("points " + std::to_string(a) + " and " + std::to_string(b) +
                                    " coincide");
    }
}

bool HoleBounds::admits(const Monomial& m) const {
  for (int k = 0; k < m.num_vars(); ++k) {
    const auto& lim = limits[static_cast<std::size_t>(k)];
    if (lim && m[k] > *lim - 1) return false;
  }
  return true;
}

int HoleBounds::saturated_below_max(const Monomial& m) const {
  int count = 0;
  for (int k = 0; k < m.max_index(); ++k) {
    const auto& lim = limits[static_cast<std::size_t>(k)];
    if (lim && m[k] >= *lim - 1) ++count;
  }
  return count;
}

MonomialIdeal apply_holes(const MonomialIdeal& base, const HoleBounds& bounds) {
  std::vector<Monomial> kept;
  for (const auto& g : base.gens())
    if (bounds.admits(g)) kept.push_back(g);
  return MonomialIdeal(base.ring(), std::move(kept));
}

MonomialIdeal fat_point_ideal(const FatPointConfig& config) {
  config.validate();
  if (!config.coordinate_placement())
    throw std::invalid_argument("fat_point_ideal needs coordinate placement");
  const RingDescriptor ring = config.ring();
  std::optional<MonomialIdeal> result;
  for (int i = 0; i < config.num_points(); ++i) {
    std::vector<int> support;
    for (int k = 0; k <= config.n; ++k)
      if (k != i) support.push_back(k);
    auto power = MonomialIdeal::variable_power(ring, support,
                                               config.multiplicities[static_cast<std::size_t>(i)]);
    result = result ? intersect(*result, power) : power;
  }
  return *result;
}

std::vector<std::vector<Monomial>> fatabbi_generators(int n, int r, int a) {
  if (r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
  if (a < 1) throw std::invalid_argument("multiplicity must be positive");
  const RingDescriptor ring(n + 1);
  std::vector<std::vector<Monomial>> sets;
  sets.push_back(r + 1 <= n ? monomials_of_degree(ring, a, variable_range(r + 1, n))
                            : std::vector<Monomial>{});
  for (int t = 1; t <= a; ++t) {
    std::vector<Monomial> g;
    for (auto& m : monomials_of_degree(ring, a + t)) {
      bool bounded = true;
      int at_t = 0;
      for (int i = 0; i <= r; ++i) {
        if (m[i] > t) bounded = false;
        if (m[i] == t) ++at_t;
      }
      if (bounded && at_t >= 2) g.push_back(std::move(m));
    }
    sets.push_back(std::move(g));
  }
  return sets;
}

std::vector<Monomial> degree_piece(const FatPointConfig& config, int t) {
  config.validate();
  if (!config.coordinate_placement())
    throw std::invalid_argument("degree_piece needs coordinate placement");
  const int a0 = config.multiplicities.front();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(config.ring(), a0 + t)) {
    bool ok = true;
    for (int i = 0; i < config.num_points() && ok; ++i)
      ok = m[i] <= a0 - config.multiplicities[static_cast<std::size_t>(i)] + t;
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

LexWithHoles component_as_lex_with_holes(const FatPointConfig& config, int t) {
  config.validate();
  if (!config.coordinate_placement())
    throw std::invalid_argument("component_as_lex_with_holes needs coordinate placement");
  const RingDescriptor ring = config.ring();
  const int a0 = config.multiplicities.front();
  HoleBounds bounds = HoleBounds::unbounded(ring.num_vars);
  for (int i = 0; i < config.num_points(); ++i)
    bounds.limits[static_cast<std::size_t>(i)] =
        a0 - config.multiplicities[static_cast<std::size_t>(i)] + t + 1;
  return {MonomialIdeal::variable_power(ring, variable_range(0, config.n), a0 + t),
          std::move(bounds), a0 + t};
}

int top_generator_degree(const FatPointConfig& config) {
  config.validate();
  return config.num_points() == 1 ? config.multiplicities[0]
                                  : config.multiplicities[0] + config.multiplicities[1];
}

}  // namespace fatbetti
