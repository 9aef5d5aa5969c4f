#include "fatbetti/splitting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace fatbetti {

std::string to_string(SplitVerdict::Kind kind) {
  switch (kind) {
    case SplitVerdict::Kind::verified:
      return "verified";
    case SplitVerdict::Kind::refuted:
      return "refuted";
    case SplitVerdict::Kind::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

using Assoc = std::map<Monomial, Monomial>;

Assoc as_total_map(const std::vector<std::pair<Monomial, Monomial>>& pairs,
                   const std::vector<Monomial>& domain, const std::vector<Monomial>& codomain,
                   const char* name) {
  Assoc out;
  const std::set<Monomial> dom(domain.begin(), domain.end());
  const std::set<Monomial> cod(codomain.begin(), codomain.end());
  for (const auto& [w, image] : pairs) {
    if (!dom.count(w))
      throw std::invalid_argument(std::string(name) + " is defined at " + w.to_string() +
                                  ", which is not a minimal generator of U ∩ V");
    if (!cod.count(image))
      throw std::invalid_argument(std::string(name) + "(" + w.to_string() + ") = " +
                                  image.to_string() + " is not a minimal generator");
    if (!out.emplace(w, image).second)
      throw std::invalid_argument(std::string(name) + " has two values at " + w.to_string());
  }
  for (const auto& w : domain)
    if (!out.count(w)) throw std::invalid_argument(std::string(name) + " is undefined at " + w.to_string());
  return out;
}

SplitVerdict refuted(std::string reason, std::vector<Monomial> witness = {}) {
  return {SplitVerdict::Kind::refuted, std::move(reason), std::move(witness)};
}

// lcm of the chosen rows of a flat exponent table.
struct LcmAccumulator {
  int nv;
  std::vector<int> h, p, s;

  explicit LcmAccumulator(int vars) : nv(vars), h(vars, 0), p(vars, 0), s(vars, 0) {}
  void reset() {
    std::fill(h.begin(), h.end(), 0);
    std::fill(p.begin(), p.end(), 0);
    std::fill(s.begin(), s.end(), 0);
  }
  void absorb(const Monomial& w, const Monomial& a, const Monomial& b) {
    for (int k = 0; k < nv; ++k) {
      h[k] = std::max(h[k], w[k]);
      p[k] = std::max(p[k], a[k]);
      s[k] = std::max(s[k], b[k]);
    }
  }
  // Both images divide lcm(H) automatically; strictness means they differ from it.
  bool strict() const { return p != h && s != h; }
};

}  // namespace

SplitVerdict verify_splitting(const MonomialIdeal& M, const SplitCandidate& cand,
                              std::size_t subset_budget, std::uint64_t seed) {
  const MonomialIdeal W = intersect(cand.U, cand.V);
  const auto& ws = W.gens();
  const Assoc phi = as_total_map(cand.phi, ws, cand.U.gens(), "phi");
  const Assoc psi = as_total_map(cand.psi, ws, cand.V.gens(), "psi");

  if (cand.U.is_zero() || cand.V.is_zero()) return refuted("U and V must both be nonzero");
  std::vector<Monomial> merged = cand.U.gens();
  for (const auto& g : cand.V.gens()) {
    if (std::find(merged.begin(), merged.end(), g) != merged.end())
      return refuted("G(U) and G(V) share a generator", {g});
    merged.push_back(g);
  }
  std::sort(merged.begin(), merged.end(), std::greater<>());
  if (merged != M.gens()) return refuted("G(U) ∪ G(V) is not G(M)");

  for (const auto& w : ws)
    if (!(lcm(phi.at(w), psi.at(w)) == w)) return refuted("w != lcm(phi(w), psi(w))", {w});

  const int nv = M.ring().num_vars;
  LcmAccumulator acc(nv);
  auto check_subset = [&](const std::vector<std::size_t>& idx) {
    acc.reset();
    for (auto k : idx) acc.absorb(ws[k], phi.at(ws[k]), psi.at(ws[k]));
    return acc.strict();
  };
  auto witness_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<Monomial> H;
    for (auto k : idx) H.push_back(ws[k]);
    return H;
  };
  const char* cond_b = "lcm(phi(H)) or lcm(psi(H)) equals lcm(H)";

  const std::size_t k = ws.size();
  if (k <= kExhaustiveSubsetLimit) {
    // Flat DP over subsets: row of mask = row of mask without its low bit, lcm'd with that bit.
    const std::size_t count = std::size_t{1} << k;
    std::vector<int> h(count * nv, 0), p(count * nv, 0), s(count * nv, 0);
    for (std::size_t mask = 1; mask < count; ++mask) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t rest = mask & (mask - 1);
      const Monomial& w = ws[low];
      const Monomial& a = phi.at(w);
      const Monomial& b = psi.at(w);
      bool p_equal = true, s_equal = true;
      for (int v = 0; v < nv; ++v) {
        const std::size_t at = mask * nv + v, from = rest * nv + v;
        h[at] = std::max(h[from], w[v]);
        p[at] = std::max(p[from], a[v]);
        s[at] = std::max(s[from], b[v]);
        p_equal = p_equal && p[at] == h[at];
        s_equal = s_equal && s[at] == h[at];
      }
      if (p_equal || s_equal) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < k; ++j)
          if (mask >> j & 1u) idx.push_back(j);
        return refuted(cond_b, witness_of(idx));
      }
    }
    return {SplitVerdict::Kind::verified, "all " + std::to_string(count - 1) + " subsets checked", {}};
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (!check_subset({i})) return refuted(cond_b, witness_of({i}));
    for (std::size_t j = i + 1; j < k; ++j)
      if (!check_subset({i, j})) return refuted(cond_b, witness_of({i, j}));
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t trial = 0; trial < subset_budget; ++trial) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < k; ++j)
      if (coin(rng)) idx.push_back(j);
    if (idx.empty()) continue;
    if (!check_subset(idx)) return refuted(cond_b, witness_of(idx));
  }
  return {SplitVerdict::Kind::inconclusive,
          std::to_string(k) + " generators of U ∩ V; singletons, pairs and " +
              std::to_string(subset_budget) + " random subsets pass",
          {}};
}

BettiTable recombine_betti(const BettiTable& bU, const BettiTable& bV, const BettiTable& bUcapV) {
  if (bU.num_vars() != bV.num_vars() || bU.num_vars() != bUcapV.num_vars())
    throw std::invalid_argument("recombine_betti: tables live over different rings");
  BettiTable out(bU.num_vars());
  for (const auto* t : {&bU, &bV})
    for (const auto& [key, v] : t->entries())
      if (key.first >= 1) out.add(key.first, key.second, v);
  for (const auto& [key, v] : bUcapV.entries())
    if (!(key.first == 0 && key.second == 0)) out.add(key.first + 1, key.second, v);
  if (bU(0, 0) || bV(0, 0) || bUcapV(0, 0)) out.set(0, 0, 1);
  return out;
}

SplitCandidate fatabbi_split(int n, int a0, int a1) {
  if (n < 2) throw std::invalid_argument("fatabbi_split needs n >= 2");
  if (a1 < 1 || a0 < a1) throw std::invalid_argument("fatabbi_split needs a0 >= a1 >= 1");
  const RingDescriptor ring(n + 1);
  const auto tail = variable_range(2, n);
  const Monomial one = Monomial::one(n + 1);

  MonomialIdeal U(ring), V(ring);
  for (int t = 0; t <= a0 - a1; ++t)
    U = sum(U, multiply(MonomialIdeal::variable_power(ring, tail, a0 - t), one.times_variable(1, t)));
  for (int t = 1; t <= a1; ++t)
    V = sum(V, multiply(MonomialIdeal::variable_power(ring, tail, a1 - t),
                        one.times_variable(0, t).times_variable(1, a0 - a1 + t)));

  SplitCandidate cand{U, V, {}, {}};
  const MonomialIdeal W = intersect(U, V);
  for (const auto& w : W.gens()) {
    std::vector<Monomial> divisors;
    for (const auto& g : U.gens())
      if (g.divides(w) && g[1] == a0 - a1) divisors.push_back(g);
    if (divisors.size() != 1)
      throw std::logic_error("fatabbi_split: phi(" + w.to_string() + ") is not unique");
    const Monomial psi = w / Monomial::variable(n + 1, w.max_index());
    if (!(lcm(divisors.front(), psi) == w) ||
        std::find(V.gens().begin(), V.gens().end(), psi) == V.gens().end())
      throw std::logic_error("fatabbi_split: no valid factorization of " + w.to_string());
    cand.phi.emplace_back(w, divisors.front());
    cand.psi.emplace_back(w, psi);
  }
  return cand;
}

}  // namespace fatbetti
