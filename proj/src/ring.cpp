#include "fatbetti/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fatbetti {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate(const ScalarField& field) {
  if (field.characteristic == 0) return;
  if (!is_prime(field.characteristic))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " +
                                std::to_string(field.characteristic));
  if (field.characteristic >= (1u << 31))
    throw std::invalid_argument("prime characteristic must be below 2^31");
}

RingDescriptor::RingDescriptor(int vars, ScalarField f) : num_vars(vars), field(f) {
  if (vars < 1) throw std::invalid_argument("ring needs at least one variable");
  validate(f);
}

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw std::out_of_range("variable index");
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

int Monomial::max_index() const {
  for (int i = num_vars() - 1; i >= 0; --i)
    if (exp_[static_cast<std::size_t>(i)] > 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial r = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= other.exp_[i];
  return r;
}

Monomial Monomial::times_variable(int i, int power) const {
  Monomial r = *this;
  r.exp_[static_cast<std::size_t>(i)] += power;
  if (r.exp_[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("negative exponent");
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (int i = 0; i < num_vars(); ++i) {
    int e = (*this)[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

BigInt binom(long long a, long long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return r;
}

long long binom_ll(long long a, long long b) {
  BigInt v = binom(a, b);
  if (v > std::numeric_limits<long long>::max()) throw std::overflow_error("binomial overflow");
  return v.convert_to<long long>();
}

namespace {

void enumerate(const std::vector<int>& support, std::size_t pos, int remaining,
               std::vector<int>& exps, std::vector<Monomial>& out) {
  const auto var = static_cast<std::size_t>(support[pos]);
  if (pos + 1 == support.size()) {
    exps[var] = remaining;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(support, pos + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int d,
                                          const std::vector<int>& support) {
  if (d < 0) return {};
  std::vector<int> vars = support;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int v : vars)
    if (v < 0 || v >= ring.num_vars) throw std::out_of_range("support variable out of range");
  if (d == 0) return {Monomial::one(ring.num_vars)};
  if (vars.empty()) return {};
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(ring.num_vars), 0);
  enumerate(vars, 0, d, exps, out);
  return out;
}

std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int d) {
  return monomials_of_degree(ring, d, variable_range(0, ring.num_vars - 1));
}

std::vector<int> variable_range(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

}  // namespace fatbetti
