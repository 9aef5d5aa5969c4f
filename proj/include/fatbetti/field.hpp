#pragma once

// Exact scalar types usable as Eigen scalars, plus the runtime field
// descriptor that selects between them.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fatbetti {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Element of Z/pZ with the modulus carried by the value.
///
/// Eigen builds scalars from integer literals (Scalar(0), Scalar(1)); such
/// values have modulus 0 and adopt the modulus of the other operand the first
/// time they meet one.
class ModP {
 public:
  constexpr ModP() = default;
  constexpr ModP(long long v) : value_(v) {}  // NOLINT: literal conversion
  ModP(long long v, std::uint32_t p) : value_(reduce(v, p)), modulus_(p) {}

  std::uint32_t modulus() const { return modulus_; }
  /// Canonical representative in [0, p), or the raw literal when unbound.
  long long value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  ModP inverse() const;

  friend ModP operator+(ModP a, ModP b) {
    auto p = bind(a, b);
    return p ? ModP(a.value_ + b.value_, p) : ModP(a.value_ + b.value_);
  }
  friend ModP operator-(ModP a, ModP b) {
    auto p = bind(a, b);
    return p ? ModP(a.value_ - b.value_, p) : ModP(a.value_ - b.value_);
  }
  friend ModP operator*(ModP a, ModP b) {
    auto p = bind(a, b);
    return p ? ModP(a.value_ * b.value_, p) : ModP(a.value_ * b.value_);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse_as(a.modulus_); }
  ModP operator-() const { return modulus_ ? ModP(-value_, modulus_) : ModP(-value_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  ModP& operator/=(ModP b) { return *this = *this / b; }

  friend bool operator==(ModP a, ModP b) {
    bind(a, b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(ModP a, ModP b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.value_; }

 private:
  static long long reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  // Brings both operands to a common modulus; 0 when both are literals.
  static std::uint32_t bind(ModP& a, ModP& b) {
    if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_)
      throw std::logic_error("ModP: mixed moduli");
    std::uint32_t p = a.modulus_ ? a.modulus_ : b.modulus_;
    if (p) {
      if (!a.modulus_) a = ModP(a.value_, p);
      if (!b.modulus_) b = ModP(b.value_, p);
    }
    return p;
  }
  ModP inverse_as(std::uint32_t hint) const;

  long long value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline ModP ModP::inverse_as(std::uint32_t hint) const {
  ModP x = *this;
  if (!x.modulus_ && hint) x = ModP(x.value_, hint);
  return x.inverse();
}

inline ModP ModP::inverse() const {
  if (!modulus_) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::logic_error("ModP: inverse of an unbound literal");
  }
  if (value_ == 0) throw std::domain_error("ModP: division by zero");
  // Extended Euclid on (value, p).
  long long a = value_, b = modulus_, x0 = 1, x1 = 0;
  while (b) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return ModP(x0, modulus_);
}

inline bool is_zero(const ModP& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }

/// num / den as an exact rational.
inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  using boost::multiprecision::mpz_int;
  return Rational(mpz_int(num), mpz_int(den));
}

/// Coefficient field selected at runtime: 0 for the rationals, else a prime.
struct ScalarField {
  std::uint32_t characteristic = 32003;

  static ScalarField rationals() { return {0}; }
  static ScalarField prime(std::uint32_t p) { return {p}; }

  bool operator==(const ScalarField&) const = default;
  std::string name() const {
    return characteristic ? "GF(" + std::to_string(characteristic) + ")" : "QQ";
  }
};

bool is_prime(std::uint64_t p);

/// Throws std::invalid_argument unless the characteristic is 0 or prime.
void validate(const ScalarField& field);

/// Z/pZ as an element factory.
struct PrimeField {
  using Scalar = ModP;
  std::uint32_t p;
  Scalar operator()(long long v) const { return ModP(v, p); }
  std::uint32_t characteristic() const { return p; }
};

/// Q as an element factory.
struct RationalField {
  using Scalar = Rational;
  Scalar operator()(long long v) const { return Rational(v); }
  std::uint32_t characteristic() const { return 0; }
};

/// Invokes fn with the element factory for `field`.
template <typename Fn>
decltype(auto) with_field(const ScalarField& field, Fn&& fn) {
  validate(field);
  if (field.characteristic == 0) return fn(RationalField{});
  return fn(PrimeField{field.characteristic});
}

}  // namespace fatbetti

namespace Eigen {
template <>
struct NumTraits<fatbetti::ModP> : GenericNumTraits<fatbetti::ModP> {
  using Real = fatbetti::ModP;
  using NonInteger = fatbetti::ModP;
  using Literal = fatbetti::ModP;
  using Nested = fatbetti::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
