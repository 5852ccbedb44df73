// Exact coefficient fields: arbitrary-precision rationals and prime fields F_p.
// All arithmetic in the library is exact; there is no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncgb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Which field a presentation works over: characteristic 0 means Q,
// otherwise a prime p for F_p.
struct FieldDesc {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  std::string str() const {
    return is_rational() ? std::string("Q")
                         : "F" + std::to_string(characteristic);
  }
  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Exact rational scalar. Stored in lowest terms with positive denominator
// (maintained by the backing cpp_rational).
class Rational {
 public:
  Rational() = default;
  explicit Rational(long long n) : v_(n) {}
  explicit Rational(BigRational v) : v_(std::move(v)) {}

  static Rational from_fraction(const FieldDesc&, long long num,
                                long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(BigRational(BigInt(num)) / BigRational(BigInt(den)));
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return v_ < 0; }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero scalar");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational&, const Rational&) = default;

  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero scalar");
    return Rational(1 / v_);
  }

  // "3", "-3/2"; lowest terms, denominator omitted when 1.
  std::string str() const { return v_.str(); }
  std::string magnitude_str() const {
    return is_negative() ? Rational(-v_).str() : str();
  }

  const BigRational& value() const { return v_; }

 private:
  BigRational v_;
};

// Element of F_p for a runtime prime p. Each value carries its modulus; a
// default-constructed value is an unbound zero that adopts the modulus of
// the first operand it meets.
class PrimeField {
 public:
  PrimeField() = default;
  PrimeField(std::uint64_t v, std::uint32_t p) : v_(v % p), p_(p) {}

  static PrimeField from_fraction(const FieldDesc& field, long long num,
                                  long long den) {
    if (field.characteristic == 0)
      throw std::invalid_argument("prime field scalar needs a prime modulus");
    const std::uint32_t p = field.characteristic;
    auto residue = [p](long long x) -> std::uint64_t {
      long long r = x % static_cast<long long>(p);
      if (r < 0) r += p;
      return static_cast<std::uint64_t>(r);
    };
    PrimeField n(residue(num), p);
    PrimeField d(residue(den), p);
    if (d.is_zero())
      throw std::invalid_argument("denominator vanishes in F" +
                                  std::to_string(p));
    return n / d;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return false; }  // F_p has no canonical sign

  PrimeField operator-() const {
    if (p_ == 0) return *this;
    return PrimeField(v_ == 0 ? 0 : p_ - v_, p_);
  }
  PrimeField& operator+=(const PrimeField& o) {
    bind(o);
    if (p_ == 0) return *this;
    v_ = (v_ + o.v_) % p_;
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) { return *this += -o; }
  PrimeField& operator*=(const PrimeField& o) {
    bind(o);
    if (p_ == 0) return *this;
    v_ = (static_cast<unsigned __int128>(v_) * o.v_) % p_;
    return *this;
  }
  PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }
  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.v_ == b.v_ && (a.p_ == b.p_ || a.v_ == 0);
  }

  PrimeField inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero scalar");
    // Fermat: v^(p-2) mod p.
    std::uint64_t base = v_, e = p_ - 2, acc = 1;
    while (e) {
      if (e & 1) acc = (static_cast<unsigned __int128>(acc) * base) % p_;
      base = (static_cast<unsigned __int128>(base) * base) % p_;
      e >>= 1;
    }
    return PrimeField(acc, p_);
  }

  std::string str() const { return std::to_string(v_); }
  std::string magnitude_str() const { return str(); }

  std::uint64_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

 private:
  void bind(const PrimeField& o) {
    if (p_ == 0) p_ = o.p_;
    else if (o.p_ != 0 && o.p_ != p_)
      throw std::invalid_argument("mixed prime field moduli");
    if (p_ != 0) v_ %= p_;
  }

  std::uint64_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class K>
concept ScalarField = requires(K a, const K b, const FieldDesc f) {
  { K() };
  { K::from_fraction(f, 1LL, 1LL) } -> std::same_as<K>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.is_one() } -> std::convertible_to<bool>;
  { b.is_negative() } -> std::convertible_to<bool>;
  { -b } -> std::same_as<K>;
  { a += b } -> std::same_as<K&>;
  { a *= b } -> std::same_as<K&>;
  { b.inverse() } -> std::same_as<K>;
  { b.str() } -> std::same_as<std::string>;
  { b == b } -> std::convertible_to<bool>;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<PrimeField>);

}  // namespace ncgb
