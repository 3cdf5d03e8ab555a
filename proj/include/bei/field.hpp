#pragma once

// Coefficient fields. Rationals are exact with an int64 fast path that
// promotes to GMP on overflow; residues carry their modulus so that element
// arithmetic needs no ambient context.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

namespace bei {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : num_(value) {}  // NOLINT: integers convert implicitly
  Rational(long num, long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Parses "a" or "a/b" with optional sign.
  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;
  bool is_small() const { return !big_; }

  Rational inverse() const;
  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);

  mpq_class to_mpq() const;
  std::string to_string() const;

 private:
  static Rational from_mpq(mpq_class q);
  static Rational from_wide(__int128 num, __int128 den);

  long num_ = 0;
  long den_ = 1;
  std::unique_ptr<mpq_class> big_;  // set when the value does not fit num_/den_
};

// Residue modulo a prime p < 2^31, stored canonically in [0, p).
class Mod {
 public:
  Mod() = default;
  Mod(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Mod inverse() const;
  Mod operator-() const { return Mod(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }
  friend Mod operator+(Mod a, Mod b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Mod(s, a.p_, raw_tag{});
  }
  friend Mod operator-(Mod a, Mod b) {
    return Mod(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, raw_tag{});
  }
  friend Mod operator*(Mod a, Mod b) {
    return Mod(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_), a.p_, raw_tag{});
  }
  friend Mod operator/(Mod a, Mod b) { return a * b.inverse(); }
  Mod& operator+=(Mod b) { return *this = *this + b; }
  Mod& operator-=(Mod b) { return *this = *this - b; }
  Mod& operator*=(Mod b) { return *this = *this * b; }
  friend bool operator==(Mod a, Mod b) { return a.v_ == b.v_; }

  // Symmetric representative, e.g. p-1 prints as -1.
  std::string to_string() const;

 private:
  struct raw_tag {};
  Mod(std::uint32_t v, std::uint32_t p, raw_tag) : v_(v), p_(p) {}
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

struct Rationals {
  using Element = Rational;
  Element from_int(long k) const { return Rational(k); }
  Element parse(const std::string& text) const { return Rational::parse(text); }
  std::string name() const { return "QQ"; }
};

struct PrimeField {
  using Element = Mod;
  explicit PrimeField(std::uint32_t p);  // throws InvalidParameter unless p is prime < 2^31
  std::uint32_t p;
  Element from_int(long k) const { return Mod(k, p); }
  Element parse(const std::string& text) const;
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace bei
