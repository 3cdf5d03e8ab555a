#include "bei/field.hpp"

#include <limits>
#include <numeric>

#include "bei/errors.hpp"

namespace bei {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits_long(i128 v) {
  return v >= std::numeric_limits<long>::min() + 1 && v <= std::numeric_limits<long>::max();
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(u >> 64);
  mpz_class lo = static_cast<unsigned long>(u);
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

// ------------------------------------------------------------------ Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Rational r;
  if (fits_long(num) && fits_long(den)) {
    r.num_ = static_cast<long>(num);
    r.den_ = static_cast<long>(den);
  } else {
    r.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
    r.big_->canonicalize();
  }
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
      q.get_num() != std::numeric_limits<long>::min()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_unique<mpq_class>(std::move(q));
  }
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(num_), mpz_class(den_));
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw InvalidParameter("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw InvalidParameter("rational with zero denominator");
  return from_mpq(std::move(q));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(i128{a.num_} + b.num_, 1);
    return Rational::from_wide(i128{a.num_} * b.den_ + i128{b.num_} * a.den_, i128{a.den_} * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(i128{a.num_} - b.num_, 1);
    return Rational::from_wide(i128{a.num_} * b.den_ - i128{b.num_} * a.den_, i128{a.den_} * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return Rational::from_wide(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (!a.big_ && !b.big_) return Rational::from_wide(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  // Both sides are canonical, so a small value never equals a big one.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

// ----------------------------------------------------------------------- Mod

Mod::Mod(std::int64_t value, std::uint32_t p) : p_(p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

Mod Mod::inverse() const {
  if (v_ == 0) throw DomainError("division by zero");
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Mod(x0, p_);
}

std::string Mod::to_string() const {
  if (v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
  return std::to_string(v_);
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  bool ok = prime >= 2 && prime < (1u << 31);
  for (std::uint32_t d = 2; ok && std::uint64_t{d} * d <= prime; ++d)
    if (prime % d == 0) ok = false;
  if (!ok) throw InvalidParameter("field characteristic must be a prime below 2^31");
}

Mod PrimeField::parse(const std::string& text) const {
  const Rational q = Rational::parse(text);
  const mpq_class v = q.to_mpq();
  mpz_class num = v.get_num() % p, den = v.get_den() % p;
  if (num < 0) num += p;
  const Mod d(den.get_si(), p);
  if (d.is_zero()) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  return Mod(num.get_si(), p) / d;
}

}  // namespace bei
