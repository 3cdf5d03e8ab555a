#pragma once

// Monomials over the slots 0..kMaxSlots-1 of a fixed exponent array.
// Ring variables x_1..x_n sit in slots 1..n and y_1..y_n in slots n+1..2n;
// slot 0 is reserved for the auxiliary elimination variable t.

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace bei {

inline constexpr int kMaxSlots = 48;
inline constexpr int kEliminationSlot = 0;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int slot, int exponent = 1);

  int exponent(int slot) const { return e_[static_cast<std::size_t>(slot)]; }
  void set_exponent(int slot, int value);
  int degree() const { return degree_; }
  // Degree with the elimination slot ignored.
  int ring_degree() const { return degree_ - e_[0]; }
  // Bit s set when slot s has a positive exponent.
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  int max_slot() const { return support_ ? 63 - std::countl_zero(support_) : -1; }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    bool bad = false;
    for (std::size_t i = 0; i < kMaxSlots; ++i) bad |= e_[i] > other.e_[i];
    return !bad;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support_ == b.support_ && std::memcmp(a.e_.data(), b.e_.data(), kMaxSlots) == 0;
  }

  // Lexicographic comparison with slot 0 most significant.
  int lex_compare(const Monomial& b) const {
    const int c = std::memcmp(e_.data(), b.e_.data(), kMaxSlots);
    return (c > 0) - (c < 0);
  }

  std::size_t hash() const;
  const std::uint8_t* data() const { return e_.data(); }

 private:
  std::array<std::uint8_t, kMaxSlots> e_{};
  std::uint64_t support_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { lex, degrevlex };

// Slot 0 is always compared first (an elimination block); the remaining slots
// follow the chosen order, with precedence given by an optional permutation
// (first entry = greatest variable). The default is slot order, so plain lex
// reads t > x_1 > ... > x_n > y_1 > ... > y_n.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind, std::vector<int> precedence = {});

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::degrevlex); }
  static MonomialOrder parse(const std::string& name);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& precedence() const { return precedence_; }
  bool is_default_lex() const { return kind_ == OrderKind::lex && precedence_.empty(); }

  // Sign of a - b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == OrderKind::lex && precedence_.empty()) return a.lex_compare(b);
    return compare_slow(a, b);
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int compare_slow(const Monomial& a, const Monomial& b) const;
  OrderKind kind_ = OrderKind::lex;
  std::vector<int> precedence_;
};

}  // namespace bei
