#include "bei/monomial.hpp"

#include <algorithm>

#include "bei/errors.hpp"

namespace bei {

namespace {

constexpr int kMaxExponent = 255;

void check_slot(int slot) {
  if (slot < 0 || slot >= kMaxSlots)
    throw InvalidParameter("variable slot " + std::to_string(slot) + " outside 0.." +
                           std::to_string(kMaxSlots - 1));
}

}  // namespace

Monomial Monomial::variable(int slot, int exponent) {
  Monomial m;
  m.set_exponent(slot, exponent);
  return m;
}

void Monomial::set_exponent(int slot, int value) {
  check_slot(slot);
  if (value < 0 || value > kMaxExponent)
    throw ResourceError("exponent " + std::to_string(value) + " outside 0..255");
  auto& e = e_[static_cast<std::size_t>(slot)];
  degree_ += value - e;
  e = static_cast<std::uint8_t>(value);
  if (value) support_ |= std::uint64_t{1} << slot;
  else support_ &= ~(std::uint64_t{1} << slot);
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint8_t x) { return x <= 1; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxSlots; ++i) {
    const int s = a.e_[i] + b.e_[i];
    overflow |= s > kMaxExponent;
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow) throw ResourceError("monomial exponent overflow (cap 255)");
  r.support_ = a.support_ | b.support_;
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSlots; ++i) {
    r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
    if (r.e_[i]) r.support_ |= std::uint64_t{1} << i;
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxSlots; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.support_ = a.support_ | b.support_;
  r.degree_ = d;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxSlots; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.support_ = a.support_ & b.support_;
  r.degree_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t x : e_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<int> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw InvalidParameter("variable precedence must be a permutation of slots 1..m");
  // The identity permutation is the default and takes the fast path.
  if (std::is_sorted(precedence_.begin(), precedence_.end())) precedence_.clear();
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  throw InvalidParameter("unknown monomial order '" + name + "'");
}

std::string MonomialOrder::name() const {
  std::string s = kind_ == OrderKind::lex ? "lex" : "degrevlex";
  if (!precedence_.empty()) {
    s += "[";
    for (std::size_t i = 0; i < precedence_.size(); ++i) s += (i ? "," : "") + std::to_string(precedence_[i]);
    s += "]";
  }
  return s;
}

int MonomialOrder::compare_slow(const Monomial& a, const Monomial& b) const {
  if (a.exponent(0) != b.exponent(0)) return a.exponent(0) > b.exponent(0) ? 1 : -1;
  const auto slot_at = [&](std::size_t k) {
    return precedence_.empty() ? static_cast<int>(k) + 1 : precedence_[k];
  };
  const std::size_t count = precedence_.empty() ? kMaxSlots - 1 : precedence_.size();
  if (kind_ == OrderKind::lex) {
    for (std::size_t k = 0; k < count; ++k) {
      const int s = slot_at(k);
      if (a.exponent(s) != b.exponent(s)) return a.exponent(s) > b.exponent(s) ? 1 : -1;
    }
    return 0;
  }
  if (a.ring_degree() != b.ring_degree()) return a.ring_degree() > b.ring_degree() ? 1 : -1;
  for (std::size_t k = count; k-- > 0;) {
    const int s = slot_at(k);
    if (a.exponent(s) != b.exponent(s)) return a.exponent(s) < b.exponent(s) ? 1 : -1;
  }
  return 0;
}

}  // namespace bei
