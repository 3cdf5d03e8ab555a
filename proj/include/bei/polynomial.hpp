#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// Terms are kept sorted by descending default lex (slot 0 first), which makes
// the representation canonical: two polynomials are equal exactly when their
// term vectors are. Algorithms working under other orders re-sort locally.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bei/errors.hpp"
#include "bei/field.hpp"
#include "bei/monomial.hpp"

namespace bei {

// The ring K[x_1..x_n, y_1..y_n]; x_i is slot i and y_i is slot n+i.
struct Ring {
  int n = 0;

  int nvars() const { return 2 * n; }
  int x(int i) const { return i; }
  int y(int i) const { return n + i; }
  friend bool operator==(const Ring&, const Ring&) = default;
};

template <class F>
class Polynomial {
 public:
  using Coeff = typename F::Element;
  struct Term {
    Monomial mono;
    Coeff coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  // Sorts, merges equal monomials and drops zero coefficients.
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

  static Polynomial term(const Monomial& m, Coeff c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial constant(Coeff c) { return term(Monomial{}, std::move(c)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  // None for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  int max_slot() const {
    int s = -1;
    for (const Term& t : terms_) s = std::max(s, t.mono.max_slot());
    return s;
  }
  bool uses_slot(int slot) const {
    for (const Term& t : terms_)
      if (t.mono.exponent(slot)) return true;
    return false;
  }

  // Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    if (order.is_default_lex()) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_)
      if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> acc;
    acc.reserve(a.size() * b.size());
    for (const Term& s : a.terms_)
      for (const Term& t : b.terms_) acc.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial(std::move(acc));
  }
  Polynomial scaled(const Coeff& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
  }
  // Multiplication by a monomial keeps the lex order of the terms.
  Polynomial shifted(const Monomial& m) const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono.lex_compare(b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
      else out.push_back(std::move(t));
      if (out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      const int c = i == a.size() ? -1 : j == b.size() ? 1 : a.terms_[i].mono.lex_compare(b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? -b.terms_[j].coeff : b.terms_[j].coeff});
        ++j;
      } else {
        Coeff s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// x_i * y_j - x_j * y_i, written for the given (not necessarily ordered) pair.
template <class F>
Polynomial<F> minor_polynomial(const F& field, const Ring& ring, int i, int j) {
  Monomial a = Monomial::variable(ring.x(i)) * Monomial::variable(ring.y(j));
  Monomial b = Monomial::variable(ring.x(j)) * Monomial::variable(ring.y(i));
  return Polynomial<F>::term(a, field.from_int(1)) - Polynomial<F>::term(b, field.from_int(1));
}

template <class F>
Polynomial<F> variable_polynomial(const F& field, int slot) {
  return Polynomial<F>::term(Monomial::variable(slot), field.from_int(1));
}

// Quotient f / g; throws InternalError when g does not divide f exactly.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& f, const Polynomial<F>& g) {
  using Term = typename Polynomial<F>::Term;
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lt = g.terms().front();
  const auto lc_inv = lt.coeff.inverse();
  std::vector<Term> quotient;
  Polynomial<F> rest = f;
  while (!rest.is_zero()) {
    const Term& head = rest.terms().front();
    if (!lt.mono.divides(head.mono)) throw InternalError("polynomial division is not exact");
    Term q{head.mono / lt.mono, head.coeff * lc_inv};
    rest = rest - g.shifted(q.mono).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial<F>(std::move(quotient));
}

// ------------------------------------------------------------- text format
//
// Terms like "3/2*x1*y4^2 - t*x2", 1-based indices, "t" for slot 0.

inline std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (int slot = 0; slot < kMaxSlots; ++slot) {
    const int e = m.exponent(slot);
    if (!e) continue;
    if (!s.empty()) s += '*';
    if (slot == 0) s += "t";
    else if (slot <= ring.n) s += "x" + std::to_string(slot);
    else if (slot <= 2 * ring.n) s += "y" + std::to_string(slot - ring.n);
    else s += "v" + std::to_string(slot);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

template <class F>
std::string to_string(const Polynomial<F>& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) s += c;
    else if (c == "1") s += monomial_to_string(t.mono, ring);
    else s += c + "*" + monomial_to_string(t.mono, ring);
  }
  return s;
}

template <class F>
Polynomial<F> parse_polynomial(const std::string& text, const Ring& ring, const F& field) {
  using Term = typename Polynomial<F>::Term;
  std::vector<Term> terms;
  std::size_t i = 0;
  const auto fail = [&](const std::string& why) {
    throw InvalidParameter("cannot parse polynomial '" + text + "': " + why);
  };
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_uint = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected a number at position " + std::to_string(start));
    return text.substr(start, i - start);
  };
  skip_ws();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    auto coeff = field.from_int(1);
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (i == text.size()) fail("dangling operator");
      const char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = read_uint();
        if (i < text.size() && text[i] == '/') {
          ++i;
          num += "/" + read_uint();
        }
        coeff = coeff * field.parse(num);
      } else if (c == 'x' || c == 'y' || c == 't') {
        ++i;
        int slot = 0;
        if (c != 't') {
          const int index = std::stoi(read_uint());
          if (index < 1 || index > ring.n) fail("variable index out of range 1.." + std::to_string(ring.n));
          slot = c == 'x' ? ring.x(index) : ring.y(index);
        }
        int e = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          e = std::stoi(read_uint());
        }
        mono = mono * Monomial::variable(slot, e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      expect_factor = i < text.size() && text[i] == '*';
      if (expect_factor) ++i;
    }
    terms.push_back({mono, negative ? -coeff : coeff});
  }
  return Polynomial<F>(std::move(terms));
}

}  // namespace bei
