#pragma once

// Ideals with lazily cached reduced Groebner bases, and the ideal operations
// built on them: membership, equality, intersection by elimination of an
// auxiliary variable, colon ideals, Hilbert-function values and the least
// degree in which one homogeneous ideal exceeds another.

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bei/errors.hpp"
#include "bei/groebner.hpp"
#include "bei/polynomial.hpp"

namespace bei {

template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;
  using Basis = std::vector<Poly>;

  Ideal(Ring ring, F field, std::vector<Poly> generators)
      : ring_(ring), field_(std::move(field)), cache_(std::make_shared<Cache>()) {
    for (Poly& g : generators) {
      if (g.is_zero()) continue;
      if (g.max_slot() > ring_.nvars())
        throw InvalidParameter("generator uses a variable outside the ring of " +
                               std::to_string(ring_.nvars()) + " variables");
      if (g.uses_slot(kEliminationSlot))
        throw InvalidParameter("generator uses the reserved elimination variable");
      generators_.push_back(std::move(g));
    }
  }

  static Ideal zero(Ring ring, F field) { return Ideal(ring, std::move(field), {}); }
  static Ideal unit(Ring ring, F field) {
    Poly one = Poly::constant(field.from_int(1));
    return Ideal(ring, std::move(field), {std::move(one)});
  }

  const Ring& ring() const { return ring_; }
  const F& field() const { return field_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  // Reduced Groebner basis under `order`, computed on first request and shared
  // by every copy of this ideal afterwards.
  const Basis& groebner_basis(const MonomialOrder& order = MonomialOrder::lex(), const Limits& limits = {}) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, b] : cache_->entries)
      if (o == order) return *b;
    auto basis = std::make_shared<const Basis>(buchberger<F>(generators_, order, limits));
    cache_->entries.emplace_back(order, basis);
    return *basis;
  }

  bool has_cached_basis(const MonomialOrder& order) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, b] : cache_->entries)
      if (o == order) return true;
    return false;
  }

  // Builds an ideal whose generators are already its reduced basis under order.
  static Ideal from_reduced_basis(Ring ring, F field, Basis basis, const MonomialOrder& order) {
    Ideal ideal(ring, std::move(field), basis);
    ideal.cache_->entries.emplace_back(order, std::make_shared<const Basis>(std::move(basis)));
    return ideal;
  }

  bool is_unit(const MonomialOrder& order = MonomialOrder::lex(), const Limits& limits = {}) const {
    const Basis& b = groebner_basis(order, limits);
    return b.size() == 1 && b.front().is_constant();
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const Basis>>> entries;
  };

  Ring ring_;
  F field_;
  std::vector<Poly> generators_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

template <class F>
void require_same_ring(const Ideal<F>& a, const Ideal<F>& b) {
  if (!(a.ring() == b.ring())) throw InvalidParameter("ideals live in rings of different arity");
}

template <class F>
void require_in_ring(const Polynomial<F>& f, const Ring& ring) {
  if (f.max_slot() > ring.nvars() || f.uses_slot(kEliminationSlot))
    throw InvalidParameter("polynomial uses a variable outside the ring");
}

}  // namespace detail

template <class F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& ideal, const MonomialOrder& order = MonomialOrder::lex(),
                  const Limits& limits = {}) {
  detail::require_in_ring(f, ideal.ring());
  if (f.is_zero()) return true;
  const auto& basis = ideal.groebner_basis(order, limits);
  return normal_form<F>(f, basis, order, limits).is_zero();
}

// a is contained in b.
template <class F>
bool ideal_contains(const Ideal<F>& b, const Ideal<F>& a, const MonomialOrder& order = MonomialOrder::lex(),
                    const Limits& limits = {}) {
  detail::require_same_ring(a, b);
  for (const auto& g : a.generators())
    if (!ideal_member(g, b, order, limits)) return false;
  return true;
}

template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b, const MonomialOrder& order = MonomialOrder::lex(),
                 const Limits& limits = {}) {
  detail::require_same_ring(a, b);
  return a.groebner_basis(order, limits) == b.groebner_basis(order, limits);
}

// Eliminates t from t*I + (1-t)*J. Because t forms an elimination block in
// every order, the t-free part of the basis is the reduced basis of the
// intersection under the same order, and is cached as such.
template <class F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, const MonomialOrder& order = MonomialOrder::lex(),
                   const Limits& limits = {}) {
  detail::require_same_ring(a, b);
  using Poly = Polynomial<F>;
  const F& field = a.field();
  if (a.is_zero() || b.is_zero()) return Ideal<F>::zero(a.ring(), field);
  const Poly t = variable_polynomial(field, kEliminationSlot);
  const Poly one_minus_t = Poly::constant(field.from_int(1)) - t;
  const auto& source_a = a.has_cached_basis(order) ? a.groebner_basis(order, limits) : a.generators();
  const auto& source_b = b.has_cached_basis(order) ? b.groebner_basis(order, limits) : b.generators();
  std::vector<Poly> gens;
  gens.reserve(source_a.size() + source_b.size());
  for (const Poly& f : source_a) gens.push_back(t * f);
  for (const Poly& g : source_b) gens.push_back(one_minus_t * g);
  std::vector<Poly> basis = buchberger<F>(gens, order, limits);
  std::vector<Poly> kept;
  for (Poly& p : basis)
    if (!p.uses_slot(kEliminationSlot)) kept.push_back(std::move(p));
  return Ideal<F>::from_reduced_basis(a.ring(), field, std::move(kept), order);
}

// I : f = (I intersect <f>) / f.
template <class F>
Ideal<F> colon_poly(const Ideal<F>& ideal, const Polynomial<F>& f, const MonomialOrder& order = MonomialOrder::lex(),
                    const Limits& limits = {}) {
  detail::require_in_ring(f, ideal.ring());
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  if (ideal_member(f, ideal, order, limits)) return Ideal<F>::unit(ideal.ring(), ideal.field());
  const Ideal<F> principal(ideal.ring(), ideal.field(), {f});
  const Ideal<F> meet = intersect(ideal, principal, order, limits);
  std::vector<Polynomial<F>> quotients;
  for (const auto& g : meet.groebner_basis(order, limits)) quotients.push_back(exact_divide(g, f));
  // Leading monomials scale by LM(f), so this is a basis; re-reducing makes it reduced.
  auto basis = buchberger<F>(quotients, order, limits);
  return Ideal<F>::from_reduced_basis(ideal.ring(), ideal.field(), std::move(basis), order);
}

// I : J as the intersection of I : g over the generators g of J. Generators
// already in I contribute the unit ideal and are skipped; repeated colon
// ideals are intersected once.
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& ideal, const Ideal<F>& by, const MonomialOrder& order = MonomialOrder::lex(),
                     const Limits& limits = {}) {
  detail::require_same_ring(ideal, by);
  if (by.is_zero()) throw DomainError("colon by the zero ideal");
  std::vector<Ideal<F>> parts;
  for (const auto& g : by.generators()) {
    if (ideal_member(g, ideal, order, limits)) continue;
    Ideal<F> c = colon_poly(ideal, g, order, limits);
    bool seen = false;
    for (const auto& p : parts) seen = seen || p.groebner_basis(order, limits) == c.groebner_basis(order, limits);
    if (!seen) parts.push_back(std::move(c));
  }
  if (parts.empty()) return Ideal<F>::unit(ideal.ring(), ideal.field());
  Ideal<F> acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = intersect(acc, parts[k], order, limits);
  return acc;
}

// Standard monomials of degree d: monomials in the ring variables divisible by
// no leading monomial of the reduced basis. Depth-first over slots 1..m with
// pruning as soon as a partial monomial is divisible.
template <class F>
std::uint64_t hilbert_value(const Ideal<F>& ideal, int d, const MonomialOrder& order = MonomialOrder::lex(),
                            const Limits& limits = {}) {
  if (d < 0) throw InvalidParameter("Hilbert function degree must be >= 0");
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis(order, limits)) leads.push_back(g.leading_term(order).mono);
  const int m = ideal.ring().nvars();
  std::uint64_t nodes = 0, count = 0;
  Monomial current;
  const auto divisible = [&](const Monomial& u) {
    for (const Monomial& l : leads)
      if (l.divides(u)) return true;
    return false;
  };
  // Assign exponents to slots slot..m with `left` degree remaining.
  auto visit = [&](auto&& self, int slot, int left) -> void {
    if (++nodes > limits.max_hilbert_nodes)
      throw ResourceError("Hilbert function enumeration exceeded " + std::to_string(limits.max_hilbert_nodes) +
                          " nodes");
    if (divisible(current)) return;
    if (left == 0) {
      ++count;
      return;
    }
    if (slot > m) return;
    if (slot == m) {
      current.set_exponent(slot, left);
      if (!divisible(current)) ++count;
      current.set_exponent(slot, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      current.set_exponent(slot, e);
      self(self, slot + 1, left - e);
    }
    current.set_exponent(slot, 0);
  };
  if (m == 0) return d == 0 && !divisible(current) ? 1 : 0;
  visit(visit, 1, d);
  return count;
}

// Least d >= 1 with H(S/inner, d) > H(S/outer, d), i.e. the least positive
// degree in which outer/inner is nonzero. Requires homogeneous inner in outer.
template <class F>
int initial_degree_gap(const Ideal<F>& inner, const Ideal<F>& outer, const MonomialOrder& order = MonomialOrder::lex(),
                       const Limits& limits = {}) {
  detail::require_same_ring(inner, outer);
  for (const auto* ideal : {&inner, &outer})
    for (const auto& g : ideal->generators())
      if (!g.is_homogeneous()) throw DomainError("initial degree gap needs homogeneous ideals");
  if (!ideal_contains(outer, inner, order, limits))
    throw DomainError("initial degree gap needs the inner ideal contained in the outer one");
  if (ideal_equal(inner, outer, order, limits)) throw DomainError("gap undefined: the ideals are equal");
  // A generator of outer outside inner has degree at most the top basis degree.
  int top = 1;
  for (const auto& g : outer.groebner_basis(order, limits)) top = std::max(top, *g.degree());
  for (int d = 1; d <= top; ++d)
    if (hilbert_value(inner, d, order, limits) > hilbert_value(outer, d, order, limits)) return d;
  throw DomainError("gap undefined: the quotient vanishes in every positive degree");
}

}  // namespace bei
