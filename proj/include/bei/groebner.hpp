#pragma once

// Multivariate division and Buchberger's algorithm.
//
// Pairs are selected by the normal strategy: smallest lcm degree first (the
// elimination slot carries weight 0, so t*I + (1-t)*J stays graded), ties
// broken by the monomial order on the lcm and then by pair indices. Useless
// pairs are discarded with the Gebauer-Moeller installation of Buchberger's
// coprime and chain criteria.

#include <cstdint>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "bei/errors.hpp"
#include "bei/polynomial.hpp"

namespace bei {

struct Limits {
  std::size_t max_pairs = 5'000'000;       // S-pairs reduced per Buchberger run
  std::size_t max_terms = 2'000'000;       // terms in any intermediate polynomial
  std::uint64_t max_hilbert_nodes = 500'000'000;
  std::size_t max_faces = 50'000'000;      // faces per restricted complex
};

namespace detail {

template <class F>
using TermVec = std::vector<typename Polynomial<F>::Term>;

template <class F>
TermVec<F> sorted_terms(const Polynomial<F>& p, const MonomialOrder& order) {
  TermVec<F> v = p.terms();
  if (!order.is_default_lex())
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.greater(a.mono, b.mono); });
  return v;
}

template <class F>
Polynomial<F> to_polynomial(TermVec<F> v) {
  return Polynomial<F>(std::move(v));
}

// p[from..] - coeff * mono * g[1..], all sorted by order. g's leading term is
// assumed to cancel the head of p, which the caller has already consumed.
template <class F>
TermVec<F> subtract_multiple(const TermVec<F>& p, std::size_t from, const TermVec<F>& g,
                             const typename F::Element& coeff, const Monomial& mono,
                             const MonomialOrder& order, const Limits& limits) {
  TermVec<F> out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (i < p.size() && j < g.size()) {
    Monomial m = g[j].mono * mono;
    const int c = order.compare(p[i].mono, m);
    if (c > 0) {
      out.push_back(p[i++]);
    } else if (c < 0) {
      out.push_back({m, -(coeff * g[j].coeff)});
      ++j;
    } else {
      auto s = p[i].coeff - coeff * g[j].coeff;
      if (!s.is_zero()) out.push_back({m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].mono * mono, -(coeff * g[j].coeff)});
  if (out.size() > limits.max_terms)
    throw ResourceError("polynomial exceeded " + std::to_string(limits.max_terms) + " terms");
  return out;
}

// Remainder of p modulo the basis; the first basis element (in list order)
// whose leading monomial divides the current head is used. With full=false
// only the head is reduced.
template <class F>
TermVec<F> reduce(TermVec<F> p, std::span<const TermVec<F>* const> basis, const MonomialOrder& order,
                  const Limits& limits, bool full = true) {
  TermVec<F> result;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const auto& head = p[pos];
    const TermVec<F>* reducer = nullptr;
    for (const TermVec<F>* g : basis)
      if ((*g)[0].mono.divides(head.mono)) {
        reducer = g;
        break;
      }
    if (!reducer) {
      if (!full) {
        result.insert(result.end(), std::make_move_iterator(p.begin() + static_cast<std::ptrdiff_t>(pos)),
                      std::make_move_iterator(p.end()));
        return result;
      }
      result.push_back(std::move(p[pos++]));
      continue;
    }
    const auto factor = head.coeff / (*reducer)[0].coeff;
    const Monomial shift = head.mono / (*reducer)[0].mono;
    p = subtract_multiple<F>(p, pos + 1, *reducer, factor, shift, order, limits);
    pos = 0;
  }
  return result;
}

template <class F>
void make_monic(TermVec<F>& p) {
  if (p.empty() || p[0].coeff.is_one()) return;
  const auto inv = p[0].coeff.inverse();
  for (auto& t : p) t.coeff *= inv;
}

template <class F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const MonomialOrder& order, const Limits& limits)
      : order_(order), limits_(limits), pairs_(PairLess{this}) {}

  void add_generator(TermVec<F> p) {
    if (p.empty()) return;
    make_monic<F>(p);
    install(std::move(p));
  }

  std::vector<Polynomial<F>> run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      const Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed > limits_.max_pairs)
        throw ResourceError("Buchberger exceeded " + std::to_string(limits_.max_pairs) + " S-pairs");
      TermVec<F> s = s_polynomial(pair.i, pair.j);
      auto reducers = active_pointers();
      TermVec<F> h = reduce<F>(std::move(s), reducers, order_, limits_);
      if (h.empty()) continue;
      make_monic<F>(h);
      install(std::move(h));
    }
    return reduced_basis();
  }

 private:
  struct Pair {
    int i, j;
    Monomial lcm;
    int degree;
  };
  struct PairLess {
    const BuchbergerEngine* self;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      const int c = self->order_.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
  };

  const Monomial& lm(int k) const { return polys_[static_cast<std::size_t>(k)][0].mono; }

  std::vector<const TermVec<F>*> active_pointers() const {
    std::vector<const TermVec<F>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  TermVec<F> s_polynomial(int i, int j) const {
    const TermVec<F>& f = polys_[static_cast<std::size_t>(i)];
    const TermVec<F>& g = polys_[static_cast<std::size_t>(j)];
    const Monomial l = lcm(f[0].mono, g[0].mono);
    const Monomial mf = l / f[0].mono, mg = l / g[0].mono;
    // Both are monic: S = mf*f - mg*g, heads cancel.
    TermVec<F> shifted_f;
    shifted_f.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) shifted_f.push_back({f[k].mono * mf, f[k].coeff});
    return subtract_multiple<F>(shifted_f, 0, g, g[0].coeff, mg, order_, limits_);
  }

  // Gebauer-Moeller update with the new polynomial h.
  void install(TermVec<F> p) {
    const int h = static_cast<int>(polys_.size());
    polys_.push_back(std::move(p));
    active_.push_back(true);
    const Monomial& lh = lm(h);

    std::vector<int> candidates;
    for (int g = 0; g < h; ++g)
      if (active_[static_cast<std::size_t>(g)]) candidates.push_back(g);

    std::vector<Monomial> lcms;
    lcms.reserve(candidates.size());
    for (int g : candidates) lcms.push_back(lcm(lh, lm(g)));

    // Chain criterion among the new pairs.
    std::vector<char> kept(candidates.size(), 0);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = lh.coprime(lm(candidates[a]));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (lcms[b].divides(lcms[a])) keep = false;
        for (std::size_t b = 0; b < a && keep; ++b)
          if (kept[b] && lcms[b].divides(lcms[a])) keep = false;
      }
      kept[a] = keep;
    }

    // Old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const bool drop = lh.divides(it->lcm) && lcm(lm(it->i), lh) != it->lcm && lcm(lm(it->j), lh) != it->lcm;
      it = drop ? pairs_.erase(it) : std::next(it);
    }

    // Coprime criterion.
    for (std::size_t a = 0; a < candidates.size(); ++a)
      if (kept[a] && !lh.coprime(lm(candidates[a])))
        pairs_.insert(Pair{candidates[a], h, lcms[a], lcms[a].ring_degree()});

    for (int g : candidates)
      if (lh.divides(lm(g))) active_[static_cast<std::size_t>(g)] = false;
  }

  std::vector<Polynomial<F>> reduced_basis() const {
    // Input generators may still carry a leading monomial divisible by another.
    std::vector<const TermVec<F>*> active = active_pointers(), basis;
    for (std::size_t k = 0; k < active.size(); ++k) {
      bool redundant = false;
      for (std::size_t l = 0; l < active.size() && !redundant; ++l) {
        if (l == k) continue;
        const Monomial& a = (*active[l])[0].mono;
        const Monomial& b = (*active[k])[0].mono;
        redundant = a.divides(b) && (a != b || l < k);
      }
      if (!redundant) basis.push_back(active[k]);
    }
    std::vector<Polynomial<F>> out;
    out.reserve(basis.size());
    std::vector<std::pair<Monomial, TermVec<F>>> reduced;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const TermVec<F>*> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(basis[l]);
      const TermVec<F>& p = *basis[k];
      TermVec<F> tail(p.begin() + 1, p.end());
      TermVec<F> r = reduce<F>(std::move(tail), others, order_, limits_);
      r.insert(r.begin(), p[0]);
      reduced.emplace_back(p[0].mono, std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const auto& a, const auto& b) { return order_.less(a.first, b.first); });
    for (auto& [m, v] : reduced) out.push_back(to_polynomial<F>(std::move(v)));
    return out;
  }

  MonomialOrder order_;
  Limits limits_;
  std::vector<TermVec<F>> polys_;
  std::vector<bool> active_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace detail

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis,
                          const MonomialOrder& order = MonomialOrder::lex(), const Limits& limits = {}) {
  std::vector<detail::TermVec<F>> sorted;
  sorted.reserve(basis.size());
  for (const Polynomial<F>& g : basis) {
    if (g.is_zero()) throw DomainError("normal form against a zero basis element");
    sorted.push_back(detail::sorted_terms(g, order));
  }
  std::vector<const detail::TermVec<F>*> ptrs;
  for (const auto& g : sorted) ptrs.push_back(&g);
  return detail::to_polynomial<F>(detail::reduce<F>(detail::sorted_terms(f, order), ptrs, order, limits));
}

// The reduced Groebner basis: monic, sorted by ascending leading monomial.
template <class F>
std::vector<Polynomial<F>> buchberger(std::span<const Polynomial<F>> gens,
                                      const MonomialOrder& order = MonomialOrder::lex(),
                                      const Limits& limits = {}) {
  detail::BuchbergerEngine<F> engine(order, limits);
  for (const Polynomial<F>& g : gens) engine.add_generator(detail::sorted_terms(g, order));
  return engine.run();
}

}  // namespace bei
