#include "bei/binomial_ideals.hpp"

#include <string>

#include "bei/errors.hpp"
#include "bei/parallel.hpp"

namespace bei {

namespace {

template <class F>
void add_clique_minors(std::vector<Polynomial<F>>& gens, const F& field, const Ring& ring, const VertexSet& comp) {
  const auto& labels = comp.labels();
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) gens.push_back(minor_polynomial(field, ring, labels[a], labels[b]));
}

Graph delete_vertex_edges(const Graph& g, int v) {
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) kept.push_back(e);
  return Graph(g.order(), std::move(kept));
}

template <class F>
Polynomial<F> var(const F& field, int slot) {
  return variable_polynomial(field, slot);
}

}  // namespace

int v_number_lower_bound(const Graph& g) {
  const int n = g.order() / 2;
  if (g.order() % 2 == 0 && n >= 3 && g == crown(n)) return 3;
  return 1;
}

template <class F>
Ideal<F> binomial_edge_ideal(const Graph& g, const F& field) {
  const Ring ring{g.order()};
  std::vector<Polynomial<F>> gens;
  gens.reserve(g.edge_count());
  for (const Edge& e : g.edges()) gens.push_back(minor_polynomial(field, ring, e.u, e.v));
  return Ideal<F>(ring, field, std::move(gens));
}

template <class F>
Ideal<F> minimal_prime_ideal(const Graph& g, const VertexSet& t, const F& field) {
  const GraphIdealContext ctx(g);
  const PrimeSupport support = prime_support(g, t);
  std::vector<Polynomial<F>> gens;
  for (int v : t) {
    gens.push_back(var(field, ctx.x(v)));
    gens.push_back(var(field, ctx.y(v)));
  }
  for (const VertexSet& comp : support.comps) add_clique_minors(gens, field, ctx.ring, comp);
  return Ideal<F>(ctx.ring, field, std::move(gens));
}

template <class F>
bool verify_radical_decomposition(const Graph& g, const F& field, const AlgebraOptions& opts) {
  if (g.order() > kRadicalCheckCap)
    throw ResourceError("radical decomposition check is capped at " + std::to_string(kRadicalCheckCap) + " vertices");
  const CutSetFamily family = enumerate_cutsets(g);
  Ideal<F> meet = minimal_prime_ideal(g, family.front().t, field);
  for (std::size_t k = 1; k < family.size(); ++k)
    meet = intersect(meet, minimal_prime_ideal(g, family[k].t, field), opts.order, opts.limits);
  return ideal_equal(meet, binomial_edge_ideal(g, field), opts.order, opts.limits);
}

template <class F>
bool ohtani_identity_check(const Graph& g, int v, const F& field, const AlgebraOptions& opts) {
  if (!is_internal_vertex(g, v))
    throw InvalidParameter("vertex " + std::to_string(v) + " is free: its neighborhood is a clique");
  const GraphIdealContext ctx(g);
  const Ideal<F> completed = binomial_edge_ideal(local_completion(g, v), field);
  std::vector<Polynomial<F>> gens = binomial_edge_ideal(delete_vertex_edges(g, v), field).generators();
  gens.push_back(var(field, ctx.x(v)));
  gens.push_back(var(field, ctx.y(v)));
  const Ideal<F> deleted(ctx.ring, field, std::move(gens));
  const Ideal<F> rhs = intersect(completed, deleted, opts.order, opts.limits);
  return ideal_equal(binomial_edge_ideal(g, field), rhs, opts.order, opts.limits);
}

template <class F>
Polynomial<F> crown_witness(int n, const VertexSet& t, const F& field) {
  if (n < 3) throw InvalidParameter("crown witnesses require n >= 3");
  const Ring ring{2 * n};
  const CrownCutsetCase c = classify_crown_cutset(n, t);
  const auto minor = [&](int a, int b) { return minor_polynomial(field, ring, a, b); };
  const auto x = [&](int v) { return var(field, ring.x(v)); };
  // Least index outside the given ones.
  const auto least_other = [&](std::initializer_list<int> used) {
    for (int k = 1; k <= n; ++k)
      if (std::find(used.begin(), used.end(), k) == used.end()) return k;
    throw InternalError("no free crown index");
  };
  switch (c.kind) {
    case CrownCutsetKind::empty:
      throw InvalidParameter("no crown witness for the empty cut set");
    case CrownCutsetKind::odd_side:
    case CrownCutsetKind::even_side:
      if (n < 4) throw InvalidParameter("crown 3 has no witness for a full side");
      if (c.kind == CrownCutsetKind::odd_side) return minor(2, 4) * minor(6, 8);
      return minor(1, 3) * minor(5, 7);
    case CrownCutsetKind::odd_side_minus: {
      const int i = c.i, j = least_other({i}), k = least_other({i, j});
      return x(2 * i - 1) * x(2 * k) * minor(2 * i, 2 * j);
    }
    case CrownCutsetKind::even_side_minus: {
      const int i = c.i, j = least_other({i}), k = least_other({i, j});
      return x(2 * k - 1) * x(2 * i) * minor(2 * i - 1, 2 * j - 1);
    }
    case CrownCutsetKind::pair_type:
      return minor(2 * c.i - 1, 2 * c.j - 1) * minor(2 * c.i, 2 * c.j);
  }
  throw InternalError("unknown crown cut set kind");
}

template <class F>
WitnessReport<F> verify_colon_witness(const Graph& g, const VertexSet& t, const Polynomial<F>& f, const F& field,
                                      const AlgebraOptions& opts) {
  if (f.is_zero()) throw InvalidParameter("witness polynomial must be nonzero");
  const Ideal<F> j = binomial_edge_ideal(g, field);
  WitnessReport<F> report{t, f, *f.degree(), false, false};
  report.outside = !ideal_member(f, j, opts.order, opts.limits);
  report.verified =
      ideal_equal(colon_poly(j, f, opts.order, opts.limits), minimal_prime_ideal(g, t, field), opts.order, opts.limits);
  return report;
}

template <class F>
int local_v_number(const Graph& g, const VertexSet& t, const F& field, const AlgebraOptions& opts) {
  if (!has_cut_point_property(g, t))
    throw InvalidParameter("vertex set " + t.to_string() + " is not a cut set of the graph");
  if (g.edge_count() == 0) throw DomainError("the binomial edge ideal of an edgeless graph is zero");
  const Ideal<F> j = binomial_edge_ideal(g, field);
  const Ideal<F> colon = colon_ideal(j, minimal_prime_ideal(g, t, field), opts.order, opts.limits);
  return initial_degree_gap(j, colon, opts.order, opts.limits);
}

template <class F>
VNumberResult v_number(const Graph& g, const F& field, const VNumberOptions& opts) {
  if (g.edge_count() == 0) throw DomainError("the binomial edge ideal of an edgeless graph is zero");
  const CutSetFamily family = enumerate_cutsets(g);
  VNumberResult result;
  result.lower_bound = v_number_lower_bound(g);
  result.v = std::numeric_limits<int>::max();
  // Batches of `jobs` primes; the reported prefix is the one a sequential
  // scan would produce, so output does not depend on the thread count.
  const std::size_t batch = opts.early_exit ? static_cast<std::size_t>(std::max(1, opts.jobs)) : family.size();
  for (std::size_t start = 0; start < family.size(); start += batch) {
    const std::size_t count = std::min(batch, family.size() - start);
    auto values = parallel_map(count, opts.jobs, [&](std::size_t k) {
      return local_v_number(g, family[start + k].t, field, opts.algebra);
    });
    for (std::size_t k = 0; k < count; ++k) {
      result.per_prime.push_back({family[start + k].t, values[k]});
      result.v = std::min(result.v, values[k]);
      if (opts.early_exit && result.v <= result.lower_bound) return result;
    }
  }
  return result;
}

#define BEI_INSTANTIATE(F)                                                                                    \
  template Ideal<F> binomial_edge_ideal<F>(const Graph&, const F&);                                           \
  template Ideal<F> minimal_prime_ideal<F>(const Graph&, const VertexSet&, const F&);                         \
  template bool verify_radical_decomposition<F>(const Graph&, const F&, const AlgebraOptions&);               \
  template bool ohtani_identity_check<F>(const Graph&, int, const F&, const AlgebraOptions&);                 \
  template Polynomial<F> crown_witness<F>(int, const VertexSet&, const F&);                                   \
  template WitnessReport<F> verify_colon_witness<F>(const Graph&, const VertexSet&, const Polynomial<F>&,     \
                                                    const F&, const AlgebraOptions&);                         \
  template int local_v_number<F>(const Graph&, const VertexSet&, const F&, const AlgebraOptions&);            \
  template VNumberResult v_number<F>(const Graph&, const F&, const VNumberOptions&);

BEI_INSTANTIATE(Rationals)
BEI_INSTANTIATE(PrimeField)

}  // namespace bei
