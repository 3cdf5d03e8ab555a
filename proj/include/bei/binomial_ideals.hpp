#pragma once

// Binomial edge ideals J_G, their minimal primes P_T(G), the structural
// identities checked against them, the degree-4 witnesses for crown graphs
// and (local) v-numbers through the initial-degree characterization.

#include <optional>
#include <vector>

#include "bei/graph.hpp"
#include "bei/ideal.hpp"
#include "bei/minimal_primes.hpp"

namespace bei {

// Vertex i owns x_i (slot i) and y_i (slot n+i) of K[x_1..x_n, y_1..y_n].
struct GraphIdealContext {
  Graph graph;
  Ring ring;

  explicit GraphIdealContext(Graph g) : graph(std::move(g)), ring{graph.order()} {}
  int x(int v) const { return ring.x(v); }
  int y(int v) const { return ring.y(v); }
};

template <class F>
struct WitnessReport {
  VertexSet t;
  Polynomial<F> f;
  int degree = 0;
  bool verified = false;  // J_G : f == P_T(G)
  bool outside = false;   // f not in J_G
};

struct AlgebraOptions {
  MonomialOrder order = MonomialOrder::lex();
  Limits limits;
};

inline constexpr int kRadicalCheckCap = 6;

// One minor x_i y_j - x_j y_i per edge {i < j}.
template <class F>
Ideal<F> binomial_edge_ideal(const Graph& g, const F& field);

// x_i, y_i for i in t, plus every minor inside each component of G minus t.
template <class F>
Ideal<F> minimal_prime_ideal(const Graph& g, const VertexSet& t, const F& field);

// Intersects P_T over the cut sets and compares with J_G. |V| <= 6.
template <class F>
bool verify_radical_decomposition(const Graph& g, const F& field, const AlgebraOptions& opts = {});

// J_G == J_{G_v} intersect ((x_v, y_v) + J_{G \ v}) for an internal vertex v,
// with G_v the local completion at v and G \ v kept on the full vertex set.
template <class F>
bool ohtani_identity_check(const Graph& g, int v, const F& field, const AlgebraOptions& opts = {});

// The degree-4 polynomial f with J_G : f = P_T(G) for crown(n), using the
// least admissible indices. Throws InvalidParameter for t empty or not a cut
// set, n < 3, or n = 3 with t one of the two sides.
template <class F>
Polynomial<F> crown_witness(int n, const VertexSet& t, const F& field);

template <class F>
WitnessReport<F> verify_colon_witness(const Graph& g, const VertexSet& t, const Polynomial<F>& f, const F& field,
                                      const AlgebraOptions& opts = {});

// Least degree of (J_G : P_T) / J_G. t must be a cut set of g.
template <class F>
int local_v_number(const Graph& g, const VertexSet& t, const F& field, const AlgebraOptions& opts = {});

struct LocalVNumber {
  VertexSet t;
  int v = 0;
};

struct VNumberResult {
  std::vector<LocalVNumber> per_prime;  // cut sets evaluated, in family order
  int v = 0;
  int lower_bound = 1;  // bound used for early exit
};

struct VNumberOptions {
  AlgebraOptions algebra;
  int jobs = 1;
  bool early_exit = true;
};

// Minimum of the local v-numbers over the cut sets of g, sorted by (|T|, lex).
// Stops once the running minimum reaches the lower bound: 3 when g equals a
// generated crown with n >= 3, otherwise 1. Throws DomainError for a graph
// without edges.
template <class F>
VNumberResult v_number(const Graph& g, const F& field, const VNumberOptions& opts = {});

// 3 for crown(n) with n >= 3 (compared edge by edge), 1 otherwise.
int v_number_lower_bound(const Graph& g);

}  // namespace bei
