#pragma once

// Projective dimension of S/J_G read off the squarefree lex initial ideal:
// multigraded Betti numbers come from Hochster's formula,
//   beta_{i,sigma}(S/I) = dim reduced H_{|sigma|-i-1}(Delta|sigma),
// evaluated on the lcm lattice of the generators. Also the closed forms for
// the families with known projective dimension and the structural graph
// predicates used to rule out extremal values.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bei/binomial_ideals.hpp"

namespace bei {

// Squarefree monomial in the ring variables: bit s-1 stands for slot s.
using VarMask = std::uint64_t;

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Drops generators divisible by another and sorts by (degree, mask).
  MonomialIdeal(int nvars, std::vector<VarMask> generators);

  int nvars() const { return nvars_; }
  const std::vector<VarMask>& generators() const { return gens_; }
  bool contains(VarMask monomial) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_ = 0;
  std::vector<VarMask> gens_;
};

// The Stanley-Reisner complex of a squarefree monomial ideal, held through its
// minimal non-faces.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(MonomialIdeal ideal) : ideal_(std::move(ideal)) {}

  int nvars() const { return ideal_.nvars(); }
  const std::vector<VarMask>& minimal_nonfaces() const { return ideal_.generators(); }
  bool is_face(VarMask face) const { return !ideal_.contains(face); }

  // Faces of the restriction to sigma grouped by size 0..|sigma|, each group
  // in increasing mask order. Throws ResourceError past max_faces.
  std::vector<std::vector<VarMask>> faces_within(VarMask sigma, std::size_t max_faces) const;

 private:
  MonomialIdeal ideal_;
};

// Leading monomials of the reduced basis, minimalized. Under the default lex
// order a non-squarefree leading monomial throws InternalError; under other
// orders it throws DomainError.
template <class F>
MonomialIdeal initial_ideal(const Ideal<F>& ideal, const MonomialOrder& order = MonomialOrder::lex(),
                            const Limits& limits = {});

// Unions of nonempty sets of generator supports, sorted by (size, mask).
std::vector<VarMask> lcm_lattice(const MonomialIdeal& ideal);

// Ranks of reduced homology H_{-1} .. H_{|sigma|-1} of the restriction to
// sigma, by exact elimination over F. Entry k holds degree k-1.
template <class F>
std::vector<std::uint64_t> restricted_homology_ranks(const SimplicialComplex& sc, VarMask sigma, const F& field,
                                                     const Limits& limits = {});

// Rank of reduced H_i of the restriction to sigma, i >= -1.
template <class F>
std::uint64_t restricted_homology_rank(const SimplicialComplex& sc, VarMask sigma, int i, const F& field,
                                       const Limits& limits = {});

// Alternating face count minus alternating homology rank; zero when the
// computed ranks are consistent.
template <class F>
std::int64_t euler_characteristic_defect(const SimplicialComplex& sc, VarMask sigma, const F& field,
                                         const Limits& limits = {});

class BettiTable {
 public:
  void set(int i, VarMask sigma, std::uint64_t value);
  std::uint64_t get(int i, VarMask sigma) const;
  // Nonzero entries keyed by (i, sigma).
  const std::map<std::pair<int, VarMask>, std::uint64_t>& entries() const { return entries_; }
  // max i with a nonzero entry; 0 for an empty table.
  int projective_dimension() const;
  // Coarse table: (i, total degree |sigma|) -> sum of ranks.
  std::map<std::pair<int, int>, std::uint64_t> graded() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, VarMask>, std::uint64_t> entries_;
};

inline constexpr int kExhaustiveBettiCap = 10;

struct BettiOptions {
  Limits limits;
  int jobs = 1;
  // Every subset of the variables instead of the lcm lattice; needs at most
  // kExhaustiveBettiCap variables.
  bool exhaustive = false;
};

// Betti numbers of S/I with I = mi.
template <class F>
BettiTable graded_betti(const MonomialIdeal& mi, const F& field, const BettiOptions& opts = {});

struct PdResult {
  int pd = 0;
  int bigheight = 0;
  bool equal = false;
  BettiTable betti;
};

// pd(S/in_lex(J_G)), reported as pd(S/J_G), with the big height comparison.
template <class F>
PdResult projective_dimension(const Graph& g, const F& field, const BettiOptions& opts = {});

// Closed forms. Each throws InvalidParameter outside its hypotheses.
int pd_block_graph(int n);                      // connected block graph on n vertices: n-1
int pd_cycle(int n);                            // n >= 4: n
int pd_wheel(int n);                            // cone over C_n, n >= 4: n+2
int pd_complete_multipartite(std::vector<int> parts);  // smallest part >= 2
int pd_crown(int n);                            // n >= 3: 4n-6
int pd_cone(const Graph& base, int base_pd);    // cone over base on n vertices
int pd_maximal(int n);                          // G = 2K1 * H on n vertices: 2n-4

// Two non-adjacent vertices each adjacent to every other vertex.
bool is_join_with_2K1(const Graph& g);

// Not a 2K1-join, and one of: a non-adjacent pair u, w whose neighborhoods
// cover the rest and split as V0 = N(u) & N(w), V1, V2 nonempty with all
// V1-V2 edges; an independent triple joined to every other vertex; a triple
// with a single edge joined to every other vertex. Needs |V| >= 4.
bool is_D5_type(const Graph& g);

}  // namespace bei
