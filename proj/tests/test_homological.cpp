#include <doctest.h>

#include "bei/errors.hpp"
#include "bei/homological.hpp"
#include "bei/verification.hpp"
#include "oracles/oracles.hpp"

#include <set>

using namespace bei;
using Q = Rationals;

namespace {

const Q q;
const PrimeField gf(kDefaultPrime);

VarMask bit(int slot) { return VarMask{1} << (slot - 1); }

// Slot masks for x_i (slot i) and y_i (slot n+i).
VarMask xm(int, int i) { return bit(i); }
VarMask ym(int n, int i) { return bit(n + i); }

// The table of the oracle, restricted to nonzero entries.
BettiTable oracle_table(const MonomialIdeal& mi) {
  BettiTable t;
  for (const auto& [key, value] : oracle::betti(mi.generators(), mi.nvars()))
    if (value) t.set(key.first, key.second, value);
  return t;
}

}  // namespace

TEST_CASE("initial ideals") {
  const auto k3 = initial_ideal(binomial_edge_ideal(complete(3), q));
  CHECK(k3.generators() == std::vector<VarMask>{xm(3, 1) | ym(3, 2), xm(3, 1) | ym(3, 3), xm(3, 2) | ym(3, 3)});
  const auto p2 = initial_ideal(binomial_edge_ideal(path(2), q));
  CHECK(p2.generators() == std::vector<VarMask>{xm(2, 1) | ym(2, 2)});
  // Squarefree by construction; a non-squarefree leading term would throw.
  CHECK_NOTHROW(initial_ideal(binomial_edge_ideal(cycle(4), q)));
  const Ring r1{1};
  const Ideal<Q> square(r1, q, {parse_polynomial("x1^2", r1, q)});
  CHECK_THROWS_AS(initial_ideal(square), InternalError);
  CHECK_THROWS_AS(initial_ideal(square, MonomialOrder::degrevlex()), DomainError);
}

TEST_CASE("monomial ideals minimalize their generators") {
  const MonomialIdeal mi(4, {0b0111, 0b0011, 0b1100, 0b0011});
  CHECK(mi.generators() == std::vector<VarMask>{0b0011, 0b1100});
  CHECK(mi.contains(0b1011));
  CHECK_FALSE(mi.contains(0b0101));
}

TEST_CASE("lcm lattices") {
  CHECK(lcm_lattice(MonomialIdeal(2, {0b11})) == std::vector<VarMask>{0b11});
  CHECK(lcm_lattice(MonomialIdeal(2, {})).empty());
  const auto k3 = initial_ideal(binomial_edge_ideal(complete(3), q));
  // Oracle: every union of a nonempty subset of the supports.
  std::set<VarMask> unions;
  const auto& g = k3.generators();
  for (unsigned s = 1; s < (1u << g.size()); ++s) {
    VarMask u = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (s >> k & 1) u |= g[k];
    unions.insert(u);
  }
  CHECK(unions.size() == 6);
  const auto lattice = lcm_lattice(k3);
  CHECK(lattice.size() == 6);
  CHECK(std::set<VarMask>(lattice.begin(), lattice.end()) == unions);
}

TEST_CASE("restricted homology of small complexes") {
  // Minimal non-face {1,2,3}: the hollow triangle on three vertices.
  const SimplicialComplex hollow(MonomialIdeal(3, {0b111}));
  CHECK(restricted_homology_rank(hollow, 0b111, 1, q) == 1);
  CHECK(restricted_homology_rank(hollow, 0b111, 0, q) == 0);
  CHECK(restricted_homology_rank(hollow, 0b011, 0, q) == 0);
  // Two isolated points.
  const SimplicialComplex points(MonomialIdeal(2, {0b11}));
  CHECK(restricted_homology_rank(points, 0b11, 0, q) == 1);
  // Full simplex.
  const SimplicialComplex simplex(MonomialIdeal(3, {}));
  for (int i = -1; i <= 2; ++i) CHECK(restricted_homology_rank(simplex, 0b111, i, q) == 0);
  // The empty restriction is {emptyset}, with H_{-1} of rank 1.
  CHECK(restricted_homology_rank(simplex, 0, -1, q) == 1);
  CHECK_THROWS_AS(restricted_homology_rank(simplex, 0b111, -2, q), InvalidParameter);
  Limits tiny;
  tiny.max_faces = 3;
  CHECK_THROWS_AS(restricted_homology_rank(simplex, 0b111, 0, q, tiny), ResourceError);
}

TEST_CASE("Betti tables of small ideals") {
  const auto principal = graded_betti(MonomialIdeal(2, {0b11}), q);
  CHECK(principal.projective_dimension() == 1);
  CHECK(principal.get(0, 0) == 1);
  CHECK(principal.get(1, 0b11) == 1);
  CHECK(graded_betti(MonomialIdeal(2, {0b01, 0b10}), q).projective_dimension() == 2);
  CHECK(graded_betti(initial_ideal(binomial_edge_ideal(complete(3), q)), q).projective_dimension() == 2);
  for (int k = 1; k <= 4; ++k) {
    std::vector<VarMask> gens;
    for (int s = 0; s < k; ++s) gens.push_back(VarMask{0b11} << (2 * s));
    CHECK(graded_betti(MonomialIdeal(2 * k, gens), q).projective_dimension() == k);
  }
}

TEST_CASE("Betti tables match the upper Koszul oracle") {
  const std::vector<Graph> graphs{path(3), path(4), cycle(4), complete(3), join(empty_graph(1), empty_graph(3)),
                                  cycle(5), complete_multipartite(std::vector<int>{2, 2})};
  for (const Graph& g : graphs) {
    CAPTURE(graph_label(g));
    const auto mi = initial_ideal(binomial_edge_ideal(g, q));
    const BettiTable expected = oracle_table(mi);
    CHECK(graded_betti(mi, q) == expected);
    BettiOptions all;
    all.exhaustive = true;
    CHECK(graded_betti(mi, gf, all) == expected);
  }
  BettiOptions all;
  all.exhaustive = true;
  CHECK_THROWS_AS(graded_betti(initial_ideal(binomial_edge_ideal(cycle(6), q)), q, all), ResourceError);
}

TEST_CASE("graded Betti numbers of the 4-cycle") {
  // Frozen from the oracle above: in(J_C4) has 5 quadric and cubic
  // generators; the coarse table is the sum over multidegrees.
  const auto mi = initial_ideal(binomial_edge_ideal(cycle(4), q));
  std::map<std::pair<int, int>, std::uint64_t> coarse;
  for (const auto& [key, value] : oracle::betti(mi.generators(), mi.nvars()))
    if (value) coarse[{key.first, oracle::popcount(key.second)}] += value;
  CHECK(graded_betti(mi, q).graded() == coarse);
  CHECK(coarse.at({0, 0}) == 1);
}

TEST_CASE("Euler characteristic of every restriction") {
  for (const Graph& g : {cycle(4), path(4), complete(4), crown(3)}) {
    const SimplicialComplex sc(initial_ideal(binomial_edge_ideal(g, q)));
    for (VarMask sigma : lcm_lattice(MonomialIdeal(sc.nvars(), sc.minimal_nonfaces())))
      CHECK(euler_characteristic_defect(sc, sigma, q) == 0);
  }
}

TEST_CASE("projective dimension examples") {
  const auto crown3 = projective_dimension(crown(3), q);
  CHECK(crown3.pd == 6);
  CHECK(crown3.equal);
  const auto c5 = projective_dimension(cycle(5), q);
  CHECK(c5.pd == 5);
  CHECK(c5.bigheight == 5);
  CHECK(c5.equal);
  CHECK(projective_dimension(path(4), q).pd == 3);
  BettiOptions parallel;
  parallel.jobs = 4;
  CHECK(projective_dimension(cycle(5), gf, parallel).betti == projective_dimension(cycle(5), gf).betti);
}

TEST_CASE("closed forms") {
  CHECK(pd_crown(4) == 10);
  CHECK(pd_complete_multipartite({2, 2}) == 4);
  CHECK(pd_wheel(5) == 7);
  CHECK(pd_block_graph(5) == 4);
  CHECK(pd_cycle(6) == 6);
  CHECK(pd_maximal(6) == 8);
  CHECK(pd_cone(cycle(5), 5) == 7);
  CHECK_THROWS_AS(pd_cycle(3), InvalidParameter);
  CHECK_THROWS_AS(pd_crown(2), InvalidParameter);
  CHECK_THROWS_AS(pd_complete_multipartite({1, 3}), InvalidParameter);
}

TEST_CASE("computed pd matches the closed forms") {
  for (int n = 2; n <= 6; ++n) CHECK(projective_dimension(path(n), gf).pd == pd_block_graph(n));
  CHECK(projective_dimension(join(empty_graph(1), complete(3)), gf).pd == pd_block_graph(4));
  for (int n = 4; n <= 6; ++n) CHECK(projective_dimension(cycle(n), gf).pd == pd_cycle(n));
  CHECK(projective_dimension(complete_multipartite(std::vector<int>{2, 2}), gf).pd == pd_complete_multipartite({2, 2}));
  CHECK(projective_dimension(complete_multipartite(std::vector<int>{2, 3}), gf).pd == pd_complete_multipartite({2, 3}));
  CHECK(projective_dimension(join(empty_graph(1), cycle(4)), gf).pd == pd_wheel(4));
  CHECK(projective_dimension(join(empty_graph(1), cycle(5)), gf).pd == pd_wheel(5));
  CHECK(projective_dimension(crown(3), gf).pd == pd_crown(3));
}

TEST_CASE("pd of block graphs") {
  // Block graphs whose vertices lie in at most two maximal cliques are
  // Cohen-Macaulay, so pd = height = 2n - dim there. Other trees only satisfy
  // pd = n - 1.
  const Graph clique_chain(6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  std::vector<Graph> cohen_macaulay{clique_chain};
  for (int n = 2; n <= 6; ++n) cohen_macaulay.push_back(path(n));
  for (const Graph& g : cohen_macaulay) {
    CAPTURE(graph_label(g));
    CHECK(projective_dimension(g, gf).pd == 2 * g.order() - krull_dimension(g));
    CHECK(projective_dimension(g, gf).pd == pd_block_graph(g.order()));
  }
  const Graph star = join(empty_graph(1), empty_graph(4));
  const Graph spider(6, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
  for (const Graph& g : {star, spider}) {
    CHECK(projective_dimension(g, gf).pd == pd_block_graph(g.order()));
    CHECK(projective_dimension(g, gf).pd > 2 * g.order() - krull_dimension(g));
  }
}

TEST_CASE("pd lies between the big height and 2n - 4") {
  for (int n = 4; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) {
      CAPTURE(graph_label(g));
      const auto r = projective_dimension(g, gf);
      CHECK(r.pd >= r.bigheight);
      CHECK(r.pd <= 2 * n - 4);
      CHECK(r.equal == (r.pd == r.bigheight));
      CHECK((r.pd == 2 * n - 4) == is_join_with_2K1(g));
    }
}

TEST_CASE("structural predicates") {
  CHECK(is_join_with_2K1(complete_multipartite(std::vector<int>{2, 2})));
  CHECK_FALSE(is_join_with_2K1(cycle(5)));
  for (int n = 3; n <= 5; ++n) {
    CHECK_FALSE(is_join_with_2K1(crown(n)));
    CHECK_FALSE(is_D5_type(crown(n)));
  }
  CHECK(is_D5_type(path(4)));
  CHECK_FALSE(is_D5_type(complete(5)));
  CHECK_THROWS_AS(is_D5_type(path(3)), InvalidParameter);
}
