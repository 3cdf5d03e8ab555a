#include <doctest.h>

#include "bei/binomial_ideals.hpp"
#include "bei/errors.hpp"
#include "bei/verification.hpp"
#include "oracles/oracles.hpp"

using namespace bei;
using Q = Rationals;
using P = Polynomial<Q>;
using I = Ideal<Q>;

namespace {

const Q q;
const PrimeField gf(kDefaultPrime);

std::vector<oracle::Poly> oracle_gens(const std::vector<P>& gens, int nvars) {
  std::vector<oracle::Poly> out;
  for (const P& g : gens) out.push_back(oracle::convert(g, nvars));
  return out;
}

bool has_universal_vertex(const Graph& g) {
  for (int v = 1; v <= g.order(); ++v)
    if (g.degree(v) == g.order() - 1) return true;
  return false;
}

std::vector<Graph> connected_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 2; k <= n; ++k)
    for (auto& g : connected_graphs(k)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("binomial edge ideal generators") {
  CHECK(binomial_edge_ideal(crown(3), q).generators().size() == 6);
  CHECK(binomial_edge_ideal(empty_graph(3), q).is_zero());
  const I p2 = binomial_edge_ideal(path(2), q);
  REQUIRE(p2.generators().size() == 1);
  CHECK(to_string(p2.generators()[0], p2.ring()) == "x1*y2 - x2*y1");
}

TEST_CASE("minimal prime generators") {
  // A = {1, 3} in crown 4: T = {1, 2, 3, 4}, pairs 3 and 4 outside.
  const I p = minimal_prime_ideal(crown(4), {1, 2, 3, 4}, q);
  std::vector<std::string> shown;
  for (const P& g : p.generators()) shown.push_back(to_string(g, p.ring()));
  std::sort(shown.begin(), shown.end());
  CHECK(shown == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5*y8 - x8*y5", "x6*y7 - x7*y6", "y1", "y2", "y3",
                                          "y4"});
  CHECK(minimal_prime_ideal(cycle(5), {}, q).generators().size() == 10);
  const I x = minimal_prime_ideal(crown(3), crown_bipartition(3).odd, q);
  shown.clear();
  for (const P& g : x.generators()) shown.push_back(to_string(g, x.ring()));
  std::sort(shown.begin(), shown.end());
  CHECK(shown == std::vector<std::string>{"x1", "x3", "x5", "y1", "y3", "y5"});
}

TEST_CASE("generators of J_G lie in every minimal prime") {
  auto graphs = connected_up_to(5);
  graphs.push_back(crown(4));
  graphs.push_back(cycle(8));
  graphs.push_back(disjoint_union(path(3), cycle(3)));
  for (const Graph& g : graphs) {
    CAPTURE(graph_label(g));
    const Ideal<PrimeField> j = binomial_edge_ideal(g, gf);
    for (const auto& support : enumerate_cutsets(g)) {
      const Ideal<PrimeField> p = minimal_prime_ideal(g, support.t, gf);
      CHECK(ideal_contains(p, j));
    }
  }
}

TEST_CASE("radical decomposition") {
  CHECK(verify_radical_decomposition(path(3), q));
  CHECK(verify_radical_decomposition(cycle(4), q));
  CHECK(verify_radical_decomposition(complete(3), q));
  CHECK_THROWS_AS(verify_radical_decomposition(path(7), q), ResourceError);
}

TEST_CASE("J_G : P_T is the intersection of the other primes") {
  for (const Graph& g : {cycle(4), cycle(5), path(4), crown(3)}) {
    CAPTURE(graph_label(g));
    const auto family = enumerate_cutsets(g);
    const Ideal<PrimeField> j = binomial_edge_ideal(g, gf);
    for (std::size_t k = 0; k < family.size(); ++k) {
      std::optional<Ideal<PrimeField>> others;
      for (std::size_t l = 0; l < family.size(); ++l) {
        if (l == k) continue;
        const auto p = minimal_prime_ideal(g, family[l].t, gf);
        others = others ? intersect(*others, p) : p;
      }
      const auto colon = colon_ideal(j, minimal_prime_ideal(g, family[k].t, gf));
      if (others) CHECK(ideal_equal(colon, *others));
      else CHECK(colon.is_unit());
    }
  }
}

TEST_CASE("Ohtani identity") {
  CHECK(ohtani_identity_check(cycle(4), 1, q));
  CHECK(ohtani_identity_check(cycle(5), 3, q));
  CHECK(ohtani_identity_check(path(3), 2, q));
  CHECK_THROWS_AS(ohtani_identity_check(path(3), 1, q), InvalidParameter);
  CHECK_THROWS_AS(ohtani_identity_check(complete(4), 2, q), InvalidParameter);
}

TEST_CASE("Ohtani identity at every internal vertex of graphs on at most 6 vertices") {
  int checked = 0;
  for (const Graph& g : connected_up_to(6))
    for (int v = 1; v <= g.order(); ++v) {
      if (!is_internal_vertex(g, v)) continue;
      CAPTURE(graph_label(g));
      CAPTURE(v);
      CHECK(ohtani_identity_check(g, v, gf));
      ++checked;
    }
  CHECK(checked > 300);
}

TEST_CASE("crown witnesses") {
  const Ring r{8};
  const auto x = crown_bipartition(4).odd;
  CHECK(to_string(crown_witness(4, x, q), r) ==
        to_string(minor_polynomial(q, r, 2, 4) * minor_polynomial(q, r, 6, 8), r));
  // A = {1, 5}: pairs 2 and 4 outside.
  CHECK(to_string(crown_witness(4, {1, 2, 5, 6}, q), r) ==
        to_string(minor_polynomial(q, r, 3, 7) * minor_polynomial(q, r, 4, 8), r));
  for (const auto& p : crown_cutset_classification(4)) {
    if (p.t.empty()) continue;
    CHECK(crown_witness(4, p.t, q).degree() == 4);
  }
  CHECK_THROWS_AS(crown_witness(4, {}, q), InvalidParameter);
  CHECK_THROWS_AS(crown_witness(4, {1, 2}, q), InvalidParameter);
  CHECK_THROWS_AS(crown_witness(3, crown_bipartition(3).odd, q), InvalidParameter);
  CHECK_THROWS_AS(crown_witness(2, {1}, q), InvalidParameter);
}

TEST_CASE("witness verification") {
  const auto x = crown_bipartition(4).odd;
  const auto ok = verify_colon_witness(crown(4), x, crown_witness(4, x, q), q);
  CHECK(ok.verified);
  CHECK(ok.outside);
  CHECK(ok.degree == 4);
  CHECK_FALSE(ideal_member(crown_witness(4, x, q), binomial_edge_ideal(crown(4), q)));
  const auto generator = binomial_edge_ideal(crown(4), q).generators().front();
  const auto bad = verify_colon_witness(crown(4), x, generator, q);
  CHECK_FALSE(bad.verified);
  CHECK_FALSE(bad.outside);
  // A = {1, 3, 5} in crown 5.
  const VertexSet a{1, 2, 3, 4, 5, 6};
  CHECK(verify_colon_witness(crown(5), a, crown_witness(5, a, gf), gf).verified);
}

TEST_CASE("witnesses multiply every prime generator into J_G") {
  for (int n : {3, 4}) {
    const Ideal<PrimeField> j = binomial_edge_ideal(crown(n), gf);
    for (const auto& support : crown_cutset_classification(n)) {
      const auto kind = classify_crown_cutset(n, support.t).kind;
      if (kind == CrownCutsetKind::empty) continue;
      if (n == 3 && (kind == CrownCutsetKind::odd_side || kind == CrownCutsetKind::even_side)) continue;
      const auto f = crown_witness(n, support.t, gf);
      CHECK_FALSE(ideal_member(f, j));
      const auto prime = minimal_prime_ideal(crown(n), support.t, gf);
      for (const auto& p : prime.generators()) CHECK(ideal_member(f * p, j));
    }
  }
}

TEST_CASE("local v-numbers") {
  CHECK(local_v_number(crown(4), {}, gf) == 4);
  CHECK(local_v_number(crown(4), {1, 2, 5, 6}, gf) == 4);
  CHECK(local_v_number(complete(3), {}, q) == 1);
  CHECK_THROWS_AS(local_v_number(cycle(4), {1}, q), InvalidParameter);
}

TEST_CASE("local v-numbers match the linear-algebra oracle") {
  std::vector<Graph> graphs = connected_up_to(4);
  graphs.push_back(cycle(5));
  graphs.push_back(path(5));
  for (const Graph& g : graphs) {
    CAPTURE(graph_label(g));
    const I j = binomial_edge_ideal(g, q);
    const int m = j.ring().nvars();
    const auto jg = oracle_gens(j.generators(), m);
    for (const auto& support : enumerate_cutsets(g)) {
      CAPTURE(support.t.to_string());
      const auto pg = oracle_gens(minimal_prime_ideal(g, support.t, q).generators(), m);
      CHECK(local_v_number(g, support.t, q) == oracle::colon_initial_degree(jg, pg, m, g.order()));
    }
  }
}

TEST_CASE("local v-number at the empty set is the connected domination number") {
  std::vector<Graph> graphs = connected_up_to(6);
  graphs.push_back(cycle(7));
  graphs.push_back(path(7));
  graphs.push_back(join(empty_graph(1), cycle(6)));
  for (const Graph& g : graphs) {
    CAPTURE(graph_label(g));
    CHECK(local_v_number(g, {}, gf) == oracle::connected_domination_number(g));
  }
}

TEST_CASE("local v-numbers of crowns lie in [3, 4]") {
  for (int n : {4, 5}) {
    VNumberOptions opts;
    opts.early_exit = false;
    opts.jobs = 4;
    const auto result = v_number(crown(n), gf, opts);
    CHECK(result.per_prime.size() == crown_cutset_classification(n).size());
    for (const auto& local : result.per_prime) {
      CAPTURE(local.t.to_string());
      CHECK(local.v >= 3);
      CHECK(local.v <= 4);
      if (classify_crown_cutset(n, local.t).kind == CrownCutsetKind::pair_type) CHECK(local.v == 4);
    }
  }
}

TEST_CASE("v-numbers") {
  CHECK(v_number(cycle(6), q).v == 4);
  CHECK(v_number(cycle(7), gf).v == 5);
  const int crown4 = v_number(crown(4), gf).v;
  CHECK(crown4 >= 3);
  CHECK(crown4 <= 4);
  CHECK(v_number(crown(3), q).v == 4);
  CHECK_THROWS_AS(v_number(empty_graph(3), q), DomainError);
  CHECK(v_number_lower_bound(crown(4)) == 3);
  CHECK(v_number_lower_bound(cycle(6)) == 1);
}

TEST_CASE("v-number is 1 exactly when some vertex is universal") {
  for (const Graph& g : connected_up_to(5)) {
    CAPTURE(graph_label(g));
    CHECK((v_number(g, gf).v == 1) == has_universal_vertex(g));
  }
}

TEST_CASE("v-number output does not depend on the thread count") {
  VNumberOptions one, four;
  four.jobs = 4;
  for (const Graph& g : {cycle(6), crown(3), path(5)}) {
    const auto a = v_number(g, gf, one), b = v_number(g, gf, four);
    CHECK(a.v == b.v);
    REQUIRE(a.per_prime.size() == b.per_prime.size());
    for (std::size_t k = 0; k < a.per_prime.size(); ++k) {
      CHECK(a.per_prime[k].t == b.per_prime[k].t);
      CHECK(a.per_prime[k].v == b.per_prime[k].v);
    }
  }
}

TEST_CASE("rationals and the prime field agree on local v-numbers") {
  // Characteristic dependence is not excluded in general; a mismatch is
  // reported as a warning rather than a failure.
  for (const Graph& g : {cycle(6), crown(3), path(4), complete_multipartite(std::vector<int>{2, 3})}) {
    for (const auto& support : enumerate_cutsets(g)) {
      const int a = local_v_number(g, support.t, q), b = local_v_number(g, support.t, gf);
      const std::string note = graph_label(g) + " T=" + support.t.to_string() + ": QQ " + std::to_string(a) +
                               " vs GF " + std::to_string(b);
      WARN_MESSAGE(a == b, note);
    }
  }
}
