#include <doctest.h>

#include <random>

#include "bei/binomial_ideals.hpp"
#include "oracles/oracles.hpp"

using namespace bei;
using Q = Rationals;
using P = Polynomial<Q>;
using I = Ideal<Q>;

namespace {

const Q q;

P poly(const char* text, const Ring& r) { return parse_polynomial(text, r, q); }

I ideal(std::initializer_list<const char*> texts, const Ring& r) {
  std::vector<P> gens;
  for (const char* t : texts) gens.push_back(poly(t, r));
  return I(r, q, gens);
}

std::vector<oracle::Poly> oracle_gens(const std::vector<P>& gens, int nvars) {
  std::vector<oracle::Poly> out;
  for (const P& g : gens) out.push_back(oracle::convert(g, nvars));
  return out;
}

// Homogeneous random ideal in K[x1, x2, y1, y2] with small coefficients.
I random_ideal(std::mt19937& rng) {
  const Ring r{2};
  std::uniform_int_distribution<int> count(1, 3), degree(1, 3), coeff(-3, 3), slot(1, 4), terms(1, 3);
  std::vector<P> gens;
  const int k = count(rng);
  for (int g = 0; g < k; ++g) {
    const int d = degree(rng);
    std::vector<P::Term> ts;
    for (int t = terms(rng); t > 0; --t) {
      Monomial m;
      for (int e = 0; e < d; ++e) m = m * Monomial::variable(slot(rng));
      const int c = coeff(rng);
      ts.push_back({m, q.from_int(c == 0 ? 1 : c)});
    }
    gens.emplace_back(std::move(ts));
  }
  return I(r, q, gens);
}

}  // namespace

TEST_CASE("normal form examples") {
  const Ring r{2};
  const P m = minor_polynomial(q, r, 1, 2);
  const std::vector<P> basis{m};
  CHECK(normal_form<Q>(m, basis).is_zero());
  CHECK(to_string(normal_form<Q>(poly("y1", r), basis), r) == "y1");
  CHECK(to_string(normal_form<Q>(poly("x1*x2*y1*y2", r), basis), r) == "x2^2*y1^2");
}

TEST_CASE("Buchberger examples") {
  const Ring r2{2};
  const std::vector<P> one{minor_polynomial(q, r2, 2, 1)};
  const auto b = buchberger<Q>(one);
  REQUIRE(b.size() == 1);
  CHECK(to_string(b[0], r2) == "x1*y2 - x2*y1");

  const auto k3 = binomial_edge_ideal(complete(3), q);
  const auto basis = k3.groebner_basis();
  CHECK(basis.size() == 3);
  for (const P& g : k3.generators()) CHECK(std::find(basis.begin(), basis.end(), g) != basis.end());

  const std::vector<P> gens{poly("x1", r2), poly("x1*y2 - x2*y1", r2)};
  std::vector<std::string> shown;
  for (const P& g : buchberger<Q>(gens)) shown.push_back(to_string(g, r2));
  CHECK(shown == std::vector<std::string>{"x2*y1", "x1"});
}

TEST_CASE("membership and equality examples") {
  const Ring r2{2};
  const I p2 = binomial_edge_ideal(path(2), q);
  CHECK(ideal_member(p2.generators()[0], p2));
  CHECK_FALSE(ideal_member(poly("x1", r2), p2));
  CHECK(ideal_equal(ideal({"x1", "y1"}, r2), ideal({"y1", "x1"}, r2)));
  CHECK_FALSE(ideal_equal(binomial_edge_ideal(cycle(4), q), minimal_prime_ideal(cycle(4), {}, q)));
  CHECK_THROWS_AS(ideal_member(poly("y3", Ring{3}), p2), InvalidParameter);
}

TEST_CASE("intersection examples") {
  const Ring r1{1};
  CHECK(ideal_equal(intersect(ideal({"x1"}, r1), ideal({"y1"}, r1)), ideal({"x1*y1"}, r1)));
  const I j = binomial_edge_ideal(cycle(4), q);
  CHECK(ideal_equal(intersect(j, j), j));
  // J_{(C4)_1} with (x1, y1) + J_{C4 \ 1}, the latter on all 8 variables.
  const Ring r4{4};
  const I completed = binomial_edge_ideal(local_completion(cycle(4), 1), q);
  I rest(r4, q, {variable_polynomial(q, r4.x(1)), variable_polynomial(q, r4.y(1)), minor_polynomial(q, r4, 2, 3),
                 minor_polynomial(q, r4, 3, 4)});
  CHECK(ideal_equal(intersect(completed, rest), j));
  CHECK(intersect(I::zero(r1, q), ideal({"x1"}, r1)).is_zero());
}

TEST_CASE("colon examples") {
  const Ring r1{1};
  CHECK(ideal_equal(colon_poly(ideal({"x1*y1"}, r1), poly("x1", r1)), ideal({"y1"}, r1)));
  CHECK(colon_poly(ideal({"x1*y1"}, r1), poly("x1*y1^2", r1)).is_unit());

  const I j = binomial_edge_ideal(crown(3), q);
  CHECK(ideal_equal(colon_ideal(j, I::unit(j.ring(), q)), j));

  // A-type set with A = {3}.
  const VertexSet t{3, 4};
  const I lhs = colon_ideal(j, minimal_prime_ideal(crown(3), t, q));
  I rhs = binomial_edge_ideal(local_completion(crown(3), 3), q);
  rhs = intersect(rhs, binomial_edge_ideal(local_completion(crown(3), 4), q));
  CHECK(ideal_equal(lhs, rhs));

  // <x1 y1, x1 y2> : <y1, y2>. The linear-algebra oracle finds dimensions
  // 1, 4, 10 in degrees 1..3, the Hilbert data of <x1> (not <x1, y1 y2>).
  const I small = ideal({"x1*y1", "x1*y2"}, Ring{2});
  const I by = ideal({"y1", "y2"}, Ring{2});
  const auto sg = oracle_gens(small.generators(), 4), bg = oracle_gens(by.generators(), 4);
  CHECK(oracle::colon_dimension(sg, bg, 4, 1) == 1);
  CHECK(oracle::colon_dimension(sg, bg, 4, 2) == 4);
  CHECK(oracle::colon_dimension(sg, bg, 4, 3) == 10);
  const I colon = colon_ideal(small, by);
  CHECK(ideal_equal(colon, ideal({"x1"}, Ring{2})));
  for (int d = 1; d <= 3; ++d) CHECK(hilbert_value(colon, d) == oracle::hilbert_value({oracle::convert(poly("x1", Ring{2}), 4)}, 4, d));
}

TEST_CASE("Hilbert value examples") {
  for (int m = 1; m <= 3; ++m) {
    const Ring r{m};
    for (int d = 0; d <= 4; ++d) CHECK(hilbert_value(I::zero(r, q), d) == oracle::binomial(d + 2 * m - 1, d));
    CHECK(hilbert_value(ideal({"x1"}, r), 1) == static_cast<std::uint64_t>(2 * m - 1));
  }
  CHECK(hilbert_value(binomial_edge_ideal(path(2), q), 2) == 9);
  CHECK(hilbert_value(I::unit(Ring{2}, q), 0) == 0);
  CHECK_THROWS_AS(hilbert_value(I::zero(Ring{1}, q), -1), InvalidParameter);
  Limits tiny;
  tiny.max_hilbert_nodes = 10;
  CHECK_THROWS_AS(hilbert_value(I::zero(Ring{3}, q), 4, MonomialOrder::lex(), tiny), ResourceError);
}

TEST_CASE("Hilbert values of graph ideals match linear algebra") {
  for (const Graph& g : {path(3), cycle(4), complete(3), crown(3)}) {
    const I j = binomial_edge_ideal(g, q);
    const int m = j.ring().nvars();
    const auto gens = oracle_gens(j.generators(), m);
    for (int d = 0; d <= 3; ++d) {
      CAPTURE(d);
      CHECK(hilbert_value(j, d) == oracle::hilbert_value(gens, m, d));
      CHECK(hilbert_value(j, d, MonomialOrder::degrevlex()) == oracle::hilbert_value(gens, m, d));
    }
  }
}

TEST_CASE("initial degree gap") {
  const I c4 = binomial_edge_ideal(cycle(4), q);
  CHECK(initial_degree_gap(c4, colon_ideal(c4, minimal_prime_ideal(cycle(4), {}, q))) == 2);
  const I k3 = binomial_edge_ideal(complete(3), q);
  CHECK(initial_degree_gap(k3, colon_ideal(k3, minimal_prime_ideal(complete(3), {}, q))) == 1);
  CHECK_THROWS_WITH_AS(initial_degree_gap(c4, c4), doctest::Contains("gap undefined"), DomainError);
  const Ring r1{1};
  CHECK_THROWS_AS(initial_degree_gap(ideal({"x1^2 + y1"}, r1), ideal({"x1", "y1"}, r1)), DomainError);
  CHECK_THROWS_AS(initial_degree_gap(ideal({"x1"}, r1), ideal({"y1"}, r1)), DomainError);
}

TEST_CASE("ideal operations reject mismatched input") {
  CHECK_THROWS_AS(I(Ring{1}, q, {poly("x1", Ring{2}) * poly("y2", Ring{2})}), InvalidParameter);
  CHECK_THROWS_AS(I(Ring{1}, q, {variable_polynomial(q, kEliminationSlot)}), InvalidParameter);
  CHECK_THROWS_AS(intersect(I::zero(Ring{1}, q), I::zero(Ring{2}, q)), InvalidParameter);
  CHECK_THROWS_AS(colon_ideal(ideal({"x1"}, Ring{1}), I::zero(Ring{1}, q)), DomainError);
}

TEST_CASE("resource caps are reported") {
  Limits tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(binomial_edge_ideal(cycle(5), q).groebner_basis(MonomialOrder::lex(), tiny), ResourceError);
}

// ----------------------------------------------------------------- properties

TEST_CASE("normal form removes exactly the ideal part") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    const I a = random_ideal(rng);
    const I b = random_ideal(rng);
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::degrevlex()}) {
      const auto& basis = a.groebner_basis(order);
      for (const P& f : b.generators()) {
        const P r = normal_form<Q>(f, basis, order);
        CHECK(normal_form<Q>(f - r, basis, order).is_zero());
        CHECK(normal_form<Q>(r, basis, order) == r);
      }
    }
  }
}

TEST_CASE("intersection and colon containment laws") {
  std::mt19937 rng(11);
  for (int round = 0; round < 12; ++round) {
    const I a = random_ideal(rng);
    const I b = random_ideal(rng);
    const I meet = intersect(a, b);
    CHECK(ideal_contains(a, meet));
    CHECK(ideal_contains(b, meet));
    for (const P& f : a.generators())
      for (const P& g : b.generators()) CHECK(ideal_member(f * g, meet));
    const P f = b.generators().front();
    const I c = colon_poly(a, f);
    CHECK(ideal_contains(c, a));
    for (const P& g : c.groebner_basis()) CHECK(ideal_member(g * f, a));
  }
}

TEST_CASE("graph ideals have homogeneous reduced bases") {
  for (const Graph& g : {crown(3), cycle(5), path(4)}) {
    const I j = binomial_edge_ideal(g, q);
    for (const P& p : j.groebner_basis()) CHECK(p.is_homogeneous());
    for (const auto& support : enumerate_cutsets(g)) {
      const I colon = colon_ideal(j, minimal_prime_ideal(g, support.t, q));
      for (const P& p : colon.groebner_basis()) CHECK(p.is_homogeneous());
    }
  }
}
