#include <doctest.h>

#include "bei/ideal.hpp"

using namespace bei;
using P = Polynomial<Rationals>;

namespace {

std::vector<std::string> render(const std::vector<P>& basis, const Ring& r) {
  std::vector<std::string> out;
  for (const P& p : basis) out.push_back(to_string(p, r));
  return out;
}

std::vector<P> parse_all(std::initializer_list<const char*> texts, const Ring& r) {
  std::vector<P> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, r, Rationals{}));
  return out;
}

}  // namespace

TEST_CASE("textbook reduced basis under degrevlex") {
  // x = x1, y = y1.
  Ring r{1};
  auto gens = parse_all({"x1^3 - 2*x1*y1", "x1^2*y1 - 2*y1^2 + x1"}, r);
  auto basis = buchberger<Rationals>(gens, MonomialOrder::degrevlex());
  CHECK(render(basis, r) == std::vector<std::string>{"-1/2*x1 + y1^2", "x1*y1", "x1^2"});
}

TEST_CASE("reduced basis of a star path picks up the admissible path") {
  Ring r{3};
  Rationals q;
  std::vector<P> gens{minor_polynomial(q, r, 1, 2), minor_polynomial(q, r, 1, 3)};
  auto basis = buchberger<Rationals>(gens);
  REQUIRE(basis.size() == 3);
  CHECK(render(basis, r) == std::vector<std::string>{"x2*y1*y3 - x3*y1*y2", "x1*y3 - x3*y1", "x1*y2 - x2*y1"});
}

TEST_CASE("membership, equality and normal forms") {
  Ring r{3};
  Rationals q;
  Ideal<Rationals> i(r, q, {minor_polynomial(q, r, 1, 2), minor_polynomial(q, r, 2, 3)});
  P f = parse_polynomial("x1*y2 - x2*y1", r, q) * parse_polynomial("x3 + y3^2", r, q);
  CHECK(ideal_member(f, i));
  CHECK_FALSE(ideal_member(minor_polynomial(q, r, 1, 3), i));
  CHECK(ideal_member(P::constant(Rational(0)), i));
  auto nf = normal_form<Rationals>(f + parse_polynomial("x3", r, q), i.groebner_basis(), MonomialOrder::lex());
  CHECK(to_string(nf, r) == "x3");
  Ideal<Rationals> j(r, q, {minor_polynomial(q, r, 2, 3), minor_polynomial(q, r, 1, 2) + minor_polynomial(q, r, 2, 3)});
  CHECK(ideal_equal(i, j));
  CHECK(ideal_equal(i, j, MonomialOrder::degrevlex()));
  CHECK(Ideal<Rationals>::unit(r, q).is_unit());
}

TEST_CASE("intersection and colon of monomial ideals") {
  Ring r{2};
  Rationals q;
  Ideal<Rationals> a(r, q, parse_all({"x1^2", "x1*y1"}, r));
  Ideal<Rationals> b(r, q, parse_all({"y1"}, r));
  auto meet = intersect(a, b);
  CHECK(ideal_equal(meet, Ideal<Rationals>(r, q, parse_all({"x1*y1"}, r))));
  auto c = colon_poly(a, parse_polynomial("x1", r, q));
  CHECK(ideal_equal(c, Ideal<Rationals>(r, q, parse_all({"x1", "y1"}, r))));
  CHECK(colon_poly(a, parse_polynomial("x1^2", r, q)).is_unit());
  CHECK_THROWS_AS(colon_poly(a, P{}), DomainError);
  auto ci = colon_ideal(a, Ideal<Rationals>(r, q, parse_all({"x1", "y1"}, r)));
  CHECK(ideal_equal(ci, Ideal<Rationals>(r, q, parse_all({"x1"}, r))));
}

TEST_CASE("Hilbert values and the degree gap") {
  Ring r{2};
  Rationals q;
  Ideal<Rationals> a(r, q, parse_all({"x1*y1"}, r));
  Ideal<Rationals> b(r, q, parse_all({"x1"}, r));
  // 4 variables: H(S, d) = C(d+3, 3); S/(x1*y1) loses C(d+1, 3).
  CHECK(hilbert_value(a, 0) == 1);
  CHECK(hilbert_value(a, 2) == 9);
  CHECK(hilbert_value(b, 2) == 6);
  CHECK(initial_degree_gap(a, b) == 1);
  CHECK_THROWS_AS(initial_degree_gap(a, a), DomainError);
  Ideal<Rationals> inhom(r, q, parse_all({"x1 + y1^2"}, r));
  CHECK_THROWS_AS(initial_degree_gap(a, inhom), DomainError);
  Limits tight;
  tight.max_hilbert_nodes = 10;
  CHECK_THROWS_AS(hilbert_value(a, 6, MonomialOrder::lex(), tight), ResourceError);
}
