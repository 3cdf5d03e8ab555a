#pragma once

// JSON forms of graphs, cut set families, ideals and the command results.
// Objects keep insertion order so identical inputs serialize identically.

#include <json.hpp>
#include <string>

#include "bei/binomial_ideals.hpp"
#include "bei/graph.hpp"
#include "bei/homological.hpp"
#include "bei/minimal_primes.hpp"

namespace bei {

using Json = nlohmann::ordered_json;

// {"n": k, "edges": [[i, j], ...]}; loops, duplicates and bad labels throw
// InvalidParameter.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph read_graph_file(const std::string& path);

Json vertex_set_to_json(const VertexSet& s);

// [{"t": [...], "components": [[...], ...], "dim": d, "height": h}, ...]
Json cutsets_to_json(const Graph& g, const CutSetFamily& family);

template <class F>
Json ideal_to_json(const Ideal<F>& ideal, const MonomialOrder& order) {
  Json gens = Json::array();
  for (const auto& p : ideal.generators()) gens.push_back(to_string(p, ideal.ring()));
  return Json{{"field", ideal.field().name()}, {"order", order.name()}, {"generators", gens}};
}

// Reads a list of polynomial strings into an ideal of the given ring.
template <class F>
Ideal<F> ideal_from_json(const Json& j, const Ring& ring, const F& field) {
  if (!j.is_array()) throw InvalidParameter("an ideal is a JSON list of polynomial strings");
  std::vector<Polynomial<F>> gens;
  for (const auto& s : j) {
    if (!s.is_string()) throw InvalidParameter("ideal generators must be strings");
    gens.push_back(parse_polynomial(s.get<std::string>(), ring, field));
  }
  return Ideal<F>(ring, field, std::move(gens));
}

template <class F>
Json witness_to_json(const WitnessReport<F>& w, const Ring& ring) {
  return Json{{"t", vertex_set_to_json(w.t)},
              {"f", to_string(w.f, ring)},
              {"degree", w.degree},
              {"verified", w.verified},
              {"outside", w.outside}};
}

// [{"i": i, "j": total degree, "beta": b}, ...] in (i, j) order.
Json betti_to_json(const BettiTable& table);

}  // namespace bei
