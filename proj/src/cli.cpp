#include "bei/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include "bei/binomial_ideals.hpp"
#include "bei/errors.hpp"
#include "bei/homological.hpp"
#include "bei/json_io.hpp"
#include "bei/verification.hpp"

namespace bei {

namespace {

using Field = std::variant<Rationals, PrimeField>;

struct Common {
  std::string graph_file;
  std::string family;
  int n = 0;
  std::string parts;
  std::string field = "q";
  std::string order = "lex";
  int jobs = 1;
  std::string format = "json";
  std::size_t max_pairs = Limits{}.max_pairs;
  std::size_t max_faces = Limits{}.max_faces;
};

void add_common(CLI::App& cmd, Common& c, bool graph_source) {
  if (graph_source) {
    cmd.add_option("--graph", c.graph_file, "Graph JSON file {\"n\":..,\"edges\":[[i,j],..]}");
    cmd.add_option("--family", c.family, "crown|cycle|path|complete|empty|multipartite|wheel");
    cmd.add_option("--n", c.n, "Family size parameter");
    cmd.add_option("--parts", c.parts, "Part sizes for multipartite, e.g. 2,2,3");
  }
  cmd.add_option("--field", c.field, "q (rationals) or gf:<p>")->capture_default_str();
  cmd.add_option("--order", c.order, "lex or degrevlex")->capture_default_str();
  cmd.add_option("--jobs", c.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 1024));
  cmd.add_option("--format", c.format, "json or table")->capture_default_str()->check(CLI::IsMember({"json", "table"}));
  cmd.add_option("--max-pairs", c.max_pairs, "S-pair cap per Groebner run")->capture_default_str();
  cmd.add_option("--max-faces", c.max_faces, "Face cap per restricted complex")->capture_default_str();
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidParameter("--parts expects comma-separated integers, got '" + text + "'");
    }
  }
  return parts;
}

struct GraphInput {
  Graph graph;
  std::string descriptor;
};

GraphInput load_graph(const Common& c) {
  const bool has_file = !c.graph_file.empty(), has_family = !c.family.empty();
  if (has_file == has_family) throw InvalidParameter("give exactly one of --graph or --family");
  if (has_file) return {read_graph_file(c.graph_file), "file " + c.graph_file};
  if (c.family == "wheel") return {join(empty_graph(1), cycle(c.n)), "wheel " + std::to_string(c.n)};
  FamilySpec spec;
  spec.family = parse_family(c.family);
  spec.n = c.n;
  if (spec.family == Family::complete_multipartite) {
    if (c.parts.empty()) throw InvalidParameter("multipartite needs --parts");
    spec.parts = parse_parts(c.parts);
  }
  return {generate(spec), spec.describe()};
}

Field parse_field(const std::string& text) {
  if (text == "q" || text == "QQ") return Rationals{};
  if (text.rfind("gf:", 0) == 0) {
    try {
      std::size_t used = 0;
      const long p = std::stol(text.substr(3), &used);
      if (used == text.size() - 3 && p > 1 && p < (1L << 31)) return PrimeField(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidParameter("--field expects q or gf:<prime>, got '" + text + "'");
}

Limits limits_of(const Common& c) {
  Limits l;
  l.max_pairs = c.max_pairs;
  l.max_faces = c.max_faces;
  return l;
}

AlgebraOptions algebra_of(const Common& c) {
  return {MonomialOrder::parse(c.order), limits_of(c)};
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Objects print as aligned key/value rows, lists of objects as columns.
std::string render_table(const Json& doc) {
  std::ostringstream out;
  if (doc.is_array() && !doc.empty() && doc.front().is_object()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.front().items()) keys.push_back(k);
    std::vector<std::vector<std::string>> rows{keys};
    for (const auto& item : doc) {
      std::vector<std::string> row;
      for (const auto& k : keys) row.push_back(item.contains(k) ? scalar_text(item[k]) : "");
      rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& row : rows)
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t k = 0; k < row.size(); ++k) {
        line += row[k];
        if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
      }
      out << line << "\n";
    }
    return out.str();
  }
  if (doc.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : doc.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : doc.items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        out << k << ":\n" << render_table(v);
      } else {
        out << std::left << std::setw(static_cast<int>(width + 2)) << k << scalar_text(v) << "\n";
      }
    }
    return out.str();
  }
  return scalar_text(doc) + "\n";
}

void emit(std::ostream& out, const Json& doc, const Common& c) {
  if (c.format == "table") out << render_table(doc);
  else out << doc.dump(2) << "\n";
}

template <class Fn>
auto with_field(const Common& c, Fn fn) {
  return std::visit(fn, parse_field(c.field));
}

// ------------------------------------------------------------- subcommands

Json cmd_invariants(const Common& c, bool with_pd, bool with_v) {
  const GraphInput in = load_graph(c);
  const Graph& g = in.graph;
  const CutSetFamily family = enumerate_cutsets(g);
  const Heights h = heights(g, family);
  Json doc{{"graph", in.descriptor}, {"n", g.order()}, {"edge_count", g.edge_count()}};
  const bool connected = g.order() > 0 && is_connected(g);
  doc["kappa"] = connected ? Json(vertex_connectivity(g)) : Json(nullptr);
  doc["gamma_c"] = connected ? Json(connected_domination_number(g)) : Json(nullptr);
  doc["krull_dim"] = krull_dimension(g, family);
  doc["height"] = h.height;
  doc["bigheight"] = h.bigheight;
  doc["cutset_count"] = family.size();
  with_field(c, [&](const auto& field) {
    if (with_pd) {
      BettiOptions opts;
      opts.limits = limits_of(c);
      opts.jobs = c.jobs;
      doc["pd"] = projective_dimension(g, field, opts).pd;
    }
    if (with_v) {
      VNumberOptions opts;
      opts.algebra = algebra_of(c);
      opts.jobs = c.jobs;
      doc["v_number"] = v_number(g, field, opts).v;
    }
    doc["field"] = field.name();
  });
  doc["order"] = MonomialOrder::parse(c.order).name();
  return doc;
}

Json cmd_primes(const Common& c) {
  const GraphInput in = load_graph(c);
  const MonomialOrder order = MonomialOrder::parse(c.order);
  Json doc{{"graph", in.descriptor}};
  with_field(c, [&](const auto& field) {
    doc["field"] = field.name();
    doc["order"] = order.name();
    doc["ideal"] = ideal_to_json(binomial_edge_ideal(in.graph, field), order)["generators"];
    Json primes = Json::array();
    for (const auto& p : enumerate_cutsets(in.graph)) {
      const auto ideal = minimal_prime_ideal(in.graph, p.t, field);
      primes.push_back(Json{{"t", vertex_set_to_json(p.t)},
                            {"height", 2 * in.graph.order() - quotient_dimension(in.graph, p.t)},
                            {"generators", ideal_to_json(ideal, order)["generators"]}});
    }
    doc["primes"] = primes;
  });
  return doc;
}

Json cmd_vnumber(const Common& c, bool all_primes, bool witnesses) {
  const GraphInput in = load_graph(c);
  const Graph& g = in.graph;
  Json doc{{"graph", in.descriptor}};
  with_field(c, [&](const auto& field) {
    VNumberOptions opts;
    opts.algebra = algebra_of(c);
    opts.jobs = c.jobs;
    opts.early_exit = !all_primes;
    const VNumberResult r = v_number(g, field, opts);
    doc["field"] = field.name();
    doc["order"] = opts.algebra.order.name();
    Json per = Json::array();
    for (const auto& lv : r.per_prime) per.push_back(Json{{"t", vertex_set_to_json(lv.t)}, {"v", lv.v}});
    doc["per_prime"] = per;
    doc["v"] = r.v;
    Json reports = Json::array();
    if (witnesses) {
      const int n = g.order() / 2;
      if (v_number_lower_bound(g) != 3) throw InvalidParameter("--witnesses needs a crown graph with n >= 3");
      const auto [x, y] = crown_bipartition(n);
      const Ring ring{g.order()};
      for (const auto& p : crown_cutset_classification(n)) {
        if (p.t.empty() || (n == 3 && (p.t == x || p.t == y))) continue;
        const auto f = crown_witness(n, p.t, field);
        reports.push_back(witness_to_json(verify_colon_witness(g, p.t, f, field, opts.algebra), ring));
      }
    }
    doc["witnesses"] = reports;
  });
  return doc;
}

Json cmd_pd(const Common& c, bool betti, bool exhaustive) {
  const GraphInput in = load_graph(c);
  if (c.order != "lex") throw InvalidParameter("pd reads the lex initial ideal; --order must be lex");
  Json doc;
  with_field(c, [&](const auto& field) {
    BettiOptions opts;
    opts.limits = limits_of(c);
    opts.jobs = c.jobs;
    opts.exhaustive = exhaustive;
    const PdResult r = projective_dimension(in.graph, field, opts);
    doc = Json{{"graph", in.descriptor}, {"field", field.name()}, {"pd", r.pd}, {"bigheight", r.bigheight}, {"equal", r.equal}};
    if (betti) doc["betti"] = betti_to_json(r.betti);
    doc["method"] = "hochster-lex";
  });
  return doc;
}

Json cmd_verify(const Common& c, const std::string& suite, int max_n, const std::vector<int>& only, std::ostream& err,
                bool& all_passed) {
  if (suite != "paper") throw InvalidParameter("unknown suite '" + suite + "'");
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.jobs = c.jobs;
  opts.limits = limits_of(c);
  with_field(c, [&](const auto& field) {
    if constexpr (std::is_same_v<std::decay_t<decltype(field)>, PrimeField>) opts.prime = field.p;
  });
  Json results = Json::array();
  all_passed = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const CriterionResult r = run_criterion(id, opts);
    err << format_result(r) << "\n";
    // A criterion with every check skipped is not a failure.
    const bool ok = r.failures == 0;
    all_passed = all_passed && ok;
    results.push_back(Json{{"id", r.id},
                           {"title", r.title},
                           {"status", r.checks == 0 ? "skip" : ok ? "pass" : "fail"},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"skipped", r.skipped},
                           {"detail", r.detail}});
  }
  return Json{{"suite", suite}, {"max_n", max_n}, {"results", results}, {"passed", all_passed}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial edge ideals: cut sets, minimal primes, v-numbers and projective dimension", "bei"};
  app.require_subcommand(1);
  Common c;

  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  auto* gen = graph_cmd->add_subcommand("gen", "Generate a family member as graph JSON");
  add_common(*gen, c, true);

  auto* inv = app.add_subcommand("invariants", "kappa, gamma_c, dimension, heights");
  add_common(*inv, c, true);
  bool inv_pd = false, inv_v = false;
  inv->add_flag("--pd", inv_pd, "Also compute the projective dimension");
  inv->add_flag("--vnumber", inv_v, "Also compute the v-number");

  auto* cut = app.add_subcommand("cutsets", "Cut sets with components, dimension and height");
  add_common(*cut, c, true);

  auto* primes = app.add_subcommand("primes", "J_G and its minimal primes P_T as polynomial lists");
  add_common(*primes, c, true);

  auto* vn = app.add_subcommand("vnumber", "Local v-numbers over the cut sets and their minimum");
  add_common(*vn, c, true);
  bool all_primes = false, witnesses = false;
  vn->add_flag("--all-primes", all_primes, "Evaluate every cut set instead of stopping at the lower bound");
  vn->add_flag("--witnesses", witnesses, "Check the degree-4 colon witnesses (crown graphs)");

  auto* pd = app.add_subcommand("pd", "Projective dimension via the lex initial ideal");
  add_common(*pd, c, true);
  bool betti = false, exhaustive = false;
  pd->add_flag("--betti", betti, "Include the graded Betti table");
  pd->add_flag("--exhaustive", exhaustive, "Use every multidegree instead of the lcm lattice (<= 10 variables)");

  auto* verify = app.add_subcommand("verify", "Run the numbered verification criteria");
  add_common(*verify, c, false);
  std::string suite = "paper";
  int max_n = 1000;
  std::vector<int> only;
  verify->add_option("--suite", suite, "Suite name")->capture_default_str();
  verify->add_option("--max-n", max_n, "Skip checks whose size parameter exceeds this");
  verify->add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      emit(out, graph_to_json(load_graph(c).graph), c);
    } else if (inv->parsed()) {
      emit(out, cmd_invariants(c, inv_pd, inv_v), c);
    } else if (cut->parsed()) {
      const GraphInput in = load_graph(c);
      emit(out, cutsets_to_json(in.graph, enumerate_cutsets(in.graph)), c);
    } else if (primes->parsed()) {
      emit(out, cmd_primes(c), c);
    } else if (vn->parsed()) {
      emit(out, cmd_vnumber(c, all_primes, witnesses), c);
    } else if (pd->parsed()) {
      emit(out, cmd_pd(c, betti, exhaustive), c);
    } else if (verify->parsed()) {
      bool passed = false;
      emit(out, cmd_verify(c, suite, max_n, only, err, passed), c);
      return passed ? kExitOk : kExitFailure;
    }
    return kExitOk;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace bei
