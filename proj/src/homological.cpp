#include "bei/homological.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "bei/errors.hpp"
#include "bei/parallel.hpp"

namespace bei {

namespace {

template <class F>
using SparseRow = std::vector<std::pair<std::uint32_t, typename F::Element>>;

// a - c * b for rows sorted by column; b's head is assumed to cancel a's.
template <class F>
SparseRow<F> eliminate(const SparseRow<F>& a, const SparseRow<F>& b, const typename F::Element& c) {
  SparseRow<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back({b[j].first, -(c * b[j].second)});
      ++j;
    } else {
      auto v = a[i].second - c * b[j].second;
      if (!v.is_zero()) out.push_back({a[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
std::uint64_t sparse_rank(std::vector<SparseRow<F>> rows, std::size_t ncols) {
  std::vector<SparseRow<F>> pivots(ncols);
  std::uint64_t rank = 0;
  for (SparseRow<F>& row : rows) {
    while (!row.empty()) {
      SparseRow<F>& pivot = pivots[row.front().first];
      if (pivot.empty()) {
        const auto inv = row.front().second.inverse();
        for (auto& [col, v] : row) v *= inv;
        pivot = std::move(row);
        ++rank;
        break;
      }
      row = eliminate<F>(row, pivot, row.front().second);
    }
  }
  return rank;
}

// Boundary map from faces of size s to faces of size s-1, rows in the order
// of `upper`, columns indexed by position in `lower` (sorted by mask).
template <class F>
std::uint64_t boundary_rank(const std::vector<VarMask>& upper, const std::vector<VarMask>& lower, const F& field) {
  if (upper.empty() || lower.empty()) return 0;
  std::vector<SparseRow<F>> rows;
  rows.reserve(upper.size());
  for (VarMask face : upper) {
    SparseRow<F> row;
    int k = 0;
    for (VarMask rest = face; rest; rest &= rest - 1, ++k) {
      const VarMask bit = rest & (~rest + 1);
      const auto col = std::lower_bound(lower.begin(), lower.end(), face & ~bit) - lower.begin();
      row.push_back({static_cast<std::uint32_t>(col), field.from_int(k % 2 == 0 ? 1 : -1)});
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  return sparse_rank<F>(std::move(rows), lower.size());
}

}  // namespace

// ------------------------------------------------------------ MonomialIdeal

MonomialIdeal::MonomialIdeal(int nvars, std::vector<VarMask> generators) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxSlots - 1) throw InvalidParameter("monomial ideal arity out of range");
  const VarMask allowed = nvars == 64 ? ~VarMask{0} : (VarMask{1} << nvars) - 1;
  std::sort(generators.begin(), generators.end(), [](VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (VarMask g : generators) {
    if (g & ~allowed) throw InvalidParameter("monomial uses a variable outside the ring");
    bool redundant = false;
    for (VarMask h : gens_) redundant = redundant || (h & ~g) == 0;
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(VarMask monomial) const {
  for (VarMask g : gens_)
    if ((g & ~monomial) == 0) return true;
  return false;
}

std::vector<std::vector<VarMask>> SimplicialComplex::faces_within(VarMask sigma, std::size_t max_faces) const {
  std::vector<int> bits;
  for (VarMask rest = sigma; rest; rest &= rest - 1) bits.push_back(std::countr_zero(rest));
  // Non-faces inside sigma, filed under their highest variable: a face grown
  // in increasing variable order only needs those ending at the new variable.
  std::vector<std::vector<VarMask>> ending(64);
  for (VarMask g : minimal_nonfaces())
    if ((g & ~sigma) == 0) ending[63 - std::countl_zero(g)].push_back(g);
  std::vector<std::vector<VarMask>> faces(bits.size() + 1);
  std::size_t total = 0;
  auto grow = [&](auto&& self, VarMask face, std::size_t next, std::size_t size) -> void {
    if (++total > max_faces)
      throw ResourceError("simplicial complex exceeded " + std::to_string(max_faces) + " faces");
    faces[size].push_back(face);
    for (std::size_t k = next; k < bits.size(); ++k) {
      const VarMask candidate = face | (VarMask{1} << bits[k]);
      bool ok = true;
      for (VarMask g : ending[static_cast<std::size_t>(bits[k])])
        if ((g & ~candidate) == 0) {
          ok = false;
          break;
        }
      if (ok) self(self, candidate, k + 1, size + 1);
    }
  };
  grow(grow, 0, 0, 0);
  for (auto& group : faces) std::sort(group.begin(), group.end());
  return faces;
}

template <class F>
MonomialIdeal initial_ideal(const Ideal<F>& ideal, const MonomialOrder& order, const Limits& limits) {
  std::vector<VarMask> gens;
  for (const auto& g : ideal.groebner_basis(order, limits)) {
    const Monomial& lm = g.leading_term(order).mono;
    if (!lm.is_squarefree()) {
      if (order.is_default_lex())
        throw InternalError("lex initial ideal has the non-squarefree generator " +
                            monomial_to_string(lm, ideal.ring()));
      throw DomainError("initial ideal is not squarefree under " + order.name());
    }
    gens.push_back(lm.support() >> 1);
  }
  return MonomialIdeal(ideal.ring().nvars(), std::move(gens));
}

std::vector<VarMask> lcm_lattice(const MonomialIdeal& ideal) {
  std::unordered_set<VarMask> seen;
  std::vector<VarMask> lattice;
  for (VarMask g : ideal.generators()) {
    const std::size_t before = lattice.size();
    for (std::size_t k = 0; k < before; ++k)
      if (seen.insert(lattice[k] | g).second) lattice.push_back(lattice[k] | g);
    if (seen.insert(g).second) lattice.push_back(g);
  }
  std::sort(lattice.begin(), lattice.end(), [](VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return lattice;
}

template <class F>
std::vector<std::uint64_t> restricted_homology_ranks(const SimplicialComplex& sc, VarMask sigma, const F& field,
                                                     const Limits& limits) {
  const auto faces = sc.faces_within(sigma, limits.max_faces);
  const std::size_t top = faces.size();  // sizes 0..top-1
  // rank[s] = rank of the boundary from size s to size s-1.
  std::vector<std::uint64_t> rank(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) rank[s] = boundary_rank(faces[s], faces[s - 1], field);
  std::vector<std::uint64_t> h(top, 0);
  for (std::size_t s = 0; s < top; ++s) h[s] = faces[s].size() - rank[s] - rank[s + 1];
  return h;
}

template <class F>
std::uint64_t restricted_homology_rank(const SimplicialComplex& sc, VarMask sigma, int i, const F& field,
                                       const Limits& limits) {
  if (i < -1) throw InvalidParameter("homology degree must be >= -1");
  const auto h = restricted_homology_ranks(sc, sigma, field, limits);
  const auto k = static_cast<std::size_t>(i + 1);
  return k < h.size() ? h[k] : 0;
}

template <class F>
std::int64_t euler_characteristic_defect(const SimplicialComplex& sc, VarMask sigma, const F& field,
                                         const Limits& limits) {
  const auto faces = sc.faces_within(sigma, limits.max_faces);
  const auto h = restricted_homology_ranks(sc, sigma, field, limits);
  std::int64_t by_faces = 0, by_homology = 0;
  for (std::size_t s = 0; s < faces.size(); ++s) {
    const std::int64_t sign = s % 2 == 0 ? 1 : -1;
    by_faces += sign * static_cast<std::int64_t>(faces[s].size());
    by_homology += sign * static_cast<std::int64_t>(h[s]);
  }
  return by_faces - by_homology;
}

// --------------------------------------------------------------- BettiTable

void BettiTable::set(int i, VarMask sigma, std::uint64_t value) {
  if (value == 0) entries_.erase({i, sigma});
  else entries_[{i, sigma}] = value;
}

std::uint64_t BettiTable::get(int i, VarMask sigma) const {
  const auto it = entries_.find({i, sigma});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::map<std::pair<int, int>, std::uint64_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, value] : entries_) out[{key.first, std::popcount(key.second)}] += value;
  return out;
}

template <class F>
BettiTable graded_betti(const MonomialIdeal& mi, const F& field, const BettiOptions& opts) {
  std::vector<VarMask> sigmas{0};
  if (opts.exhaustive) {
    if (mi.nvars() > kExhaustiveBettiCap)
      throw ResourceError("exhaustive Betti check is capped at " + std::to_string(kExhaustiveBettiCap) +
                          " variables");
    for (VarMask s = 1; s < (VarMask{1} << mi.nvars()); ++s) sigmas.push_back(s);
  } else {
    const auto lattice = lcm_lattice(mi);
    sigmas.insert(sigmas.end(), lattice.begin(), lattice.end());
  }
  const SimplicialComplex sc(mi);
  const auto ranks = parallel_map(sigmas.size(), opts.jobs, [&](std::size_t k) {
    return restricted_homology_ranks(sc, sigmas[k], field, opts.limits);
  });
  BettiTable table;
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    const int size = std::popcount(sigmas[k]);
    for (std::size_t s = 0; s < ranks[k].size(); ++s)
      if (ranks[k][s]) table.set(size - static_cast<int>(s), sigmas[k], ranks[k][s]);
  }
  return table;
}

template <class F>
PdResult projective_dimension(const Graph& g, const F& field, const BettiOptions& opts) {
  const Ideal<F> j = binomial_edge_ideal(g, field);
  PdResult result;
  result.betti = graded_betti(initial_ideal(j, MonomialOrder::lex(), opts.limits), field, opts);
  result.pd = result.betti.projective_dimension();
  result.bigheight = heights(g).bigheight;
  result.equal = result.pd == result.bigheight;
  return result;
}

// ------------------------------------------------------------- closed forms

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

int pd_block_graph(int n) {
  require(n >= 1, "block graph needs n >= 1");
  return n - 1;
}

int pd_cycle(int n) {
  require(n >= 4, "cycle closed form needs n >= 4");
  return n;
}

int pd_wheel(int n) {
  require(n >= 4, "wheel closed form needs a rim of n >= 4");
  return n + 2;
}

int pd_complete_multipartite(std::vector<int> parts) {
  require(parts.size() >= 2, "complete multipartite closed form needs at least two parts");
  std::sort(parts.begin(), parts.end());
  require(parts.front() >= 2, "complete multipartite closed form needs every part of size >= 2");
  int rest = 0;
  for (std::size_t k = 1; k < parts.size(); ++k) rest += parts[k];
  return 2 * rest + parts.front() - 2;
}

int pd_crown(int n) {
  require(n >= 3, "crown closed form needs n >= 3");
  return 4 * n - 6;
}

int pd_cone(const Graph& base, int base_pd) {
  require(base.order() >= 1, "cone needs a nonempty base");
  require(base_pd >= 0, "projective dimension is nonnegative");
  if (is_connected(base)) return 2 + base_pd;
  return std::max(base.order(), 2 + base_pd);
}

int pd_maximal(int n) {
  require(n >= 2, "maximal projective dimension needs n >= 2");
  return 2 * n - 4;
}

// --------------------------------------------------------------- predicates

namespace {

// Every vertex outside `triple` is adjacent to each of its members.
bool joined_to_rest(const Graph& g, VertexMask triple) {
  const VertexMask rest = g.all_vertices() & ~triple;
  for (VertexMask m = triple; m; m &= m - 1) {
    const int v = std::countr_zero(m) + 1;
    if ((g.neighbor_mask(v) & rest) != rest) return false;
  }
  return true;
}

bool in_split_family(const Graph& g) {
  const int n = g.order();
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w) {
      if (g.adjacent(u, w)) continue;
      const VertexMask nu = g.neighbor_mask(u), nw = g.neighbor_mask(w);
      if ((nu | nw) != (g.all_vertices() & ~vertex_bit(u) & ~vertex_bit(w))) continue;
      const VertexMask v0 = nu & nw, v1 = nu & ~v0, v2 = nw & ~v0;
      if (!v1 || !v2) continue;
      bool complete = true;
      for (VertexMask m = v1; m && complete; m &= m - 1)
        complete = (g.neighbor_mask(std::countr_zero(m) + 1) & v2) == v2;
      if (complete) return true;
    }
  return false;
}

bool has_joined_triple(const Graph& g, int wanted_edges) {
  const int n = g.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const int edges = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        if (edges != wanted_edges) continue;
        if (joined_to_rest(g, vertex_bit(a) | vertex_bit(b) | vertex_bit(c))) return true;
      }
  return false;
}

}  // namespace

bool is_join_with_2K1(const Graph& g) {
  const int n = g.order();
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (!g.adjacent(u, w) && joined_to_rest(g, vertex_bit(u) | vertex_bit(w))) return true;
  return false;
}

bool is_D5_type(const Graph& g) {
  if (g.order() < 4) throw InvalidParameter("D5-type test needs at least 4 vertices");
  if (is_join_with_2K1(g)) return false;
  return in_split_family(g) || has_joined_triple(g, 0) || has_joined_triple(g, 1);
}

#define BEI_INSTANTIATE(F)                                                                                   \
  template MonomialIdeal initial_ideal<F>(const Ideal<F>&, const MonomialOrder&, const Limits&);            \
  template std::vector<std::uint64_t> restricted_homology_ranks<F>(const SimplicialComplex&, VarMask,       \
                                                                   const F&, const Limits&);                \
  template std::uint64_t restricted_homology_rank<F>(const SimplicialComplex&, VarMask, int, const F&,      \
                                                     const Limits&);                                        \
  template std::int64_t euler_characteristic_defect<F>(const SimplicialComplex&, VarMask, const F&,         \
                                                       const Limits&);                                      \
  template BettiTable graded_betti<F>(const MonomialIdeal&, const F&, const BettiOptions&);                 \
  template PdResult projective_dimension<F>(const Graph&, const F&, const BettiOptions&);

BEI_INSTANTIATE(Rationals)
BEI_INSTANTIATE(PrimeField)

}  // namespace bei
