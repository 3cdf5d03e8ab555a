#include "bei/minimal_primes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "bei/errors.hpp"

namespace bei {

namespace {

VertexMask checked_mask(const Graph& g, const VertexSet& t) {
  for (int v : t)
    if (!g.is_valid_vertex(v))
      throw InvalidParameter("vertex " + std::to_string(v) + " is not in the graph");
  return t.mask();
}

bool cut_point_property(const Graph& g, VertexMask t) {
  const VertexMask all = g.all_vertices();
  const int c = count_components(g, all & ~t);
  for (VertexMask m = t; m; m &= m - 1) {
    const VertexMask bit = m & (~m + 1);
    if (c <= count_components(g, all & ~(t & ~bit))) return false;
  }
  return true;
}

}  // namespace

PrimeSupport prime_support(const Graph& g, const VertexSet& t) {
  const VertexMask mask = checked_mask(g, t);
  PrimeSupport p{t, {}};
  for (VertexMask c : component_masks(g, g.all_vertices() & ~mask)) p.comps.push_back(VertexSet::from_mask(c));
  return p;
}

int component_count_after_removal(const Graph& g, const VertexSet& t) {
  const VertexMask mask = checked_mask(g, t);
  if ((g.all_vertices() & ~mask) == 0) throw InvalidParameter("removal set covers every vertex");
  return count_components(g, g.all_vertices() & ~mask);
}

bool has_cut_point_property(const Graph& g, const VertexSet& t) {
  return cut_point_property(g, checked_mask(g, t));
}

CutSetFamily enumerate_cutsets(const Graph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw ResourceError("cut set enumeration over " + std::to_string(n) +
                        " vertices exceeds the cap of " + std::to_string(max_vertices));
  const VertexMask all = g.all_vertices();
  const std::size_t total = std::size_t{1} << n;
  // counts[T] = c(T); every subset is needed because the property is not monotone.
  std::vector<std::uint8_t> counts(total);
  for (std::size_t t = 0; t < total; ++t)
    counts[t] = static_cast<std::uint8_t>(count_components(g, all & ~static_cast<VertexMask>(t)));

  CutSetFamily family;
  for (std::size_t t = 0; t < total; ++t) {
    bool ok = true;
    for (std::size_t m = t; m && ok; m &= m - 1) {
      const std::size_t bit = m & (~m + 1);
      ok = counts[t] > counts[t & ~bit];
    }
    if (!ok) continue;
    PrimeSupport p{VertexSet::from_mask(t), {}};
    for (VertexMask c : component_masks(g, all & ~static_cast<VertexMask>(t)))
      p.comps.push_back(VertexSet::from_mask(c));
    family.push_back(std::move(p));
  }
  std::sort(family.begin(), family.end(),
            [](const PrimeSupport& a, const PrimeSupport& b) { return a.t < b.t; });
  return family;
}

CutSetFamily crown_cutset_classification(int n) {
  if (n < 3) throw InvalidParameter("crown cut set classification requires n >= 3");
  const Graph g = crown(n);
  const auto [x, y] = crown_bipartition(n);
  std::vector<VertexSet> sets{VertexSet{}, x, y};
  for (int i = 1; i <= n; ++i) {
    sets.push_back(x.without(2 * i - 1));
    sets.push_back(y.without(2 * i));
  }
  // A ranges over the (n-2)-subsets of X, i.e. X minus a pair {2i-1, 2j-1}.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> t;
      for (int k = 1; k <= n; ++k)
        if (k != i && k != j) {
          t.push_back(2 * k - 1);
          t.push_back(2 * k);
        }
      sets.emplace_back(std::move(t));
    }
  CutSetFamily family;
  for (VertexSet& t : sets) family.push_back(prime_support(g, t));
  std::sort(family.begin(), family.end(),
            [](const PrimeSupport& a, const PrimeSupport& b) { return a.t < b.t; });
  return family;
}

CrownCutsetCase classify_crown_cutset(int n, const VertexSet& t) {
  if (n < 3) throw InvalidParameter("crown cut set classification requires n >= 3");
  const auto [x, y] = crown_bipartition(n);
  if (t.empty()) return {CrownCutsetKind::empty};
  if (t == x) return {CrownCutsetKind::odd_side};
  if (t == y) return {CrownCutsetKind::even_side};
  for (int i = 1; i <= n; ++i) {
    if (t == x.without(2 * i - 1)) return {CrownCutsetKind::odd_side_minus, i};
    if (t == y.without(2 * i)) return {CrownCutsetKind::even_side_minus, i};
  }
  if (t.size() == static_cast<std::size_t>(2 * n - 4) && t.back() <= 2 * n) {
    std::vector<int> outside;
    bool paired = true;
    for (int k = 1; k <= n; ++k) {
      const bool a = t.contains(2 * k - 1), b = t.contains(2 * k);
      paired = paired && a == b;
      if (!a) outside.push_back(k);
    }
    if (paired && outside.size() == 2) return {CrownCutsetKind::pair_type, outside[0], outside[1]};
  }
  throw InvalidParameter("vertex set " + t.to_string() + " is not a cut set of crown " + std::to_string(n));
}

int crown_case_dimension(int n, CrownCutsetKind kind) {
  switch (kind) {
    case CrownCutsetKind::empty: return 2 * n + 1;
    case CrownCutsetKind::odd_side:
    case CrownCutsetKind::even_side: return 2 * n;
    case CrownCutsetKind::odd_side_minus:
    case CrownCutsetKind::even_side_minus: return n + 3;
    case CrownCutsetKind::pair_type: return 6;
  }
  throw InternalError("unknown crown cut set kind");
}

int quotient_dimension(const Graph& g, const VertexSet& t) {
  const VertexMask mask = checked_mask(g, t);
  return g.order() - static_cast<int>(t.size()) + count_components(g, g.all_vertices() & ~mask);
}

int krull_dimension(const Graph& g, const CutSetFamily& family) {
  int best = std::numeric_limits<int>::min();
  for (const PrimeSupport& p : family) best = std::max(best, g.order() - static_cast<int>(p.t.size()) + static_cast<int>(p.comps.size()));
  return best;
}

int krull_dimension(const Graph& g) { return krull_dimension(g, enumerate_cutsets(g)); }

Heights heights(const Graph& g, const CutSetFamily& family) {
  const int ring_dim = 2 * g.order();
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const PrimeSupport& p : family) {
    const int dim = g.order() - static_cast<int>(p.t.size()) + static_cast<int>(p.comps.size());
    lo = std::min(lo, ring_dim - dim);
    hi = std::max(hi, ring_dim - dim);
  }
  return {lo, hi};
}

Heights heights(const Graph& g) { return heights(g, enumerate_cutsets(g)); }

}  // namespace bei
