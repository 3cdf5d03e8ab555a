#include "bei/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "bei/errors.hpp"

namespace bei {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

// Next k-subset of {0..n-1} in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> labels)
    : VertexSet(std::vector<int>(labels)) {}

VertexSet::VertexSet(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  require(std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end(),
          "vertex set contains a repeated label");
  require(labels_.empty() || labels_.front() >= 1, "vertex labels start at 1");
}

VertexSet VertexSet::from_mask(VertexMask mask) {
  VertexSet s;
  while (mask) {
    s.labels_.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return s;
}

VertexSet VertexSet::range(int first, int last) {
  VertexSet s;
  for (int v = first; v <= last; ++v) s.labels_.push_back(v);
  return s;
}

VertexMask VertexSet::mask() const {
  VertexMask m = 0;
  for (int v : labels_) {
    require(v <= kMaxVertices, "vertex label exceeds 64");
    m |= vertex_bit(v);
  }
  return m;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

VertexSet VertexSet::without(int v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.labels_.begin(), s.labels_.end(), v);
  if (it != s.labels_.end() && *it == v) s.labels_.erase(it);
  return s;
}

VertexSet VertexSet::with(int v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.labels_.begin(), s.labels_.end(), v);
  if (it == s.labels_.end() || *it != v) s.labels_.insert(it, v);
  return s;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < labels_.size(); ++i) os << (i ? "," : "") << labels_[i];
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.labels_ <=> b.labels_;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  require(n >= 0 && n <= kMaxVertices, "graph order must lie in 0..64");
  for (Edge& e : edges) {
    require(e.u != e.v, "self-loop at vertex " + std::to_string(e.u));
    require(e.u >= 1 && e.u <= n && e.v >= 1 && e.v <= n,
            "edge endpoint outside 1.." + std::to_string(n));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  require(dup == edges.end(), dup == edges.end() ? std::string{}
                                                  : "duplicate edge {" + std::to_string(dup->u) +
                                                        "," + std::to_string(dup->v) + "}");
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[e.u - 1] |= vertex_bit(e.v);
    adj_[e.v - 1] |= vertex_bit(e.u);
  }
}

bool Graph::adjacent(int u, int v) const { return (adj_[u - 1] & vertex_bit(v)) != 0; }

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

int Graph::min_degree() const {
  int d = n_;
  for (int v = 1; v <= n_; ++v) d = std::min(d, degree(v));
  return d;
}

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

// ----------------------------------------------------------------- families

CrownBipartition crown_bipartition(int n) {
  std::vector<int> odd, even;
  for (int i = 1; i <= n; ++i) {
    odd.push_back(2 * i - 1);
    even.push_back(2 * i);
  }
  return {VertexSet(std::move(odd)), VertexSet(std::move(even))};
}

Graph crown(int n) {
  require(n >= 2, "crown requires n >= 2");
  require(2 * n <= kMaxVertices, "crown graph exceeds 64 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) edges.push_back({2 * i - 1, 2 * j});
  return Graph(2 * n, std::move(edges));
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) {
  require(n >= 1, "empty requires n >= 1");
  return Graph(n, {});
}

Graph complete_multipartite(std::span<const int> parts) {
  require(parts.size() >= 2, "complete multipartite requires at least 2 parts");
  for (int p : parts) require(p >= 1, "every part of a complete multipartite graph needs >= 1 vertex");
  Graph g = empty_graph(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = join(g, empty_graph(parts[i]));
  return g;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::crown: return crown(spec.n);
    case Family::cycle: return cycle(spec.n);
    case Family::path: return path(spec.n);
    case Family::complete: return complete(spec.n);
    case Family::empty: return empty_graph(spec.n);
    case Family::complete_multipartite: return complete_multipartite(spec.parts);
  }
  throw InvalidParameter("unknown family");
}

Family parse_family(const std::string& name) {
  if (name == "crown") return Family::crown;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "complete") return Family::complete;
  if (name == "empty") return Family::empty;
  if (name == "multipartite" || name == "complete_multipartite") return Family::complete_multipartite;
  throw InvalidParameter("unknown graph family '" + name + "'");
}

std::string FamilySpec::describe() const {
  switch (family) {
    case Family::crown: return "crown " + std::to_string(n);
    case Family::cycle: return "cycle " + std::to_string(n);
    case Family::path: return "path " + std::to_string(n);
    case Family::complete: return "complete " + std::to_string(n);
    case Family::empty: return "empty " + std::to_string(n);
    case Family::complete_multipartite: {
      std::string s = "complete_multipartite ";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
      return s;
    }
  }
  return "unknown";
}

Graph join(const Graph& g1, const Graph& g2) {
  require(g1.order() >= 1 && g2.order() >= 1, "join requires nonempty graphs");
  const int shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  for (int u = 1; u <= g1.order(); ++u)
    for (int v = 1; v <= g2.order(); ++v) edges.push_back({u, v + shift});
  return Graph(g1.order() + g2.order(), std::move(edges));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g1.order() + g2.order(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  for (int v : a)
    if (!g.is_valid_vertex(v))
      throw InvalidParameter("vertex " + std::to_string(v) + " is not in the graph");
  std::vector<int> new_label(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t k = 0; k < a.size(); ++k) new_label[a.labels()[k]] = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (new_label[e.u] && new_label[e.v]) edges.push_back({new_label[e.u], new_label[e.v]});
  return {Graph(static_cast<int>(a.size()), std::move(edges)), a.labels()};
}

// ------------------------------------------------------------ connectivity

std::vector<VertexMask> component_masks(const Graph& g, VertexMask mask) {
  std::vector<VertexMask> out;
  VertexMask remaining = mask;
  while (remaining) {
    VertexMask comp = remaining & (~remaining + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f) + 1);
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

int count_components(const Graph& g, VertexMask mask) {
  int count = 0;
  VertexMask remaining = mask;
  while (remaining) {
    VertexMask comp = remaining & (~remaining + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f) + 1);
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    ++count;
    remaining &= ~comp;
  }
  return count;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexMask m : component_masks(g, g.all_vertices())) out.push_back(VertexSet::from_mask(m));
  return out;
}

bool is_connected(const Graph& g) { return count_components(g, g.all_vertices()) <= 1; }

VertexSet cut_vertices(const Graph& g) {
  const int base = count_components(g, g.all_vertices());
  VertexMask cut = 0;
  for (int v = 1; v <= g.order(); ++v)
    if (count_components(g, g.all_vertices() & ~vertex_bit(v)) > base) cut |= vertex_bit(v);
  return VertexSet::from_mask(cut);
}

Graph local_completion(const Graph& g, int v) {
  if (!g.is_valid_vertex(v)) throw InvalidParameter("vertex " + std::to_string(v) + " is not in the graph");
  std::vector<Edge> edges = g.edges();
  const VertexSet nbrs = g.neighborhood(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      const int a = nbrs.labels()[i], b = nbrs.labels()[j];
      if (!g.adjacent(a, b)) edges.push_back({a, b});
    }
  return Graph(g.order(), std::move(edges));
}

bool is_clique(const Graph& g, VertexMask mask) {
  for (VertexMask m = mask; m; m &= m - 1) {
    const int v = std::countr_zero(m) + 1;
    if ((g.neighbor_mask(v) & mask) != (mask & ~vertex_bit(v))) return false;
  }
  return true;
}

bool is_internal_vertex(const Graph& g, int v) {
  if (!g.is_valid_vertex(v)) throw InvalidParameter("vertex " + std::to_string(v) + " is not in the graph");
  return !is_clique(g, g.neighbor_mask(v));
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw DomainError("vertex connectivity needs a connected graph");
  if (is_clique(g, g.all_vertices())) return n - 1;
  // A non-complete connected graph has two non-adjacent vertices, so removing
  // the other n-2 disconnects it: the search ends by k = n-2.
  for (int k = 1; k <= n - 2; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    do {
      VertexMask removed = 0;
      for (int i : idx) removed |= vertex_bit(i + 1);
      if (count_components(g, g.all_vertices() & ~removed) > 1) return k;
    } while (next_combination(idx, n));
  }
  throw InternalError("vertex connectivity search did not terminate");
}

VertexSet minimum_connected_dominating_set(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) throw DomainError("connected domination needs a connected graph");
  const VertexMask all = g.all_vertices();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    do {
      VertexMask u = 0, closed = 0;
      for (int i : idx) {
        u |= vertex_bit(i + 1);
        closed |= vertex_bit(i + 1) | g.neighbor_mask(i + 1);
      }
      if (closed == all && count_components(g, u) == 1) return VertexSet::from_mask(u);
    } while (next_combination(idx, n));
  }
  throw InternalError("connected domination search did not terminate");
}

int connected_domination_number(const Graph& g) {
  return static_cast<int>(minimum_connected_dominating_set(g).size());
}

}  // namespace bei
