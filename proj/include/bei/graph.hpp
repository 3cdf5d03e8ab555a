#pragma once

// Simple undirected graphs on the labels 1..n, the families used throughout
// (crown, cycle, path, complete, complete multipartite, empty), and the
// exhaustive graph invariants (vertex connectivity, connected domination).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bei {

// Bit k-1 stands for vertex k. Graphs are limited to 64 vertices.
using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }

// Sorted, duplicate-free list of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> labels);
  explicit VertexSet(std::vector<int> labels);

  static VertexSet from_mask(VertexMask mask);
  static VertexSet range(int first, int last);  // {first, ..., last}

  VertexMask mask() const;
  bool contains(int v) const;
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  int front() const { return labels_.front(); }
  int back() const { return labels_.back(); }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  const std::vector<int>& labels() const { return labels_; }

  VertexSet without(int v) const;
  VertexSet with(int v) const;

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by size first, then lexicographically.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<int> labels_;
};

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  // Canonicalizes each pair to u < v and sorts. Rejects self-loops, duplicate
  // edges (in either orientation) and endpoints outside 1..n.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(int u, int v) const;
  VertexMask neighbor_mask(int v) const { return adj_[v - 1]; }
  VertexSet neighborhood(int v) const { return VertexSet::from_mask(adj_[v - 1]); }
  int degree(int v) const;
  int min_degree() const;
  VertexMask all_vertices() const;
  VertexSet vertex_set() const { return VertexSet::from_mask(all_vertices()); }
  bool is_valid_vertex(int v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

// Odd labels X = {2i-1} and even labels Y = {2i} of the crown graph on [2n].
struct CrownBipartition {
  VertexSet odd;
  VertexSet even;
};
CrownBipartition crown_bipartition(int n);

enum class Family { crown, cycle, path, complete, complete_multipartite, empty };

struct FamilySpec {
  Family family = Family::empty;
  int n = 0;
  std::vector<int> parts;  // complete_multipartite only

  std::string describe() const;
};

// crown(2) is 2K_2 and is accepted; the crown results assume n >= 3.
Graph crown(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph empty_graph(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph generate(const FamilySpec& spec);
Family parse_family(const std::string& name);

// Labels of g2 are shifted by |V(g1)|.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[k-1] is the original label of new vertex k
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a);

// Vertex sets of the connected components of g, ordered by smallest label.
std::vector<VertexSet> components(const Graph& g);
// Components of g[mask], as masks ordered by smallest label.
std::vector<VertexMask> component_masks(const Graph& g, VertexMask mask);
int count_components(const Graph& g, VertexMask mask);
bool is_connected(const Graph& g);

VertexSet cut_vertices(const Graph& g);

// G_v: g plus every edge between two neighbours of v.
Graph local_completion(const Graph& g, int v);

// A vertex lies in more than one maximal clique exactly when its
// neighbourhood is not a clique, which is the test used here.
bool is_internal_vertex(const Graph& g, int v);
bool is_clique(const Graph& g, VertexMask mask);

// Exhaustive; K_n gives n-1. Throws DomainError for disconnected input.
int vertex_connectivity(const Graph& g);

// Smallest connected dominating set, searched by size then lexicographically.
// Throws DomainError for disconnected input.
VertexSet minimum_connected_dominating_set(const Graph& g);
int connected_domination_number(const Graph& g);

}  // namespace bei
