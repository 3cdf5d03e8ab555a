#pragma once

// Cut sets with the cut-point property and the dimension data of the primes
// P_T(G) they index. A set T qualifies when T is empty or every i in T
// satisfies c(T) > c(T \ {i}), where c counts components of G minus T.

#include <vector>

#include "bei/graph.hpp"

namespace bei {

struct PrimeSupport {
  VertexSet t;
  std::vector<VertexSet> comps;  // components of G[complement of t], by smallest label

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

// Sorted by (|T|, lexicographic T), duplicate-free.
using CutSetFamily = std::vector<PrimeSupport>;

inline constexpr int kDefaultCutsetCap = 20;

PrimeSupport prime_support(const Graph& g, const VertexSet& t);

// Throws InvalidParameter when t covers every vertex or holds a bad label.
int component_count_after_removal(const Graph& g, const VertexSet& t);

bool has_cut_point_property(const Graph& g, const VertexSet& t);

// Scans all 2^n subsets. Throws ResourceError when n exceeds max_vertices.
CutSetFamily enumerate_cutsets(const Graph& g, int max_vertices = kDefaultCutsetCap);

// Closed form for crown(n), n >= 3: empty set, X, Y, X minus one vertex,
// Y minus one vertex, and A u (A+1) for every (n-2)-subset A of X.
CutSetFamily crown_cutset_classification(int n);

// Which closed-form case a cut set of crown(n) falls under. For the
// one-vertex-removed cases i names the missing pair index; for A-type sets
// i < j are the two indices whose pairs {2i-1, 2i}, {2j-1, 2j} stay outside T.
enum class CrownCutsetKind { empty, odd_side, even_side, odd_side_minus, even_side_minus, pair_type };

struct CrownCutsetCase {
  CrownCutsetKind kind;
  int i = 0;
  int j = 0;
  friend bool operator==(const CrownCutsetCase&, const CrownCutsetCase&) = default;
};

// Throws InvalidParameter when t is not one of the closed-form cut sets.
CrownCutsetCase classify_crown_cutset(int n, const VertexSet& t);

// Dimension of S/P_T for each case: 2n+1, 2n, n+3 and 6.
int crown_case_dimension(int n, CrownCutsetKind kind);

// |V| - |t| + c(t), the Krull dimension of S/P_t(G).
int quotient_dimension(const Graph& g, const VertexSet& t);

int krull_dimension(const Graph& g, const CutSetFamily& family);
int krull_dimension(const Graph& g);

struct Heights {
  int height = 0;
  int bigheight = 0;
  friend bool operator==(const Heights&, const Heights&) = default;
};
Heights heights(const Graph& g, const CutSetFamily& family);
Heights heights(const Graph& g);

}  // namespace bei
