#pragma once

// The checks behind `verify` and the acceptance binary: one entry per
// numbered criterion, each a batch of exact comparisons.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/groebner.hpp"

namespace bei {

struct VerifyOptions {
  // Family parameters (crown n, cycle n, ...) and vertex counts of the
  // exhaustive graph classes above this are skipped.
  int max_n = 1000;
  std::optional<std::uint32_t> prime;  // unset: exact rationals
  int jobs = 1;
  Limits limits;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  int checks = 0;
  int failures = 0;
  int skipped = 0;
  std::string detail;  // first failure, if any
  double seconds = 0;

  bool passed() const { return failures == 0 && checks > 0; }
};

inline constexpr int kCriterionCount = 14;

CriterionResult run_criterion(int id, const VerifyOptions& opts);

// "PASS  7  title  (checks, seconds)" or FAIL / SKIP with the first failure.
std::string format_result(const CriterionResult& r);

// One connected graph per isomorphism class on n <= 6 vertices, each in the
// labeling with the smallest edge mask, sorted by that mask.
std::vector<Graph> connected_graphs(int n);

// "n: u-v u-v ..." for messages.
std::string graph_label(const Graph& g);

}  // namespace bei
