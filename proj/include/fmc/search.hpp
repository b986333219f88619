#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fmc/graded.hpp"

namespace fmc {

struct SearchParams {
  std::vector<int> cyclic_orders;
  int root_order = 1;
  std::vector<std::vector<long long>> exponents;
  std::size_t dimension = 0;
  /// One degree per basis vector; empty means every vector has degree 0.
  std::vector<std::vector<long long>> degrees;
  /// Suite or identity name.
  std::string target;
  /// Scalar literals to draw structure constants from.
  std::vector<std::string> pool;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

struct SearchResult {
  /// Distinct passing instances in discovery order.
  std::vector<AlgebraSpec> found;
  std::uint64_t trials = 0;
  /// Distinct candidates evaluated.
  std::uint64_t distinct = 0;
};

/// Samples grading-respecting structure constants for the products the
/// target reads (and a symmetric form when it reads one), keeps the
/// candidates passing every member of the target. Deterministic in
/// (params, seed). Throws InvalidArgument on bad parameters.
SearchResult search(const SearchParams& params);

}  // namespace fmc
