#ifndef ELLIPTOPE_ORACLE_HPP
#define ELLIPTOPE_ORACLE_HPP

#include <optional>
#include <vector>

#include "elliptope/graph.hpp"

namespace ell {

struct MaxCutResult {
  Rational value;
  std::vector<VertexPartition> optimal_cuts;  // canonical, sorted, at most 4096 listed
  long long count = 0;  // exact number of optimal partitions modulo global flip
};

// Exhaustive enumeration with vertex 0 pinned to side A. Exact; n <= 28.
MaxCutResult brute_force_maxcut(const Graph& g);

Rational cut_value(const Graph& g, const VertexPartition& p);

// Subset of indices with sum == total/2, or nullopt. Pseudo-polynomial DP.
std::optional<std::vector<int>> exact_sum_decision(const std::vector<long long>& a);
// Rational inputs are scaled by the lcm of denominators first.
std::optional<std::vector<int>> exact_sum_decision(const std::vector<Rational>& a);

// Balanced splits of the mass vector, counted up to complement, saturating.
long long count_balanced_partitions(const std::vector<Rational>& m, long long cap);

}  // namespace ell

#endif
