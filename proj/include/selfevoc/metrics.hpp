#pragma once

#include <vector>

#include "selfevoc/matrix.hpp"

namespace selfevoc {

// Exact O(n^3) min-cost assignment on a square cost matrix.
// Returns col[row] for the optimal assignment.
std::vector<int> hungarian(const Matrix& cost);

// Contingency counts; entry (i,j) = #samples with a=i and b=j.
Matrix contingency_table(const std::vector<int>& a, const std::vector<int>& b);

// Best-bijection label agreement (optimal assignment over the contingency
// table, padded square). Labels must be < 64 per side.
double clustering_accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

// I(P;T)/sqrt(H(P)H(T)), natural logs. Both-single-cluster inputs give 1,
// a single-cluster side against a non-trivial one gives 0.
double normalized_mutual_info(const std::vector<int>& pred, const std::vector<int>& truth);

// Pair-counting adjusted Rand index.
double adjusted_rand_index(const std::vector<int>& pred, const std::vector<int>& truth);

}  // namespace selfevoc
