// matching.hpp — reuse-partner assignment via minimum-weight bipartite
// matching.
//
// Rows are the candidate CUs (the union set), columns the admissible D2D
// pairs. The matrix is padded square with zero-cost virtual columns (a CU
// matched to a virtual pair keeps its channel exclusive, which costs no
// extra power) and missing real edges carry a large finite sentinel weight.
// Real pairs that end up matched through a sentinel edge could not be
// accommodated and are dropped.

#pragma once

#include <utility>
#include <vector>

#include "d2dsim/power.hpp"

namespace d2d {

// Exact O(n^3) solver for the square assignment problem. Returns the
// cost-minimizing column for each row; deterministic given the matrix.
// Throws std::invalid_argument on empty, non-square, negative or non-finite
// input.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost);

struct AssignmentProblem {
  int n = 0;
  std::vector<std::vector<double>> cost;  // n x n
  std::vector<int> row_labels;            // CU index, -1 for a virtual row
  std::vector<int> col_labels;            // D2D pair index, -1 for a virtual column
  double big_weight = 0.0;                // sentinel for missing real edges
};

// Rows = cu_union, columns = admissible_set padded to square with virtual
// columns (or virtual rows when candidates are scarcer than pairs).
// big_weight = 1e6 * (1 + max finite p_inc), large enough that sentinel
// edges are only taken when unavoidable yet finite so the arithmetic stays
// total. Requires a nonempty admissible set.
AssignmentProblem build_assignment_problem(const CandidateStructure& cand);

struct Assignment {
  std::vector<std::pair<int, int>> matches;  // (cu, d2d), ascending d2d index
  double total_inc_mw = 0.0;
  std::vector<int> unmatched_d2d;  // admissible pairs dropped post-hoc
};

// Hungarian on a padded problem followed by the sentinel/virtual cleanup.
// Exposed separately so tests can perturb the sentinel weight.
Assignment solve_padded(const AssignmentProblem& problem, const CandidateStructure& cand);

// Full second-stage allocation: empty set -> empty assignment; a single
// admissible pair -> direct argmin over its candidates (ties to the lowest
// CU index); otherwise the padded matching problem.
Assignment solve_allocation(const CandidateStructure& cand);

}  // namespace d2d
