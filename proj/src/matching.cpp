#include "d2dsim/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace d2d {

std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) {
    throw std::invalid_argument("hungarian: empty cost matrix");
  }
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("hungarian: cost matrix must be square");
    }
    for (double c : row) {
      if (!std::isfinite(c) || c < 0.0) {
        throw std::invalid_argument("hungarian: costs must be finite and >= 0");
      }
    }
  }

  constexpr double inf = std::numeric_limits<double>::infinity();

  // Potentials on rows (u) and columns (v); match_row[j] is the row matched
  // to column j. Index 0 is a sentinel, the real problem lives in 1..n.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match_row(n + 1, 0), way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    match_row[0] = i;
    int j0 = 0;
    std::vector<double> min_slack(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match_row[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_row[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_row[j0] != 0);

    // Unroll the augmenting path.
    do {
      const int j1 = way[j0];
      match_row[j0] = match_row[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    row_to_col[match_row[j] - 1] = j - 1;
  }
  return row_to_col;
}

AssignmentProblem build_assignment_problem(const CandidateStructure& cand) {
  if (cand.admissible_set.empty()) {
    throw std::invalid_argument("build_assignment_problem: no admissible pairs");
  }

  double max_inc = 0.0;
  for (int j : cand.admissible_set) {
    for (const Candidate& c : cand.candidates[j]) {
      max_inc = std::max(max_inc, c.p_inc_mw);
    }
  }
  const double big = 1.0e6 * (1.0 + max_inc);

  const int rows = static_cast<int>(cand.cu_union.size());
  const int cols = static_cast<int>(cand.admissible_set.size());
  const int n = std::max(rows, cols);

  AssignmentProblem problem;
  problem.n = n;
  problem.big_weight = big;
  problem.row_labels.assign(n, -1);
  problem.col_labels.assign(n, -1);
  for (int r = 0; r < rows; ++r) problem.row_labels[r] = cand.cu_union[r];
  for (int c = 0; c < cols; ++c) problem.col_labels[c] = cand.admissible_set[c];

  // Virtual rows and columns cost zero everywhere: they model "this CU stays
  // exclusive" / "this pair competes for no extra CU".
  problem.cost.assign(n, std::vector<double>(n, 0.0));
  for (int r = 0; r < rows; ++r) {
    const int cu = cand.cu_union[r];
    for (int c = 0; c < cols; ++c) {
      const auto& list = cand.candidates[cand.admissible_set[c]];
      const auto it = std::find_if(list.begin(), list.end(),
                                   [cu](const Candidate& cd) { return cd.cu == cu; });
      problem.cost[r][c] = (it != list.end()) ? it->p_inc_mw : big;
    }
  }
  return problem;
}

namespace {

const Candidate* find_candidate(const CandidateStructure& cand, int cu, int pair) {
  for (const Candidate& c : cand.candidates[pair]) {
    if (c.cu == cu) return &c;
  }
  return nullptr;
}

}  // namespace

Assignment solve_padded(const AssignmentProblem& problem, const CandidateStructure& cand) {
  // Solve with a scale-proportional sentinel instead of problem.big_weight:
  // (n + 1) * max real weight still exceeds any all-real matching, but keeps
  // every matrix entry within a few orders of magnitude so the potentials
  // never swallow real weight differences. The surviving-match set is
  // invariant to the sentinel magnitude, so this solves the same problem.
  const int n = problem.n;
  double max_real = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double w = problem.cost[r][c];
      if (w < problem.big_weight) max_real = std::max(max_real, w);
    }
  }
  const double sentinel = (max_real > 0.0) ? (n + 1) * max_real : 1.0;
  std::vector<std::vector<double>> cost = problem.cost;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (cost[r][c] >= problem.big_weight) cost[r][c] = sentinel;
    }
  }

  const std::vector<int> row_to_col = hungarian(cost);

  Assignment out;
  std::vector<std::pair<int, int>> matches;  // (d2d, cu) for sorting by pair
  for (int r = 0; r < problem.n; ++r) {
    const int c = row_to_col[r];
    const int pair = problem.col_labels[c];
    if (pair < 0) continue;  // virtual column, CU keeps its channel exclusive
    const int cu = problem.row_labels[r];
    const Candidate* hit = (cu >= 0) ? find_candidate(cand, cu, pair) : nullptr;
    if (hit == nullptr) {
      // Virtual row or sentinel edge: the pair could not be accommodated.
      out.unmatched_d2d.push_back(pair);
      continue;
    }
    matches.emplace_back(pair, cu);
    out.total_inc_mw += hit->p_inc_mw;
  }
  std::sort(matches.begin(), matches.end());
  std::sort(out.unmatched_d2d.begin(), out.unmatched_d2d.end());
  for (const auto& [pair, cu] : matches) {
    out.matches.emplace_back(cu, pair);
  }
  return out;
}

Assignment solve_allocation(const CandidateStructure& cand) {
  Assignment out;
  if (cand.admissible_set.empty()) {
    return out;
  }

  if (cand.admissible_set.size() == 1) {
    const int j = cand.admissible_set.front();
    const Candidate* best = nullptr;
    for (const Candidate& c : cand.candidates[j]) {
      // Strict < keeps the lowest CU index on ties (list is CU-ascending).
      if (best == nullptr || c.p_inc_mw < best->p_inc_mw) best = &c;
    }
    out.matches.emplace_back(best->cu, j);
    out.total_inc_mw = best->p_inc_mw;
    return out;
  }

  return solve_padded(build_assignment_problem(cand), cand);
}

}  // namespace d2d
