// Self-contained primal-dual interior-point solver for small dense
// block-structured SDPs over Hermitian variables with linear equality
// constraints; LPs are the diagonal special case running through the
// same core.
//
//   maximize    sum_b <C_b, X_b>
//   subject to  sum_b <A_{r,b}, X_b> = rhs_r      r = 1..m
//               X_b in PSD (psd_complex) or X_b >= 0 (nonneg_diag)
//
// Hermitian blocks are embedded into real symmetric form once at
// assembly; a single real symmetric kernel then serves both SDP and LP
// paths (Mehrotra predictor-corrector with the HKM direction, dense
// Schur complement factored by Cholesky over its block-arrow pattern).
#pragma once

#include <iosfwd>
#include <vector>

#include "pptdiscrim/cmatrix.hpp"

namespace pptdiscrim::conic {

enum class BlockKind { psd_complex, nonneg_diag };

struct BlockDesc {
  BlockKind kind;
  int order;
};

// One stored coefficient of a Hermitian matrix: H[i,j] = v and
// H[j,i] = conj(v), with i <= j. Diagonal blocks use i == j, v real.
struct HermEntry {
  int i, j;
  cplx v;
};

struct BlockCoeff {
  int block;
  std::vector<HermEntry> entries;
};

struct ConstraintRow {
  std::vector<BlockCoeff> coeff;
  double rhs = 0.0;
};

struct ConicProblem {
  std::vector<BlockDesc> blocks;
  std::vector<std::vector<HermEntry>> objective;  // one list per block
  std::vector<ConstraintRow> rows;
};

enum class SolveStatus { optimal, max_iterations, numerical_failure };

struct SolveOptions {
  double tol_gap = 1e-8;
  double tol_feas = 1e-8;
  int max_iter = 200;
  double step_fraction = 0.98;
  std::ostream* trace = nullptr;  // per-iteration text records when set
};

struct ConicSolution {
  SolveStatus status = SolveStatus::numerical_failure;
  std::vector<CMatrix> primal_blocks;  // Hermitian, one per block
  std::vector<CMatrix> dual_slacks;    // Hermitian, one per block
  std::vector<double> dual_multipliers;
  double primal_value = 0.0;
  double dual_value = 0.0;
  // |primal - dual| / (1 + |primal| + |dual|), recomputed independently
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double min_primal_eig = 0.0;
  double min_slack_eig = 0.0;
  int iterations = 0;
  std::vector<int> dropped_rows;  // dependent rows removed at assembly
};

ConicSolution solve(const ConicProblem& p, const SolveOptions& opts = {});

// Same engine restricted to nonneg_diag blocks.
ConicSolution solve_lp(const ConicProblem& p, const SolveOptions& opts = {});

// From-scratch re-verification of a solution against the problem data;
// solve() only reports `optimal` after this check passes.
struct Verification {
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double min_primal_eig = 0.0;
  double min_slack_eig = 0.0;
};
Verification verify_solution(const ConicProblem& p, const ConicSolution& s);

// [[Re H, -Im H], [Im H, Re H]]; doubles every eigenvalue's multiplicity.
CMatrix real_embed(const CMatrix& h);

}  // namespace pptdiscrim::conic
