// Hermitian operators on a bipartite space A (x) B. Subsystem ordering is
// fixed globally: A is the outer (slow) index, B the inner (fast) one, so
// a composite index reads (i_A * dim_b + i_B). Every index convention in
// the repo derives from this rule.
#pragma once

#include <vector>

#include "pptdiscrim/cmatrix.hpp"

namespace pptdiscrim {

class HermOp {
 public:
  // Validates squareness, order == dim_a*dim_b and Hermiticity
  // (max |M - M^dagger| <= 1e-12 * max |M|).
  HermOp(int dim_a, int dim_b, CMatrix m);

  static HermOp identity(int dim_a, int dim_b) {
    return HermOp(dim_a, dim_b, CMatrix::identity(dim_a * dim_b));
  }

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int order() const { return mat_.rows(); }
  const CMatrix& matrix() const { return mat_; }

  HermOp& operator+=(const HermOp& o);
  HermOp& operator-=(const HermOp& o);
  HermOp& operator*=(double s);
  friend HermOp operator+(HermOp a, const HermOp& b) { return a += b; }
  friend HermOp operator-(HermOp a, const HermOp& b) { return a -= b; }
  friend HermOp operator*(double s, HermOp a) { return a *= s; }

 private:
  int dim_a_, dim_b_;
  CMatrix mat_;
};

enum class Subsystem { A, B };

// Transpose on the A factor only: out[(j,k),(i,l)] = x[(i,k),(j,l)].
HermOp partial_transpose(const HermOp& x);

// Tr_A (dim_b x dim_b) or Tr_B (dim_a x dim_a).
CMatrix partial_trace(const HermOp& x, Subsystem over);

// Real Hilbert-Schmidt inner product Tr(a^dagger b); throws if the
// imaginary residue exceeds 1e-10.
double hs_inner(const HermOp& a, const HermOp& b);

// All eigenvalues, ascending. Computed on the real embedding of the
// Hermitian matrix; throws EigNonConvergence on iteration-cap overflow.
std::vector<double> eigvals_hermitian(const HermOp& x);

// min eigenvalue >= -tol * max(1, max|x|)
bool is_psd(const HermOp& x, double tol = 1e-9);

double min_eigval(const HermOp& x);

// Wrap a nearly-Hermitian matrix: (m + m^dagger)/2.
HermOp symmetrized(int dim_a, int dim_b, const CMatrix& m);

}  // namespace pptdiscrim
