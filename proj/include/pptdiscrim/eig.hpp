// Dense real symmetric eigensolver: Householder tridiagonalization
// followed by implicit-shift QL sweeps. Orders of interest stay below a
// few hundred, so the O(n^3) dense path is used unconditionally.
#pragma once

#include <stdexcept>
#include <vector>

namespace pptdiscrim {

struct EigNonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalues of the symmetric matrix a (row-major, leading dimension
// lda), ascending.
std::vector<double> sym_eigvals(const double* a, int n, int lda);

struct SymEig {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n; column j pairs with values[j]
};

SymEig sym_eig(const double* a, int n, int lda);

}  // namespace pptdiscrim
