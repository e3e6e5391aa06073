// Constructors for the state families the tool knows about: Paulis, Bell
// states, generalized Bell states, lattice (Bell-product) states, the
// named example sets, the Bell-basis dephasing channel and the
// maximal-entanglement test.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pptdiscrim/hermop.hpp"

namespace pptdiscrim {

struct BellIndex {
  int value = 0;
  explicit BellIndex(int v) : value(v) {
    if (v < 0 || v > 3) throw std::invalid_argument("BellIndex: out of range");
  }
};

// v = (v_1,...,v_t); |psi_v> = |psi_{v_1}> (x) ... (x) |psi_{v_t}>, with
// the qubit pairs re-sorted so Alice holds all A_l and Bob all B_l.
struct LatticeVector {
  std::vector<int> indices;
  explicit LatticeVector(std::vector<int> idx) : indices(std::move(idx)) {
    if (indices.empty()) throw std::invalid_argument("LatticeVector: t >= 1 required");
    for (int v : indices)
      if (v < 0 || v > 3) throw std::invalid_argument("LatticeVector: index out of range");
  }
  int t() const { return static_cast<int>(indices.size()); }
};

struct GeneralizedBellSpec {
  int d, a, b;
  GeneralizedBellSpec(int d_, int a_, int b_) : d(d_), a(a_), b(b_) {
    if (d < 2) throw std::invalid_argument("GeneralizedBellSpec: d >= 2 required");
    if (a < 0 || a >= d || b < 0 || b >= d)
      throw std::invalid_argument("GeneralizedBellSpec: a,b must lie in Z_d");
  }
};

// A set of k mutually orthogonal density operators with prior
// probabilities. Invariants (PSD, unit trace, orthogonality, priors
// summing to one) are checked by make_instance.
struct DiscriminationInstance {
  int dim_a = 0, dim_b = 0;
  std::vector<HermOp> states;
  std::vector<double> priors;
  std::vector<std::string> labels;
  std::string name;  // builtin name or file stem, for reports

  int k() const { return static_cast<int>(states.size()); }
};

DiscriminationInstance make_instance(int dim_a, int dim_b,
                                     std::vector<HermOp> states,
                                     std::vector<double> priors = {},
                                     std::vector<std::string> labels = {},
                                     std::string name = {});

namespace states {

// sigma_0..sigma_3 (2x2, exact entries)
CMatrix pauli(int i);

// |psi_i> = (1 (x) sigma_i)|psi_0>, |psi_0> = (|00>+|11>)/sqrt(2); 4x1
CMatrix bell_vector(BellIndex i);

// Density operator |psi_i><psi_i| with exact dyadic entries.
HermOp bell_density(BellIndex i);

// The index bijection induced by the partial transpose on Bell
// projectors: 0->2, 1->3, 2->0, 3->1.
BellIndex bell_transpose_index(BellIndex i);

// |psi_{a,b}> = d^{-1/2} sum_j omega^{aj} |j>|j+b>, omega = exp(2 pi i/d)
CMatrix generalized_bell_vector(const GeneralizedBellSpec& spec);

// Sparse entries of the (exact dyadic, real) lattice projector psi_v in
// the canonical A:B ordering.
struct SparseEntry {
  int r, c;
  double v;
};
std::vector<SparseEntry> lattice_projector_sparse(const LatticeVector& v);

HermOp lattice_density(const LatticeVector& v);

// Reorders tensor factors of a 2t-qubit operator given on interleaved
// pairs A1 B1 A2 B2 ... to the canonical A1..At B1..Bt order.
CMatrix interleaved_to_canonical(const CMatrix& m, int t);

bool is_maximally_entangled(const CMatrix& u, int dim_a, int dim_b,
                            double tol);

// Full dephasing in the lattice basis: X -> sum_v <psi_v|X|psi_v> psi_v.
// Requires dim_a == dim_b == 2^t.
HermOp dephase_bell(const HermOp& x);

// Diagonal of x in the lattice basis, indexed by v as a base-4 integer
// (v_1 most significant).
std::vector<double> lattice_diagonal(const HermOp& x);

// If x equals a lattice basis projector psi_v within tol, returns v.
std::optional<LatticeVector> lattice_index_of(const HermOp& x, double tol = 1e-10);

// Builtin example sets: yde4, pow2_n (n >= 3), lattice8, gbell5, gbell6,
// bell_basis.
DiscriminationInstance example_set(const std::string& name);

struct ExampleInfo {
  std::string name;
  int dim = 0, k = 0;
  std::string reference;  // headline value for the set
};
std::vector<ExampleInfo> builtin_examples();

}  // namespace states
}  // namespace pptdiscrim
