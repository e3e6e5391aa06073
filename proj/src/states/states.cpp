#include "pptdiscrim/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pptdiscrim {

DiscriminationInstance make_instance(int dim_a, int dim_b,
                                     std::vector<HermOp> states,
                                     std::vector<double> priors,
                                     std::vector<std::string> labels,
                                     std::string name) {
  if (states.empty()) throw std::invalid_argument("instance: no states given");
  const int k = static_cast<int>(states.size());
  for (int j = 0; j < k; ++j) {
    const HermOp& s = states[j];
    if (s.dim_a() != dim_a || s.dim_b() != dim_b)
      throw std::invalid_argument("instance: state " + std::to_string(j + 1) +
                                  " has mismatched dimensions");
    if (std::abs(s.matrix().trace().real() - 1.0) > 1e-10 ||
        std::abs(s.matrix().trace().imag()) > 1e-10)
      throw std::invalid_argument("instance: state " + std::to_string(j + 1) +
                                  " is not normalized (trace != 1)");
    if (!is_psd(s, 1e-10))
      throw std::invalid_argument("instance: state " + std::to_string(j + 1) +
                                  " is not positive semidefinite");
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs(hs_inner(states[i], states[j])) > 1e-10)
        throw std::invalid_argument("instance: states " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) +
                                    " are not orthogonal");
  if (priors.empty()) priors.assign(k, 1.0 / k);
  if (static_cast<int>(priors.size()) != k)
    throw std::invalid_argument("instance: priors length mismatch");
  double sum = 0.0;
  for (double p : priors) {
    if (p < 0.0) throw std::invalid_argument("instance: negative prior");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("instance: priors do not sum to 1");
  if (labels.empty())
    for (int j = 0; j < k; ++j) labels.push_back("state_" + std::to_string(j + 1));
  DiscriminationInstance inst;
  inst.dim_a = dim_a;
  inst.dim_b = dim_b;
  inst.states = std::move(states);
  inst.priors = std::move(priors);
  inst.labels = std::move(labels);
  inst.name = std::move(name);
  return inst;
}

namespace states {

CMatrix pauli(int i) {
  CMatrix m(2, 2);
  switch (i) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli: index out of range");
  }
  return m;
}

namespace {

// sqrt(2) * |psi_i> with exact integer entries
std::array<cplx, 4> bell_unnormalized(int i) {
  switch (i) {
    case 0: return {cplx(1), cplx(0), cplx(0), cplx(1)};
    case 1: return {cplx(0), cplx(1), cplx(1), cplx(0)};
    case 2: return {cplx(0), cplx(0, 1), cplx(0, -1), cplx(0)};
    default: return {cplx(1), cplx(0), cplx(0), cplx(-1)};
  }
}

}  // namespace

CMatrix bell_vector(BellIndex i) {
  const auto w = bell_unnormalized(i.value);
  const double inv = 1.0 / std::sqrt(2.0);
  std::vector<cplx> v(4);
  for (int a = 0; a < 4; ++a) v[a] = inv * w[a];
  return CMatrix::column(v);
}

HermOp bell_density(BellIndex i) {
  const auto w = bell_unnormalized(i.value);
  CMatrix m(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m(a, b) = 0.5 * w[a] * std::conj(w[b]);
  return HermOp(2, 2, std::move(m));
}

BellIndex bell_transpose_index(BellIndex i) {
  static constexpr int f[4] = {2, 3, 0, 1};
  return BellIndex(f[i.value]);
}

CMatrix generalized_bell_vector(const GeneralizedBellSpec& spec) {
  const int d = spec.d;
  std::vector<cplx> v(static_cast<std::size_t>(d) * d, cplx(0.0, 0.0));
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    const int e = (spec.a * j) % d;
    const double phase = 2.0 * std::numbers::pi * e / d;
    v[static_cast<std::size_t>(j) * d + (j + spec.b) % d] =
        inv * cplx(std::cos(phase), std::sin(phase));
  }
  return CMatrix::column(v);
}

namespace {

// canonical bit position of qubit: A_l at l-1, B_l at t+l-1 (0 = most
// significant of the 2t-qubit index)
int canonical_index(const std::vector<int>& abits, const std::vector<int>& bbits) {
  int idx = 0;
  for (int b : abits) idx = (idx << 1) | b;
  for (int b : bbits) idx = (idx << 1) | b;
  return idx;
}

}  // namespace

namespace {

struct FEntry { int p, q; double val; };

// nonzero entries of the four 4x4 Bell projector factors, built once
const std::vector<FEntry>& bell_factor_entries(int i) {
  static const std::array<std::vector<FEntry>, 4> tables = [] {
    std::array<std::vector<FEntry>, 4> t;
    for (int i = 0; i < 4; ++i) {
      const CMatrix m = bell_density(BellIndex(i)).matrix();
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          if (m(p, q) != cplx(0.0, 0.0)) t[i].push_back({p, q, m(p, q).real()});
    }
    return t;
  }();
  return tables[i];
}

}  // namespace

std::vector<SparseEntry> lattice_projector_sparse(const LatticeVector& v) {
  const int t = v.t();
  std::vector<SparseEntry> out;
  out.reserve(std::size_t(1) << (2 * t));
  std::vector<int> pick(t, 0);
  std::vector<int> ra(t), rb(t), ca(t), cb(t);
  for (;;) {
    double val = 1.0;
    for (int l = 0; l < t; ++l) {
      const FEntry& fe = bell_factor_entries(v.indices[l])[pick[l]];
      ra[l] = fe.p >> 1;
      rb[l] = fe.p & 1;
      ca[l] = fe.q >> 1;
      cb[l] = fe.q & 1;
      val *= fe.val;
    }
    out.push_back({canonical_index(ra, rb), canonical_index(ca, cb), val});
    int l = t - 1;
    while (l >= 0 &&
           ++pick[l] == static_cast<int>(bell_factor_entries(v.indices[l]).size()))
      pick[l--] = 0;
    if (l < 0) break;
  }
  return out;
}

HermOp lattice_density(const LatticeVector& v) {
  const int d = 1 << v.t();
  CMatrix m(d * d, d * d);
  for (const SparseEntry& e : lattice_projector_sparse(v)) m(e.r, e.c) = e.v;
  return HermOp(d, d, std::move(m));
}

CMatrix interleaved_to_canonical(const CMatrix& m, int t) {
  const int nq = 2 * t;
  const int n = 1 << nq;
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("interleaved_to_canonical: order mismatch");
  // bit p of the new index comes from bit perm[p] of the old one
  std::vector<int> perm(nq);
  for (int p = 0; p < t; ++p) perm[p] = 2 * p;
  for (int p = t; p < nq; ++p) perm[p] = 2 * (p - t) + 1;
  std::vector<int> newidx(n);
  for (int o = 0; o < n; ++o) {
    int x = 0;
    for (int p = 0; p < nq; ++p)
      x = (x << 1) | ((o >> (nq - 1 - perm[p])) & 1);
    newidx[o] = x;
  }
  CMatrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(newidx[r], newidx[c]) = m(r, c);
  return out;
}

bool is_maximally_entangled(const CMatrix& u, int dim_a, int dim_b, double tol) {
  if (dim_a != dim_b)
    throw std::invalid_argument("is_maximally_entangled: dim_a must equal dim_b");
  if (u.cols() != 1 || u.rows() != dim_a * dim_b)
    throw std::invalid_argument("is_maximally_entangled: vector length mismatch");
  const cplx* v = u.data();
  const double target = 1.0 / dim_a;
  double worst = 0.0;
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j) {
      cplx trb = 0.0, tra = 0.0;
      for (int k = 0; k < dim_b; ++k) {
        trb += v[i * dim_b + k] * std::conj(v[j * dim_b + k]);
        tra += v[k * dim_b + i] * std::conj(v[k * dim_b + j]);
      }
      const double want = (i == j) ? target : 0.0;
      worst = std::max(worst, std::abs(trb - want));
      worst = std::max(worst, std::abs(tra - want));
    }
  return worst <= tol;
}

namespace {

int lattice_t_of(const HermOp& x) {
  if (x.dim_a() != x.dim_b())
    throw std::invalid_argument("lattice basis: dim_a must equal dim_b");
  int d = x.dim_a(), t = 0;
  while (d > 1 && d % 2 == 0) {
    d /= 2;
    ++t;
  }
  if (d != 1 || t < 1)
    throw std::invalid_argument("lattice basis: dimension is not a power of 2");
  return t;
}

LatticeVector decode_v(int code, int t) {
  std::vector<int> idx(t);
  for (int l = t - 1; l >= 0; --l) {
    idx[l] = code & 3;
    code >>= 2;
  }
  return LatticeVector(idx);
}

}  // namespace

std::vector<double> lattice_diagonal(const HermOp& x) {
  const int t = lattice_t_of(x);
  const int nv = 1 << (2 * t);
  const CMatrix& m = x.matrix();
  std::vector<double> lam(nv);
  for (int code = 0; code < nv; ++code) {
    double s = 0.0;
    for (const SparseEntry& e : lattice_projector_sparse(decode_v(code, t)))
      s += e.v * m(e.c, e.r).real();
    lam[code] = s;
  }
  return lam;
}

HermOp dephase_bell(const HermOp& x) {
  const int t = lattice_t_of(x);
  const std::vector<double> lam = lattice_diagonal(x);
  CMatrix out(x.order(), x.order());
  for (int code = 0; code < static_cast<int>(lam.size()); ++code) {
    if (lam[code] == 0.0) continue;
    for (const SparseEntry& e : lattice_projector_sparse(decode_v(code, t)))
      out(e.r, e.c) += lam[code] * e.v;
  }
  return HermOp(x.dim_a(), x.dim_b(), std::move(out));
}

std::optional<LatticeVector> lattice_index_of(const HermOp& x, double tol) {
  int t;
  try {
    t = lattice_t_of(x);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  const std::vector<double> lam = lattice_diagonal(x);
  const int best = static_cast<int>(std::max_element(lam.begin(), lam.end()) - lam.begin());
  if (std::abs(lam[best] - 1.0) > tol) return std::nullopt;
  LatticeVector v = decode_v(best, t);
  if (!approx_equal(x.matrix(), lattice_density(v).matrix(), tol)) return std::nullopt;
  return v;
}

namespace {

DiscriminationInstance lattice_instance(const std::vector<std::vector<int>>& vs,
                                        std::string name) {
  std::vector<HermOp> rho;
  std::vector<std::string> labels;
  for (const auto& v : vs) {
    rho.push_back(lattice_density(LatticeVector(v)));
    std::string l = "psi(";
    for (std::size_t i = 0; i < v.size(); ++i)
      l += (i ? "," : "") + std::to_string(v[i]);
    labels.push_back(l + ")");
  }
  const int d = 1 << static_cast<int>(vs[0].size());
  return make_instance(d, d, std::move(rho), {}, std::move(labels), std::move(name));
}

DiscriminationInstance gbell_instance(int d, const std::vector<std::pair<int, int>>& ab,
                                      std::string name) {
  std::vector<HermOp> rho;
  std::vector<std::string> labels;
  for (auto [a, b] : ab) {
    const CMatrix v = generalized_bell_vector(GeneralizedBellSpec(d, a, b));
    CMatrix m(d * d, d * d);
    for (int r = 0; r < d * d; ++r)
      for (int c = 0; c < d * d; ++c)
        m(r, c) = v(r, 0) * std::conj(v(c, 0));
    rho.emplace_back(d, d, std::move(m));
    labels.push_back("psi(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return make_instance(d, d, std::move(rho), {}, std::move(labels), std::move(name));
}

// first 2^n elements, lexicographic, of {1,2,3}^(n-1), each prefixed by 0
std::vector<std::vector<int>> pow2_vectors(int n) {
  std::vector<std::vector<int>> out;
  const int total = 1 << n;
  std::vector<int> w(n - 1, 1);
  while (static_cast<int>(out.size()) < total) {
    std::vector<int> v{0};
    v.insert(v.end(), w.begin(), w.end());
    out.push_back(std::move(v));
    int l = n - 2;
    while (l >= 0 && ++w[l] == 4) w[l--] = 1;
  }
  return out;
}

}  // namespace

DiscriminationInstance example_set(const std::string& name) {
  if (name == "yde4")
    return lattice_instance({{0, 0}, {1, 3}, {2, 3}, {3, 3}}, "yde4");
  if (name == "bell_basis")
    return lattice_instance({{0}, {1}, {2}, {3}}, "bell_basis");
  if (name == "lattice8")
    // Frozen index convention: the published 1-based labels shifted by
    // i -> i-1 (see regression test for the convention-selection record).
    return lattice_instance({{0, 0, 0}, {0, 0, 2}, {0, 0, 3}, {1, 1, 1},
                             {2, 2, 0}, {2, 2, 2}, {2, 2, 3}, {3, 1, 1}},
                            "lattice8");
  if (name == "gbell5")
    return gbell_instance(5, {{0, 0}, {1, 1}, {2, 1}, {1, 3}, {2, 3}}, "gbell5");
  if (name == "gbell6")
    return gbell_instance(6, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 3}},
                          "gbell6");
  if (name.rfind("pow2_", 0) == 0 || name.rfind("pow2(", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(5));
    } catch (...) {
      throw std::invalid_argument("example_set: cannot parse " + name);
    }
    if (n < 3) throw std::invalid_argument("example_set: pow2 requires n >= 3");
    if (n > 4)
      throw std::invalid_argument(
          "example_set: pow2 with n > 4 exceeds the supported operator order");
    return lattice_instance(pow2_vectors(n), "pow2_" + std::to_string(n));
  }
  throw std::invalid_argument("example_set: unknown set '" + name + "'");
}

std::vector<ExampleInfo> builtin_examples() {
  return {
      {"bell_basis", 2, 4, "PPT optimum 1/2 (= d/k bound)"},
      {"yde4", 4, 4, "PPT optimum 7/8, unambiguous 3/4"},
      {"pow2_3", 8, 8, "PPT optimum <= 31/32 (certificate bound 1 - 2/k^2)"},
      {"pow2_4", 16, 16, "PPT optimum <= 127/128 (certificate bound 1 - 2/k^2)"},
      {"lattice8", 8, 8, "PPT optimum <= 15/16 (published bound)"},
      {"gbell5", 5, 5, "min-error PPT error >= 0.0101"},
      {"gbell6", 6, 6, "min-error PPT error >= 0.002"},
  };
}

}  // namespace states
}  // namespace pptdiscrim
