#include "pptdiscrim/hermop.hpp"

#include <algorithm>
#include <cmath>

#include "pptdiscrim/eig.hpp"

namespace pptdiscrim {

HermOp::HermOp(int dim_a, int dim_b, CMatrix m)
    : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(m)) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("HermOp: dimensions must be >= 1");
  const int n = dim_a * dim_b;
  if (mat_.rows() != n || mat_.cols() != n)
    throw std::invalid_argument("HermOp: matrix order must be dim_a*dim_b");
  const double scale = std::max(mat_.max_abs(), 0.0);
  if (mat_.hermiticity_defect() > 1e-12 * std::max(1.0, scale))
    throw std::invalid_argument("HermOp: matrix is not Hermitian");
}

HermOp& HermOp::operator+=(const HermOp& o) {
  if (dim_a_ != o.dim_a_ || dim_b_ != o.dim_b_)
    throw std::invalid_argument("HermOp: dimension mismatch");
  mat_ += o.mat_;
  return *this;
}

HermOp& HermOp::operator-=(const HermOp& o) {
  if (dim_a_ != o.dim_a_ || dim_b_ != o.dim_b_)
    throw std::invalid_argument("HermOp: dimension mismatch");
  mat_ -= o.mat_;
  return *this;
}

HermOp& HermOp::operator*=(double s) {
  mat_ *= cplx(s, 0.0);
  return *this;
}

HermOp partial_transpose(const HermOp& x) {
  const int da = x.dim_a(), db = x.dim_b();
  const CMatrix& m = x.matrix();
  CMatrix out(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l)
          out(j * db + k, i * db + l) = m(i * db + k, j * db + l);
  return HermOp(da, db, std::move(out));
}

CMatrix partial_trace(const HermOp& x, Subsystem over) {
  const int da = x.dim_a(), db = x.dim_b();
  const CMatrix& m = x.matrix();
  if (over == Subsystem::A) {
    CMatrix out(db, db);
    for (int k = 0; k < db; ++k)
      for (int l = 0; l < db; ++l) {
        cplx s = 0.0;
        for (int i = 0; i < da; ++i) s += m(i * db + k, i * db + l);
        out(k, l) = s;
      }
    return out;
  }
  CMatrix out(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
      out(i, j) = s;
    }
  return out;
}

double hs_inner(const HermOp& a, const HermOp& b) {
  if (a.dim_a() != b.dim_a() || a.dim_b() != b.dim_b())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  const cplx s = hs_dot(a.matrix(), b.matrix());
  if (std::abs(s.imag()) > 1e-10)
    throw std::runtime_error("hs_inner: imaginary residue above 1e-10");
  return s.real();
}

std::vector<double> eigvals_hermitian(const HermOp& x) {
  const int n = x.order();
  const CMatrix& m = x.matrix();
  // real embedding [[Re, -Im], [Im, Re]]; spectrum is doubled
  std::vector<double> emb(static_cast<std::size_t>(2 * n) * (2 * n));
  auto at = [&](int i, int j) -> double& {
    return emb[static_cast<std::size_t>(i) * 2 * n + j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx v = m(i, j);
      at(i, j) = v.real();
      at(n + i, n + j) = v.real();
      at(i, n + j) = -v.imag();
      at(n + i, j) = v.imag();
    }
  std::vector<double> w = sym_eigvals(emb.data(), 2 * n, 2 * n);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = 0.5 * (w[2 * i] + w[2 * i + 1]);
  return out;
}

double min_eigval(const HermOp& x) { return eigvals_hermitian(x).front(); }

bool is_psd(const HermOp& x, double tol) {
  return min_eigval(x) >= -tol * std::max(1.0, x.matrix().max_abs());
}

HermOp symmetrized(int dim_a, int dim_b, const CMatrix& m) {
  CMatrix h = m;
  h += m.dagger();
  h *= cplx(0.5, 0.0);
  return HermOp(dim_a, dim_b, std::move(h));
}

}  // namespace pptdiscrim
