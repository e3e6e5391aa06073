#include "pptdiscrim/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace pptdiscrim {

namespace {
void check_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("CMatrix: shape mismatch");
}
}  // namespace

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix: product shape mismatch");
  CMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int p = 0; p < a.cols(); ++p) {
      const cplx aip = a(i, p);
      if (aip == cplx(0.0, 0.0)) continue;
      const cplx* bp = b.data() + static_cast<std::size_t>(p) * b.cols();
      cplx* ci = c.data() + static_cast<std::size_t>(i) * c.cols();
      for (int j = 0; j < b.cols(); ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

CMatrix CMatrix::dagger() const {
  CMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix t(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) t.a_[i] = std::conj(a_[i]);
  return t;
}

cplx CMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("CMatrix: trace of non-square");
  cplx s = 0.0;
  for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::hermiticity_defect() const {
  if (rows_ != cols_) return max_abs();
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::int64_t r = std::int64_t(a.rows()) * b.rows();
  const std::int64_t c = std::int64_t(a.cols()) * b.cols();
  if (r > (1 << 20) || c > (1 << 20))
    throw std::overflow_error("kron: product order too large");
  CMatrix out(static_cast<int>(r), static_cast<int>(c));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

cplx hs_dot(const CMatrix& a, const CMatrix& b) {
  check_same_shape(a, b);
  cplx s = 0.0;
  const cplx* pa = a.data();
  const cplx* pb = b.data();
  const std::size_t n = static_cast<std::size_t>(a.rows()) * a.cols();
  for (std::size_t i = 0; i < n; ++i) s += std::conj(pa[i]) * pb[i];
  return s;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m <= tol;
}

}  // namespace pptdiscrim
