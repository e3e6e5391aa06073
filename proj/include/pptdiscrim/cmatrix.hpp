// Dense complex matrices, row-major. The workhorse value type for states,
// measurement operators and solver data.
#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace pptdiscrim {

using cplx = std::complex<double>;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
      throw std::invalid_argument("CMatrix: dimensions must be >= 1");
    a_.assign(static_cast<std::size_t>(rows) * cols, cplx(0.0, 0.0));
  }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMatrix diag(const std::vector<double>& d) {
    CMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  static CMatrix column(const std::vector<cplx>& v) {
    CMatrix m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.a_[i] = v[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  CMatrix dagger() const;
  CMatrix transpose() const;
  CMatrix conj() const;

  cplx trace() const;
  double max_abs() const;
  // max |A - A^dagger| entry
  double hermiticity_defect() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

// Kronecker product; block (i,j) of the result equals a(i,j)*b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Tr(a^dagger b)
cplx hs_dot(const CMatrix& a, const CMatrix& b);

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

}  // namespace pptdiscrim
