#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace logmaj {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. The universal carrier for the
// whole library; sizes stay small (m <= ~64), so no blocking or views.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), a_(static_cast<size_t>(dim) * dim) {}

  ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(check_dim(dim)), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(dim_) * dim_)
      throw std::invalid_argument("ComplexMatrix: entry count does not match dim*dim");
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  const std::vector<Complex>& entries() const { return a_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex c);

 private:
  static int check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
    return dim;
  }

  int dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, ComplexMatrix a);
ComplexMatrix operator*(double c, ComplexMatrix a);

// AB - BA
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// (A + A*)/2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

// block-diagonal [A 0; 0 B]
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

// det(A); Laplace expansion for dim <= 4, partial-pivot LU above
Complex determinant(const ComplexMatrix& a);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace logmaj
