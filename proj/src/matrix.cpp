#include "logmaj/matrix.hpp"

#include <cmath>

namespace logmaj {

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double s = 0.0;
  for (const Complex& v : a_) s = std::max(s, std::abs(v));
  return s;
}

bool ComplexMatrix::is_finite() const {
  for (const Complex& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex c) {
  for (Complex& v : a_) v *= c;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const int m = a.dim();
  ComplexMatrix r(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < m; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix operator*(Complex c, ComplexMatrix a) { return a *= c; }
ComplexMatrix operator*(double c, ComplexMatrix a) { return a *= Complex(c, 0.0); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return r;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) r(a.dim() + i, a.dim() + j) = b(i, j);
  return r;
}

namespace {

Complex det_laplace(const ComplexMatrix& a) {
  const int m = a.dim();
  if (m == 1) return a(0, 0);
  if (m == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Complex det = 0.0;
  double sign = 1.0;
  for (int j = 0; j < m; ++j) {
    ComplexMatrix minor(m - 1);
    for (int r = 1; r < m; ++r) {
      int cc = 0;
      for (int c = 0; c < m; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    det += sign * a(0, j) * det_laplace(minor);
    sign = -sign;
  }
  return det;
}

Complex det_lu(ComplexMatrix a) {
  const int m = a.dim();
  Complex det = 1.0;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < m; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < m; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < m; ++i) {
      const Complex f = a(i, k) / a(k, k);
      for (int j = k + 1; j < m; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace

Complex determinant(const ComplexMatrix& a) {
  return a.dim() <= 4 ? det_laplace(a) : det_lu(a);
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace logmaj
