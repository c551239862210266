#pragma once

#include <vector>

#include "logmaj/matrix.hpp"
#include "logmaj/tolerances.hpp"

namespace logmaj {

// Real values sorted non-increasingly, with multiplicity. Carries both
// eigenvalue and singular-value sets.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);  // sorts decreasingly

  int size() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[static_cast<size_t>(i)]; }
  const std::vector<double>& values() const { return v_; }
  double max() const { return v_.front(); }
  double min() const { return v_.back(); }

 private:
  std::vector<double> v_;
};

struct EigResult {
  Spectrum values;        // decreasing
  ComplexMatrix vectors;  // unitary, columns match values
};

// Cyclic complex Jacobi on a Hermitian matrix. Input must already be exactly
// Hermitian (use hermitian_part first if in doubt). Stops when
// off(A) <= tol::jacobi_off * ||A||_F; throws after tol::jacobi_max_sweeps
// sweeps with the remaining off-diagonal norm in the message.
EigResult jacobi_eig(const ComplexMatrix& hermitian);

// Hermitian matrix: validated on construction, then symmetrized exactly.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& a, double tolerance = tol::hermitian);

  int dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

// PSD matrix with its eigendecomposition cached. Eigenvalues are clamped at
// zero (inputs may dip to -psd_tol from roundoff); the support cut used by
// generalized powers and support projections is rank_tol * lambda_1, so all
// "support" semantics depend on that threshold.
class PsdMatrix {
 public:
  explicit PsdMatrix(const HermitianMatrix& a, double psd_tolerance = tol::psd);
  explicit PsdMatrix(const ComplexMatrix& a, double psd_tolerance = tol::psd);

  // Direct spectral form; values may be unsorted, must be >= 0.
  static PsdMatrix from_factors(const ComplexMatrix& unitary, const std::vector<double>& values);

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& matrix() const { return mat_.matrix(); }
  const HermitianMatrix& hermitian() const { return mat_; }
  const Spectrum& eigenvalues() const { return eig_; }
  const ComplexMatrix& eigenvectors() const { return u_; }

  double trace() const { return mat_.trace(); }

  // eigenvalue index cut for the numerical support
  int rank(double rank_tolerance = tol::rank) const;
  bool is_pd(double floor_rel = tol::rank) const;
  double condition_number() const;  // +inf when singular

 private:
  PsdMatrix(HermitianMatrix mat, Spectrum eig, ComplexMatrix u);

  HermitianMatrix mat_;
  Spectrum eig_;
  ComplexMatrix u_;
};

// Positive definite: smallest eigenvalue must clear rank_tol * lambda_1.
class PdMatrix : public PsdMatrix {
 public:
  explicit PdMatrix(const PsdMatrix& a);
  explicit PdMatrix(const HermitianMatrix& a);
  explicit PdMatrix(const ComplexMatrix& a);
};

}  // namespace logmaj
