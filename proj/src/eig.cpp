#include "logmaj/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace logmaj {

Spectrum::Spectrum(std::vector<double> values) : v_(std::move(values)) {
  if (v_.empty()) throw std::invalid_argument("Spectrum: empty value list");
  for (double x : v_)
    if (!std::isfinite(x)) throw std::invalid_argument("Spectrum: non-finite value");
  std::sort(v_.begin(), v_.end(), std::greater<double>());
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult jacobi_eig(const ComplexMatrix& hermitian) {
  const int m = hermitian.dim();
  ComplexMatrix a = hermitian;
  ComplexMatrix v = ComplexMatrix::identity(m);

  const double scale = a.frobenius_norm();
  const double threshold = tol::jacobi_off * (scale > 0.0 ? scale : 1.0);

  if (m > 1) {
    bool converged = false;
    for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
      if (off_diagonal_norm(a) <= threshold) {
        converged = true;
        break;
      }
      for (int p = 0; p < m - 1; ++p) {
        for (int q = p + 1; q < m; ++q) {
          const Complex beta = a(p, q);
          const double ab = std::abs(beta);
          if (ab == 0.0) continue;
          const Complex u = beta / ab;  // e^{i phi}

          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * ab);
          const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;

          // columns p,q for rows outside the pivot pair, mirrored to keep
          // the matrix exactly Hermitian
          for (int i = 0; i < m; ++i) {
            if (i == p || i == q) continue;
            const Complex vp = a(i, p);
            const Complex vq = a(i, q);
            a(i, p) = c * vp - s * std::conj(u) * vq;
            a(i, q) = s * u * vp + c * vq;
            a(p, i) = std::conj(a(i, p));
            a(q, i) = std::conj(a(i, q));
          }
          a(p, p) = app - t * ab;
          a(q, q) = aqq + t * ab;
          a(p, q) = 0.0;
          a(q, p) = 0.0;

          for (int i = 0; i < m; ++i) {
            const Complex vp = v(i, p);
            const Complex vq = v(i, q);
            v(i, p) = c * vp - s * std::conj(u) * vq;
            v(i, q) = s * u * vp + c * vq;
          }
        }
      }
    }
    if (!converged && off_diagonal_norm(a) > threshold)
      throw std::runtime_error("jacobi_eig: no convergence after " +
                               std::to_string(tol::jacobi_max_sweeps) +
                               " sweeps, off-diagonal norm " +
                               std::to_string(off_diagonal_norm(a)));
  }

  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  std::vector<double> values(static_cast<size_t>(m));
  ComplexMatrix vectors(m);
  for (int k = 0; k < m; ++k) {
    values[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
    for (int i = 0; i < m; ++i) vectors(i, k) = v(i, order[static_cast<size_t>(k)]);
  }
  return EigResult{Spectrum(std::move(values)), std::move(vectors)};
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a, double tolerance) : m_(a.dim()) {
  if (!a.is_finite()) throw std::invalid_argument("HermitianMatrix: non-finite entries");
  const double dev = (a - a.adjoint()).frobenius_norm();
  if (dev > tolerance * (1.0 + a.frobenius_norm()))
    throw std::invalid_argument("HermitianMatrix: deviation from Hermitian " + std::to_string(dev) +
                                " exceeds tolerance");
  m_ = hermitian_part(a);
}

PsdMatrix::PsdMatrix(HermitianMatrix mat, Spectrum eig, ComplexMatrix u)
    : mat_(std::move(mat)), eig_(std::move(eig)), u_(std::move(u)) {}

PsdMatrix::PsdMatrix(const HermitianMatrix& a, double psd_tolerance)
    : mat_(a), eig_(), u_(a.dim()) {
  EigResult e = jacobi_eig(a.matrix());
  const double scale = std::max(1.0, e.values.max());
  std::vector<double> vals = e.values.values();
  for (double& x : vals) {
    if (x < -psd_tolerance * scale)
      throw std::domain_error("PsdMatrix: eigenvalue " + std::to_string(x) + " below -psd_tol");
    if (x < 0.0) x = 0.0;
  }
  eig_ = Spectrum(std::move(vals));
  u_ = std::move(e.vectors);
}

PsdMatrix::PsdMatrix(const ComplexMatrix& a, double psd_tolerance)
    : PsdMatrix(HermitianMatrix(a), psd_tolerance) {}

PsdMatrix PsdMatrix::from_factors(const ComplexMatrix& unitary, const std::vector<double>& values) {
  const int m = unitary.dim();
  if (static_cast<int>(values.size()) != m)
    throw std::invalid_argument("PsdMatrix::from_factors: value count mismatch");
  for (double x : values)
    if (!(x >= 0.0)) throw std::domain_error("PsdMatrix::from_factors: negative eigenvalue");

  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&values](int i, int j) {
    return values[static_cast<size_t>(i)] > values[static_cast<size_t>(j)];
  });

  std::vector<double> sorted(static_cast<size_t>(m));
  ComplexMatrix u(m);
  for (int k = 0; k < m; ++k) {
    sorted[static_cast<size_t>(k)] = values[static_cast<size_t>(order[static_cast<size_t>(k)])];
    for (int i = 0; i < m; ++i) u(i, k) = unitary(i, order[static_cast<size_t>(k)]);
  }

  ComplexMatrix rebuilt(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < m; ++k) acc += u(i, k) * sorted[static_cast<size_t>(k)] * std::conj(u(j, k));
      rebuilt(i, j) = acc;
    }
  return PsdMatrix(HermitianMatrix(hermitian_part(rebuilt)), Spectrum(std::move(sorted)), std::move(u));
}

int PsdMatrix::rank(double rank_tolerance) const {
  const double cut = rank_tolerance * eig_.max();
  int r = 0;
  for (int i = 0; i < eig_.size(); ++i)
    if (eig_[i] > cut) ++r;
  return r;
}

bool PsdMatrix::is_pd(double floor_rel) const {
  return eig_.min() > floor_rel * std::max(eig_.max(), 0.0) && eig_.min() > 0.0;
}

double PsdMatrix::condition_number() const {
  if (eig_.min() <= 0.0) return std::numeric_limits<double>::infinity();
  return eig_.max() / eig_.min();
}

PdMatrix::PdMatrix(const PsdMatrix& a) : PsdMatrix(a) {
  if (!is_pd())
    throw std::domain_error("PdMatrix: singular input (smallest eigenvalue " +
                            std::to_string(eigenvalues().min()) + ")");
}

PdMatrix::PdMatrix(const HermitianMatrix& a) : PdMatrix(PsdMatrix(a)) {}
PdMatrix::PdMatrix(const ComplexMatrix& a) : PdMatrix(PsdMatrix(a)) {}

}  // namespace logmaj
