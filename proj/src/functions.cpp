#include "logmaj/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logmaj {

namespace {

ComplexMatrix assemble(const ComplexMatrix& u, const std::vector<Complex>& d) {
  const int m = u.dim();
  ComplexMatrix r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < m; ++k) acc += u(i, k) * d[static_cast<size_t>(k)] * std::conj(u(j, k));
      r(i, j) = acc;
    }
  return r;
}

ComplexMatrix assemble(const ComplexMatrix& u, const std::vector<double>& d) {
  std::vector<Complex> dc(d.begin(), d.end());
  return assemble(u, dc);
}

}  // namespace

HermitianMatrix matrix_function(const PsdMatrix& a, const std::function<double(double)>& f,
                                ZeroConvention convention, double rank_tolerance) {
  const Spectrum& lam = a.eigenvalues();
  const double cut = rank_tolerance * lam.max();
  std::vector<double> mapped(static_cast<size_t>(lam.size()));
  for (int i = 0; i < lam.size(); ++i) {
    const double x = lam[i];
    double y;
    if (x <= cut) {
      if (convention == ZeroConvention::map_to_zero) {
        y = 0.0;
      } else {
        y = f(0.0);
        if (!std::isfinite(y)) throw std::domain_error("matrix_function: f undefined at eigenvalue 0");
      }
    } else {
      y = f(x);
      if (!std::isfinite(y))
        throw std::domain_error("matrix_function: f undefined at eigenvalue " + std::to_string(x));
    }
    mapped[static_cast<size_t>(i)] = y;
  }
  return HermitianMatrix(hermitian_part(assemble(a.eigenvectors(), mapped)));
}

PsdMatrix matrix_power(const PsdMatrix& a, double p, double rank_tolerance) {
  const Spectrum& lam = a.eigenvalues();
  const double cut = rank_tolerance * lam.max();
  std::vector<double> mapped(static_cast<size_t>(lam.size()));
  for (int i = 0; i < lam.size(); ++i) {
    const double x = lam[i];
    mapped[static_cast<size_t>(i)] = x <= cut ? 0.0 : (p == 0.0 ? 1.0 : std::pow(x, p));
  }
  return PsdMatrix::from_factors(a.eigenvectors(), mapped);
}

ComplexMatrix complex_power(const PsdMatrix& a, Complex z, double rank_tolerance) {
  const Spectrum& lam = a.eigenvalues();
  const double cut = rank_tolerance * lam.max();
  std::vector<Complex> mapped(static_cast<size_t>(lam.size()));
  for (int i = 0; i < lam.size(); ++i) {
    const double x = lam[i];
    mapped[static_cast<size_t>(i)] = x <= cut ? Complex(0.0) : std::exp(z * std::log(x));
  }
  return assemble(a.eigenvectors(), mapped);
}

PdMatrix matrix_exp(const HermitianMatrix& h) {
  EigResult e = jacobi_eig(h.matrix());
  std::vector<double> mapped(static_cast<size_t>(e.values.size()));
  for (int i = 0; i < e.values.size(); ++i) mapped[static_cast<size_t>(i)] = std::exp(e.values[i]);
  return PdMatrix(PsdMatrix::from_factors(e.vectors, mapped));
}

HermitianMatrix matrix_log(const PdMatrix& a) {
  return matrix_function(a, [](double x) { return std::log(x); }, ZeroConvention::apply);
}

HermitianMatrix support_log(const PsdMatrix& a, double rank_tolerance) {
  return matrix_function(a, [](double x) { return std::log(x); }, ZeroConvention::map_to_zero,
                         rank_tolerance);
}

PsdMatrix matrix_sqrt(const PsdMatrix& a) { return matrix_power(a, 0.5); }

PdMatrix matrix_inverse(const PdMatrix& a) { return PdMatrix(matrix_power(a, -1.0)); }

PsdMatrix support_projection(const PsdMatrix& a, double rank_tolerance) {
  const Spectrum& lam = a.eigenvalues();
  const double cut = rank_tolerance * lam.max();
  std::vector<double> mapped(static_cast<size_t>(lam.size()));
  for (int i = 0; i < lam.size(); ++i) mapped[static_cast<size_t>(i)] = lam[i] > cut ? 1.0 : 0.0;
  return PsdMatrix::from_factors(a.eigenvectors(), mapped);
}

PsdMatrix projection_meet(const PsdMatrix& p, const PsdMatrix& q, double tolerance) {
  require_same_dim(p.matrix(), q.matrix(), "projection_meet");
  for (const PsdMatrix* pr : {&p, &q}) {
    const ComplexMatrix& m = pr->matrix();
    if ((m * m - m).frobenius_norm() > tolerance * (1.0 + m.frobenius_norm()))
      throw std::invalid_argument("projection_meet: input is not an orthogonal projection");
  }
  EigResult e = jacobi_eig((p.matrix() + q.matrix()));
  std::vector<double> mapped(static_cast<size_t>(e.values.size()));
  for (int i = 0; i < e.values.size(); ++i)
    mapped[static_cast<size_t>(i)] = e.values[i] > 2.0 - tolerance ? 1.0 : 0.0;
  return PsdMatrix::from_factors(e.vectors, mapped);
}

Spectrum singular_values(const ComplexMatrix& x) {
  EigResult e = jacobi_eig(hermitian_part(x.adjoint() * x));
  std::vector<double> s(static_cast<size_t>(e.values.size()));
  for (int i = 0; i < e.values.size(); ++i) s[static_cast<size_t>(i)] = std::sqrt(std::max(e.values[i], 0.0));
  return Spectrum(std::move(s));
}

double schatten_norm(const ComplexMatrix& x, double p) {
  if (std::isinf(p)) return operator_norm(x);
  if (p < 1.0) throw std::invalid_argument("schatten_norm: p >= 1 required");
  const Spectrum s = singular_values(x);
  double acc = 0.0;
  for (int i = 0; i < s.size(); ++i) acc += std::pow(s[i], p);
  return std::pow(acc, 1.0 / p);
}

double operator_norm(const ComplexMatrix& x) { return singular_values(x).max(); }

double ky_fan_norm(const ComplexMatrix& x, int k) {
  if (k < 1 || k > x.dim()) throw std::invalid_argument("ky_fan_norm: k out of range");
  const Spectrum s = singular_values(x);
  double acc = 0.0;
  for (int i = 0; i < k; ++i) acc += s[i];
  return acc;
}

std::vector<double> ky_fan_products(const ComplexMatrix& x) {
  const Spectrum s = singular_values(x);
  std::vector<double> prods(static_cast<size_t>(s.size()));
  double acc = 1.0;
  for (int i = 0; i < s.size(); ++i) {
    acc *= s[i];
    prods[static_cast<size_t>(i)] = acc;
  }
  return prods;
}

NormKind NormKind::schatten(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("NormKind: Schatten p >= 1 required");
  NormKind n;
  n.family = Family::schatten;
  n.p = p;
  return n;
}

NormKind NormKind::op() {
  NormKind n;
  n.family = Family::op;
  return n;
}

NormKind NormKind::ky_fan(int k) {
  if (k < 1) throw std::invalid_argument("NormKind: Ky Fan k >= 1 required");
  NormKind n;
  n.family = Family::ky_fan;
  n.k = k;
  return n;
}

NormKind NormKind::parse(const std::string& text) {
  if (text == "trace") return trace();
  if (text == "frobenius") return frobenius();
  if (text == "operator") return op();
  if (text.rfind("schatten:", 0) == 0) return schatten(std::stod(text.substr(9)));
  if (text.rfind("kyfan:", 0) == 0) return ky_fan(std::stoi(text.substr(6)));
  throw std::invalid_argument("NormKind: unknown norm '" + text + "'");
}

std::string NormKind::name() const {
  switch (family) {
    case Family::schatten:
      if (p == 1.0) return "trace";
      if (p == 2.0) return "frobenius";
      return "schatten:" + std::to_string(p);
    case Family::op:
      return "operator";
    case Family::ky_fan:
      return "kyfan:" + std::to_string(k);
  }
  return "?";
}

double NormKind::operator()(const ComplexMatrix& x) const {
  switch (family) {
    case Family::schatten:
      return schatten_norm(x, p);
    case Family::op:
      return operator_norm(x);
    case Family::ky_fan:
      return ky_fan_norm(x, std::min(k, x.dim()));
  }
  return 0.0;
}

}  // namespace logmaj
