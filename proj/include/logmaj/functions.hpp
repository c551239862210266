#pragma once

#include <functional>
#include <string>
#include <vector>

#include "logmaj/eig.hpp"

namespace logmaj {

// How f acts on the numerical kernel (eigenvalues below rank_tol * lambda_1):
//   map_to_zero  -- f(0) := 0, the support convention used for generalized
//                   powers and logarithms
//   apply        -- evaluate f at 0; domain error if f is not finite there
enum class ZeroConvention { map_to_zero, apply };

// U f(diag lambda) U* with the kernel handled per convention.
HermitianMatrix matrix_function(const PsdMatrix& a, const std::function<double(double)>& f,
                                ZeroConvention convention = ZeroConvention::apply,
                                double rank_tolerance = tol::rank);

// Generalized power: 0^p := 0 for p != 0, and A^0 := support projection.
// Negative powers act on the support (generalized inverse).
PsdMatrix matrix_power(const PsdMatrix& a, double p, double rank_tolerance = tol::rank);

// U diag(lambda^z) U* with 0^z := 0. For purely imaginary z and PD input the
// result is unitary.
ComplexMatrix complex_power(const PsdMatrix& a, Complex z, double rank_tolerance = tol::rank);

PdMatrix matrix_exp(const HermitianMatrix& h);
HermitianMatrix matrix_log(const PdMatrix& a);
HermitianMatrix support_log(const PsdMatrix& a, double rank_tolerance = tol::rank);
PsdMatrix matrix_sqrt(const PsdMatrix& a);
PdMatrix matrix_inverse(const PdMatrix& a);

PsdMatrix support_projection(const PsdMatrix& a, double rank_tolerance = tol::rank);

// Orthogonal projection onto range(P) ∩ range(Q): spectral cut of P + Q at
// eigenvalue 2.
PsdMatrix projection_meet(const PsdMatrix& p, const PsdMatrix& q, double tolerance = 1e-8);

Spectrum singular_values(const ComplexMatrix& x);

double schatten_norm(const ComplexMatrix& x, double p);  // p >= 1 or infinity
double operator_norm(const ComplexMatrix& x);
double ky_fan_norm(const ComplexMatrix& x, int k);             // sum of k largest s_i
std::vector<double> ky_fan_products(const ComplexMatrix& x);   // (prod_{i<=k} s_i)_k

// Unitarily invariant norm selector used by the inequality checkers.
struct NormKind {
  enum class Family { schatten, op, ky_fan };
  Family family = Family::schatten;
  double p = 1.0;
  int k = 1;

  static NormKind schatten(double p);
  static NormKind trace() { return schatten(1.0); }
  static NormKind frobenius() { return schatten(2.0); }
  static NormKind op();
  static NormKind ky_fan(int k);

  // "trace", "frobenius", "operator", "schatten:p", "kyfan:k"
  static NormKind parse(const std::string& text);

  bool strictly_increasing() const { return family == Family::schatten; }
  std::string name() const;
  double operator()(const ComplexMatrix& x) const;
};

}  // namespace logmaj
