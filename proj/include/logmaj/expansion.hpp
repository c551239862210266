#pragma once

#include <utility>
#include <vector>

#include "logmaj/means.hpp"

namespace logmaj {

// Taylor data of X(t) = G_w(e^{tH_1},...,e^{tH_n}) around t = 0:
// X(t) = I + t X_1 + t^2 X_2 + ..., Y(t) = X(t)^{1/2}, Z_j(t) = Y e^{-tH_j} Y.
// Index k-1 holds the order-k coefficient.
struct TaylorState {
  int order = 0;
  std::vector<HermitianMatrix> x;
  std::vector<HermitianMatrix> y;
  std::vector<std::vector<HermitianMatrix>> z;  // z[k-1][j]
  std::vector<HermitianMatrix> h_moments;       // sum_j w_j H_j^k
  std::vector<HermitianMatrix> z_sums;          // sum_j w_j Z_{k,j};  zero at k = 1
};

// Recursive coefficients from the Karcher equation; the composition sums grow
// like the partition numbers, so orders above 8 are refused.
TaylorState taylor_recursion(const std::vector<HermitianMatrix>& h, const WeightVector& w, int order);

// Hand-expanded X_1..X_4, Y_1..Y_4; the independent check of the recursion.
struct TaylorClosedForms {
  std::vector<HermitianMatrix> x;  // X_1..X_4
  std::vector<HermitianMatrix> y;  // Y_1..Y_4
};

TaylorClosedForms taylor_closed_forms(const std::vector<HermitianMatrix>& h, const WeightVector& w);

// Central differences with one Richardson step on t -> G_w(e^{tH_j}),
// sampled at t in {0, +-h, ..., +-4h}. Solver-based, independent of the
// recursion.
struct FiniteDifferenceTaylor {
  std::vector<HermitianMatrix> x;      // X^_1..X^_K
  std::vector<double> error_estimate;  // per order, Frobenius
};

FiniteDifferenceTaylor finite_difference_taylor(const std::vector<HermitianMatrix>& h,
                                                const WeightVector& w, int order, double step,
                                                const KarcherConfig& cfg = {});

// Equality-case conditions for the Karcher/Log-Euclidean norm inequality:
//   (a) every A_j commutes with LE_w(A)
//   (b) G_w(A^t) = LE_w(A^t) at t in {+-1, +-t_probe}
//   (c) ||G_w(A^t)|| = ||LE_w(A^t)|| at t = t_probe
//   (d) ||G_w(A^t)^{1/t}|| = ||LE_w(A)|| at t = t_probe
// plus the sampled probe of t -> ||G_w(A^t)^{1/t}|| on a log grid, reported
// as data only (whether that strict-decrease probe implies (a) is open).
struct EqualityCaseReport {
  bool a = false, b = false, c = false, d = false;
  double a_value = 0.0;  // max relative commutator norm
  double b_value = 0.0;  // max Riemannian distance over probed t
  double c_value = 0.0;
  double d_value = 0.0;
  std::vector<std::pair<double, double>> e_probe;  // (t, ||G(A^t)^{1/t}||)
  bool e_not_strictly_decreasing = false;          // some step fails to fall by > tol
  double e_max_increase = 0.0;                     // max of f(t_{i+1}) - f(t_i)
  double e_max_decrease = 0.0;                     // max of f(t_i) - f(t_{i+1})
  double tol = 0.0;
};

EqualityCaseReport equality_case_check(const std::vector<PdMatrix>& a, const WeightVector& w,
                                       const NormKind& norm, double t_probe,
                                       double eq_tol = tol::eq_case, const KarcherConfig& cfg = {});

// (A^{t/2} B^t A^{t/2})^{1/t} -> P0 exp(P0 (log A) P0 + P0 (log B) P0) as
// t -> 0, P0 the meet of the supports; singular inputs allowed.
struct LieTrotterKatoResult {
  PsdMatrix target;
  std::vector<std::pair<double, double>> errors;  // (t, Frobenius error)
};

LieTrotterKatoResult lie_trotter_kato(const PsdMatrix& a, const PsdMatrix& b,
                                      const std::vector<double>& t_sequence);

}  // namespace logmaj
