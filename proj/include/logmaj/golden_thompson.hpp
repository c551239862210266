#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logmaj/majorization.hpp"

namespace logmaj {

// Density of the beta_theta probability measure on R:
//   sin(pi theta) / (2 theta (cosh(pi t) + cos(pi theta)))   for theta in (0,1)
//   pi / (2 (cosh(pi t) + 1))                                 at theta = 0 (limit)
// Even in t, strictly positive, tails ~ pi e^{-pi|t|}.
double beta_density(double theta, double t);

// Composite Gauss-Legendre discretization of beta_theta on [-T, T], T chosen
// from the exponential tail bound so the missed mass stays below the target.
struct BetaQuadrature {
  double theta = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;  // panel weight * density, sums to ~1
  double truncation = 0.0;      // T
  double tail_bound = 0.0;
  double target_eps = 0.0;
  int panel_order = 16;

  double mass() const;
};

BetaQuadrature build_quadrature(double theta, double eps, int panel_order = 16);

// Gauss-Legendre nodes/weights on [-1,1] (Newton on the Legendre recurrence).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct GtReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs - lhs, >= -tol when the inequality holds
  double r = 0.0;
  double quadrature_eps = 0.0;
  double quadrature_mass = 0.0;
  std::optional<MajorizationReport> log_majorization;
};

// Tr exp(r sum H_j) <= integral of Tr |prod_j e^{(1+it)H_j}|^r d beta_0(t).
// Optionally records each node's integrand value.
GtReport gt_check(const std::vector<HermitianMatrix>& h, double r, const BetaQuadrature& quad,
                  std::vector<std::pair<double, double>>* node_values = nullptr);

// log lambda(|prod_j A_j^theta|^{1/theta}) majorized (additively, with total
// equality) by the beta_theta average of log lambda(|prod_j A_j^{1+it}|),
// A_j = e^{H_j}. Quadrature theta must match.
MajorizationReport gt_log_majorization(const std::vector<HermitianMatrix>& h, double theta,
                                       const BetaQuadrature& quad, double tolerance);

// Block-diagonal triple H oplus H, (-H) oplus (-K), K oplus K built from a
// non-commuting pair: no pair, partial sum, or total sum commutes, yet the
// multivariate trace inequality is saturated for every r > 0.
struct BlockTriple {
  HermitianMatrix h1, h2, h3;
  std::vector<std::pair<std::string, double>> commutator_norms;
  double min_commutator_norm = 0.0;
};

BlockTriple equality_block_triple(const HermitianMatrix& h, const HermitianMatrix& k);

}  // namespace logmaj
