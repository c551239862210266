#pragma once

#include <vector>

#include "logmaj/majorization.hpp"

namespace logmaj {

// Probability vector with strictly positive weights.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  static WeightVector uniform(int n);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[static_cast<size_t>(i)]; }
  const std::vector<double>& weights() const { return w_; }

 private:
  std::vector<double> w_;
};

// A #_alpha B = A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}
PdMatrix geometric_mean_two(const PdMatrix& a, const PdMatrix& b, double alpha);

// geodesic distance of the trace metric: || log lambda(A^{-1/2} B A^{-1/2}) ||_2
double riemannian_distance(const PdMatrix& a, const PdMatrix& b);

// sum_j w_j log(X^{1/2} A_j^{-1} X^{1/2}); vanishes exactly at the Karcher mean
HermitianMatrix karcher_field(const PdMatrix& x, const std::vector<PdMatrix>& a,
                              const WeightVector& w);

struct KarcherConfig {
  double tol = tol::karcher;  // Frobenius norm of the field
  int max_iter = 3000;        // plain fixed point is linear; spread families need room
  double max_condition = tol::max_condition;
};

struct KarcherSolveResult {
  PdMatrix mean;
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> residual_history;
};

// Fixed point X <- X^{1/2} exp(-s * field(X)) X^{1/2}, s halved on residual
// increase, initialized at the Log-Euclidean mean.
KarcherSolveResult karcher_mean(const std::vector<PdMatrix>& a, const WeightVector& w,
                                const KarcherConfig& cfg = {});

// exp(sum_j w_j log A_j)
PdMatrix log_euclidean_mean(const std::vector<PdMatrix>& a, const WeightVector& w);

struct PowerMeanConfig {
  double tol = tol::power_mean;
  int max_iter = 20000;
  double max_condition = tol::max_condition;
};

// Unique solution of sum_j w_j (X #_t A_j) = X for t in (0,1]; t in [-1,0)
// through the inverse duality. t = 0 excluded (that limit is the Karcher mean).
PdMatrix power_mean(const std::vector<PdMatrix>& a, const WeightVector& w, double t,
                    const PowerMeanConfig& cfg = {});

struct PowerMajorizationChecks {
  MajorizationReport power_pair;   // G(A^p)^{1/p} vs G(A^q)^{1/q}
  MajorizationReport le_envelope;  // G(A^p)^{1/p} vs LE(A)
};

// Log-majorization of rescaled Karcher means, 0 < q <= p, plus the
// Log-Euclidean upper envelope.
PowerMajorizationChecks karcher_power_majorization(const std::vector<PdMatrix>& a,
                                                   const WeightVector& w, double p, double q,
                                                   double tolerance = tol::majorization,
                                                   const KarcherConfig& cfg = {});

struct LieTrotterRow {
  double q = 0.0;
  double distance = 0.0;  // delta(G(A^q)^{1/q}, LE(A))
};

// G(A^q)^{1/q} -> LE(A) as q -> 0
std::vector<LieTrotterRow> lie_trotter_scan(const std::vector<PdMatrix>& a, const WeightVector& w,
                                            const std::vector<double>& q_sequence,
                                            const KarcherConfig& cfg = {});

}  // namespace logmaj
