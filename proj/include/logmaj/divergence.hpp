#pragma once

#include <vector>

#include "logmaj/functions.hpp"

namespace logmaj {

// Unnormalized state: PSD with positive trace; support projection cached.
class State {
 public:
  explicit State(PsdMatrix rho);

  const PsdMatrix& matrix() const { return rho_; }
  double trace() const { return trace_; }
  const PsdMatrix& support() const { return support_; }
  int dim() const { return rho_.dim(); }

 private:
  PsdMatrix rho_;
  double trace_;
  PsdMatrix support_;
};

enum class SupportRelation { contained, overlap, orthogonal };

// Extended-real divergence value; +inf is first class, never a sentinel
// inside formulas.
struct DivergenceValue {
  double value = 0.0;
  bool finite = true;
  SupportRelation support_relation = SupportRelation::contained;

  static DivergenceValue infinite(SupportRelation rel);
  static DivergenceValue of(double v, SupportRelation rel);
};

SupportRelation support_relation(const State& rho, const State& sigma,
                                 double rank_tolerance = tol::rank);

// Q_{alpha,z} = Tr (rho^{alpha/2z} sigma^{(1-alpha)/z} rho^{alpha/2z})^z with
// generalized powers; +inf when alpha > 1 and supp(rho) not within supp(sigma).
DivergenceValue q_alpha_z(const State& rho, const State& sigma, double alpha, double z);

// D_{alpha,z} = log(Q_{alpha,z} / Tr rho) / (alpha - 1); alpha = 1 is served
// by d1_normalized.
DivergenceValue d_alpha_z(const State& rho, const State& sigma, double alpha, double z);

// Umegaki relative entropy Tr rho (log rho - log sigma) on supports.
DivergenceValue umegaki(const State& rho, const State& sigma);
DivergenceValue d1_normalized(const State& rho, const State& sigma);

struct ScanRow {
  double alpha = 0.0;
  double z = 0.0;
  double value = 0.0;
  bool finite = true;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  bool monotone = false;
  bool straddle_ok = true;     // D_alpha <= D_1 <= D_alpha' across alpha = 1
  double worst_violation = 0.0;
};

// alpha -> D_{alpha,z} must be non-decreasing; alpha = 1 entries use d1.
ScanResult alpha_monotonicity_scan(const State& rho, const State& sigma, double z,
                                   const std::vector<double>& alpha_grid, double mono_tol = 1e-8);

struct ConvexityResult {
  bool holds = true;
  double worst_violation = 0.0;  // max over theta of lhs - rhs (relative)
};

// Q_{theta a1 + (1-theta) a2, z} <= Q_{a1,z}^theta Q_{a2,z}^{1-theta};
// requires non-orthogonal supports.
ConvexityResult log_convexity_check(const State& rho, const State& sigma, double z, double alpha1,
                                    double alpha2, const std::vector<double>& theta_grid,
                                    double tolerance = 1e-9);

// non-decreasing in z for alpha in (0,1), non-increasing for alpha > 1
ScanResult z_monotonicity_scan(const State& rho, const State& sigma, double alpha,
                               const std::vector<double>& z_grid, double mono_tol = 1e-8);

struct LineScanResult {
  std::vector<ScanRow> rows;
  bool verdict_reported = false;  // only when the grid has alpha <= 1 points
  bool monotone_below_one = true;
  double worst_violation = 0.0;
};

// D_{alpha, kappa*alpha + z0} along the alpha grid. The monotonicity verdict
// covers only the alpha <= 1 sub-grid; above 1 the rows are exploratory data.
LineScanResult line_scan(const State& rho, const State& sigma, double kappa, double z0,
                         const std::vector<double>& alpha_grid, double mono_tol = 1e-8);

}  // namespace logmaj
