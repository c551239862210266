#include "logmaj/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logmaj {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

State::State(PsdMatrix rho)
    : rho_(std::move(rho)), trace_(rho_.trace()), support_(support_projection(rho_)) {
  if (!(trace_ > 0.0)) throw std::invalid_argument("State: trace must be positive (rho != 0)");
}

DivergenceValue DivergenceValue::infinite(SupportRelation rel) {
  return DivergenceValue{kInf, false, rel};
}

DivergenceValue DivergenceValue::of(double v, SupportRelation rel) {
  return DivergenceValue{v, true, rel};
}

SupportRelation support_relation(const State& rho, const State& sigma, double rank_tolerance) {
  const ComplexMatrix& p = rho.support().matrix();
  const ComplexMatrix& q = sigma.support().matrix();
  const ComplexMatrix qc = ComplexMatrix::identity(q.dim()) - q;
  if (operator_norm(qc * p) <= rank_tolerance) return SupportRelation::contained;
  if (operator_norm(q * p) <= rank_tolerance) return SupportRelation::orthogonal;
  return SupportRelation::overlap;
}

namespace {

// sigma^e with the generalized-inverse reading for e < 0 and the support
// projection for e = 0
ComplexMatrix generalized_power(const PsdMatrix& a, double e) { return matrix_power(a, e).matrix(); }

double q_value(const State& rho, const State& sigma, double alpha, double z) {
  const ComplexMatrix ra = generalized_power(rho.matrix(), alpha / (2.0 * z));
  const ComplexMatrix sb = generalized_power(sigma.matrix(), (1.0 - alpha) / z);
  const PsdMatrix inner(hermitian_part(ra * sb * ra));
  return matrix_power(inner, z).trace();
}

}  // namespace

DivergenceValue q_alpha_z(const State& rho, const State& sigma, double alpha, double z) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("q_alpha_z: alpha >= 0 required");
  if (!(z > 0.0)) throw std::invalid_argument("q_alpha_z: z > 0 required");
  require_same_dim(rho.matrix().matrix(), sigma.matrix().matrix(), "q_alpha_z");

  const SupportRelation rel = support_relation(rho, sigma);
  if (alpha > 1.0 && rel != SupportRelation::contained) return DivergenceValue::infinite(rel);
  return DivergenceValue::of(q_value(rho, sigma, alpha, z), rel);
}

DivergenceValue d_alpha_z(const State& rho, const State& sigma, double alpha, double z) {
  if (alpha == 1.0)
    throw std::invalid_argument("d_alpha_z: alpha = 1 is served by d1_normalized/umegaki");
  const DivergenceValue q = q_alpha_z(rho, sigma, alpha, z);
  if (!q.finite) return q;  // alpha > 1 here, so 1/(alpha-1) keeps +inf
  const double ratio = q.value / rho.trace();
  if (ratio <= 0.0) {
    // alpha < 1 with orthogonal supports: log 0 / (alpha - 1) = +inf
    return DivergenceValue::infinite(q.support_relation);
  }
  return DivergenceValue::of(std::log(ratio) / (alpha - 1.0), q.support_relation);
}

DivergenceValue umegaki(const State& rho, const State& sigma) {
  require_same_dim(rho.matrix().matrix(), sigma.matrix().matrix(), "umegaki");
  const SupportRelation rel = support_relation(rho, sigma);
  if (rel != SupportRelation::contained) return DivergenceValue::infinite(rel);
  const ComplexMatrix log_rho = support_log(rho.matrix()).matrix();
  const ComplexMatrix log_sigma = support_log(sigma.matrix()).matrix();
  const double v = (rho.matrix().matrix() * (log_rho - log_sigma)).trace().real();
  return DivergenceValue::of(v, rel);
}

DivergenceValue d1_normalized(const State& rho, const State& sigma) {
  DivergenceValue d = umegaki(rho, sigma);
  if (d.finite) d.value /= rho.trace();
  return d;
}

namespace {

DivergenceValue divergence_at(const State& rho, const State& sigma, double alpha, double z) {
  if (alpha == 1.0) return d1_normalized(rho, sigma);
  return d_alpha_z(rho, sigma, alpha, z);
}

// v2 >= v1 - tol in the extended reals
bool non_decreasing(const DivergenceValue& v1, const DivergenceValue& v2, double tolerance,
                    double* violation) {
  if (!v2.finite) return true;
  if (!v1.finite) {
    *violation = kInf;
    return false;
  }
  const double gap = v1.value - v2.value;
  if (gap > *violation) *violation = gap;
  return gap <= tolerance;
}

}  // namespace

ScanResult alpha_monotonicity_scan(const State& rho, const State& sigma, double z,
                                   const std::vector<double>& alpha_grid, double mono_tol) {
  for (size_t i = 0; i + 1 < alpha_grid.size(); ++i)
    if (!(alpha_grid[i] < alpha_grid[i + 1]))
      throw std::invalid_argument("alpha_monotonicity_scan: grid must be increasing");

  ScanResult res;
  res.monotone = true;
  res.worst_violation = -kInf;
  std::vector<DivergenceValue> vals;
  vals.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    const DivergenceValue v = divergence_at(rho, sigma, alpha, z);
    vals.push_back(v);
    res.rows.push_back({alpha, z, v.value, v.finite});
  }
  for (size_t i = 0; i + 1 < vals.size(); ++i)
    if (!non_decreasing(vals[i], vals[i + 1], mono_tol, &res.worst_violation)) res.monotone = false;

  // straddle: every alpha < 1 value below D_1, every alpha > 1 value above
  const DivergenceValue d1 = d1_normalized(rho, sigma);
  for (size_t i = 0; i < vals.size(); ++i) {
    if (alpha_grid[i] < 1.0 && !non_decreasing(vals[i], d1, mono_tol, &res.worst_violation))
      res.straddle_ok = false;
    if (alpha_grid[i] > 1.0 && !non_decreasing(d1, vals[i], mono_tol, &res.worst_violation))
      res.straddle_ok = false;
  }
  if (res.worst_violation == -kInf) res.worst_violation = 0.0;
  return res;
}

ConvexityResult log_convexity_check(const State& rho, const State& sigma, double z, double alpha1,
                                    double alpha2, const std::vector<double>& theta_grid,
                                    double tolerance) {
  if (support_relation(rho, sigma) == SupportRelation::orthogonal)
    throw std::invalid_argument("log_convexity_check: supports must not be orthogonal");

  const DivergenceValue q1 = q_alpha_z(rho, sigma, alpha1, z);
  const DivergenceValue q2 = q_alpha_z(rho, sigma, alpha2, z);

  ConvexityResult res;
  for (double theta : theta_grid) {
    if (!(theta >= 0.0 && theta <= 1.0))
      throw std::invalid_argument("log_convexity_check: theta in [0,1]");
    const double mid_alpha = theta * alpha1 + (1.0 - theta) * alpha2;
    const DivergenceValue qm = q_alpha_z(rho, sigma, mid_alpha, z);

    // (+inf)^theta := +inf; any infinite factor dominates
    const bool rhs_infinite = (!q1.finite && theta > 0.0) || (!q2.finite && theta < 1.0);
    if (rhs_infinite) continue;
    const double rhs = std::pow(q1.value, theta) * std::pow(q2.value, 1.0 - theta);
    if (!qm.finite) {
      res.holds = false;
      res.worst_violation = kInf;
      continue;
    }
    const double violation = (qm.value - rhs) / (1.0 + std::abs(rhs));
    res.worst_violation = std::max(res.worst_violation, violation);
    if (violation > tolerance) res.holds = false;
  }
  return res;
}

ScanResult z_monotonicity_scan(const State& rho, const State& sigma, double alpha,
                               const std::vector<double>& z_grid, double mono_tol) {
  if (alpha == 1.0) throw std::invalid_argument("z_monotonicity_scan: alpha != 1 required");
  for (size_t i = 0; i + 1 < z_grid.size(); ++i)
    if (!(z_grid[i] < z_grid[i + 1]))
      throw std::invalid_argument("z_monotonicity_scan: grid must be increasing");

  ScanResult res;
  res.monotone = true;
  res.worst_violation = -kInf;
  std::vector<DivergenceValue> vals;
  for (double z : z_grid) {
    const DivergenceValue v = d_alpha_z(rho, sigma, alpha, z);
    vals.push_back(v);
    res.rows.push_back({alpha, z, v.value, v.finite});
  }
  const bool increasing = alpha < 1.0;  // decreasing branch for alpha > 1
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    const DivergenceValue& lo = increasing ? vals[i] : vals[i + 1];
    const DivergenceValue& hi = increasing ? vals[i + 1] : vals[i];
    if (!non_decreasing(lo, hi, mono_tol, &res.worst_violation)) res.monotone = false;
  }
  if (res.worst_violation == -kInf) res.worst_violation = 0.0;
  return res;
}

LineScanResult line_scan(const State& rho, const State& sigma, double kappa, double z0,
                         const std::vector<double>& alpha_grid, double mono_tol) {
  if (!(kappa >= 0.0)) throw std::invalid_argument("line_scan: kappa >= 0 required");
  if (!(z0 >= 0.0)) throw std::invalid_argument("line_scan: z0 >= 0 required");
  for (double alpha : alpha_grid)
    if (!(kappa * alpha + z0 > 0.0))
      throw std::invalid_argument("line_scan: z(alpha) must be positive on the grid");
  for (size_t i = 0; i + 1 < alpha_grid.size(); ++i)
    if (!(alpha_grid[i] < alpha_grid[i + 1]))
      throw std::invalid_argument("line_scan: grid must be increasing");

  LineScanResult res;
  res.worst_violation = -kInf;
  std::vector<DivergenceValue> vals;
  for (double alpha : alpha_grid) {
    const double z = kappa * alpha + z0;
    const DivergenceValue v = divergence_at(rho, sigma, alpha, z);
    vals.push_back(v);
    res.rows.push_back({alpha, z, v.value, v.finite});
  }
  // verdict only on the proved region alpha <= 1
  for (size_t i = 0; i + 1 < vals.size(); ++i) {
    if (!(alpha_grid[i + 1] <= 1.0)) break;
    res.verdict_reported = true;
    if (!non_decreasing(vals[i], vals[i + 1], mono_tol, &res.worst_violation))
      res.monotone_below_one = false;
  }
  if (res.worst_violation == -kInf) res.worst_violation = 0.0;
  return res;
}

}  // namespace logmaj
