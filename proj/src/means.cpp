#include "logmaj/means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace logmaj {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
  double sum = 0.0;
  for (double x : w_) {
    if (!(x > 0.0)) throw std::invalid_argument("WeightVector: weights must be strictly positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WeightVector: weights sum to " + std::to_string(sum) + ", not 1");
}

WeightVector WeightVector::uniform(int n) {
  if (n < 1) throw std::invalid_argument("WeightVector::uniform: n >= 1 required");
  return WeightVector(std::vector<double>(static_cast<size_t>(n), 1.0 / n));
}

namespace {

std::string fmt_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

void require_family(const std::vector<PdMatrix>& a, const WeightVector& w, double max_condition,
                    const char* what) {
  if (a.empty()) throw std::invalid_argument(std::string(what) + ": empty matrix list");
  if (static_cast<int>(a.size()) != w.size())
    throw std::invalid_argument(std::string(what) + ": weight count does not match matrix count");
  for (const PdMatrix& m : a) {
    require_same_dim(a.front().matrix(), m.matrix(), what);
    if (m.condition_number() > max_condition)
      throw std::domain_error(std::string(what) + ": condition number " +
                              std::to_string(m.condition_number()) +
                              " exceeds guard; log/exp residual guarantee lost");
  }
}

}  // namespace

PdMatrix geometric_mean_two(const PdMatrix& a, const PdMatrix& b, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("geometric_mean_two: alpha in [0,1] required");
  require_same_dim(a.matrix(), b.matrix(), "geometric_mean_two");
  const ComplexMatrix a12 = matrix_sqrt(a).matrix();
  const ComplexMatrix am12 = matrix_power(a, -0.5).matrix();
  const PdMatrix quotient(hermitian_part(am12 * b.matrix() * am12));
  const ComplexMatrix mid = matrix_power(quotient, alpha).matrix();
  return PdMatrix(hermitian_part(a12 * mid * a12));
}

double riemannian_distance(const PdMatrix& a, const PdMatrix& b) {
  require_same_dim(a.matrix(), b.matrix(), "riemannian_distance");
  const ComplexMatrix am12 = matrix_power(a, -0.5).matrix();
  const PdMatrix quotient(hermitian_part(am12 * b.matrix() * am12));
  double s = 0.0;
  for (int i = 0; i < quotient.eigenvalues().size(); ++i) {
    const double lg = std::log(quotient.eigenvalues()[i]);
    s += lg * lg;
  }
  return std::sqrt(s);
}

HermitianMatrix karcher_field(const PdMatrix& x, const std::vector<PdMatrix>& a,
                              const WeightVector& w) {
  require_family(a, w, tol::max_condition, "karcher_field");
  const ComplexMatrix x12 = matrix_sqrt(x).matrix();
  ComplexMatrix acc(x.dim());
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    const ComplexMatrix ainv = matrix_inverse(a[static_cast<size_t>(j)]).matrix();
    const PdMatrix inner(hermitian_part(x12 * ainv * x12));
    acc += w[j] * matrix_log(inner).matrix();
  }
  return HermitianMatrix(hermitian_part(acc));
}

PdMatrix log_euclidean_mean(const std::vector<PdMatrix>& a, const WeightVector& w) {
  require_family(a, w, tol::max_condition, "log_euclidean_mean");
  ComplexMatrix acc(a.front().dim());
  for (int j = 0; j < static_cast<int>(a.size()); ++j)
    acc += w[j] * matrix_log(a[static_cast<size_t>(j)]).matrix();
  return matrix_exp(HermitianMatrix(hermitian_part(acc)));
}

KarcherSolveResult karcher_mean(const std::vector<PdMatrix>& a, const WeightVector& w,
                                const KarcherConfig& cfg) {
  require_family(a, w, cfg.max_condition, "karcher_mean");
  const int n = static_cast<int>(a.size());

  std::vector<PdMatrix> inverses;
  inverses.reserve(a.size());
  for (const PdMatrix& m : a) inverses.push_back(matrix_inverse(m));

  auto field_at = [&](const PdMatrix& x) {
    const ComplexMatrix x12 = matrix_sqrt(x).matrix();
    ComplexMatrix acc(x.dim());
    for (int j = 0; j < n; ++j) {
      const PdMatrix inner(hermitian_part(x12 * inverses[static_cast<size_t>(j)].matrix() * x12));
      acc += w[j] * matrix_log(inner).matrix();
    }
    return hermitian_part(acc);
  };

  PdMatrix x = log_euclidean_mean(a, w);
  ComplexMatrix field = field_at(x);
  double residual = field.frobenius_norm();

  // conservative step from the curvature bound: the cost Hessian stays below
  // 1 + max_j delta(X0, A_j), and a step under its inverse keeps the field
  // norm contracting instead of thrashing against the halving safeguard
  double max_dist = 0.0;
  for (const PdMatrix& m : a) max_dist = std::max(max_dist, riemannian_distance(x, m));
  const double step_cap = std::min(1.0, 1.0 / (1.0 + max_dist));

  KarcherSolveResult result{x, residual, 0, {residual}};
  double step = step_cap;
  while (result.residual > cfg.tol && result.iterations < cfg.max_iter) {
    const ComplexMatrix x12 = matrix_sqrt(x).matrix();
    const PdMatrix move = matrix_exp(HermitianMatrix((-step) * field));
    PdMatrix candidate(hermitian_part(x12 * move.matrix() * x12));
    ComplexMatrix cand_field = field_at(candidate);
    double cand_residual = cand_field.frobenius_norm();

    // keep the residual history non-increasing by halving the step
    while (cand_residual > result.residual && step > 1.0 / 1024.0) {
      step *= 0.5;
      const PdMatrix retry = matrix_exp(HermitianMatrix((-step) * field));
      candidate = PdMatrix(hermitian_part(x12 * retry.matrix() * x12));
      cand_field = field_at(candidate);
      cand_residual = cand_field.frobenius_norm();
    }
    if (cand_residual > result.residual) {
      std::string hist;
      for (double r : result.residual_history) hist += " " + fmt_sci(r);
      throw std::runtime_error("karcher_mean: stalled at residual " + fmt_sci(result.residual) +
                               " above tolerance " + fmt_sci(cfg.tol) + "; residual history:" + hist);
    }

    x = candidate;
    field = cand_field;
    result.iterations += 1;
    result.residual = cand_residual;
    result.residual_history.push_back(cand_residual);
    if (cand_residual <= cfg.tol) break;
    if (step < step_cap) step = std::min(step_cap, step * 2.0);
  }

  result.mean = x;
  if (result.residual > cfg.tol) {
    std::string hist;
    const size_t n_hist = result.residual_history.size();
    for (size_t i = n_hist > 8 ? n_hist - 8 : 0; i < n_hist; ++i)
      hist += " " + fmt_sci(result.residual_history[i]);
    throw std::runtime_error("karcher_mean: no convergence after " +
                             std::to_string(result.iterations) +
                             " iterations; residual tail:" + hist);
  }
  return result;
}

PdMatrix power_mean(const std::vector<PdMatrix>& a, const WeightVector& w, double t,
                    const PowerMeanConfig& cfg) {
  if (!(t >= -1.0 && t <= 1.0) || t == 0.0)
    throw std::invalid_argument("power_mean: t in [-1,1], t != 0 required");
  require_family(a, w, cfg.max_condition, "power_mean");

  if (t < 0.0) {
    std::vector<PdMatrix> inverses;
    inverses.reserve(a.size());
    for (const PdMatrix& m : a) inverses.push_back(matrix_inverse(m));
    return matrix_inverse(power_mean(inverses, w, -t, cfg));
  }

  const int n = static_cast<int>(a.size());
  ComplexMatrix arith(a.front().dim());
  for (int j = 0; j < n; ++j) arith += w[j] * a[static_cast<size_t>(j)].matrix();
  PdMatrix x(hermitian_part(arith));

  double residual = 0.0;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    ComplexMatrix next(x.dim());
    for (int j = 0; j < n; ++j)
      next += w[j] * geometric_mean_two(x, a[static_cast<size_t>(j)], t).matrix();
    residual = (next - x.matrix()).frobenius_norm();
    x = PdMatrix(hermitian_part(next));
    if (residual <= cfg.tol) return x;
  }
  throw std::runtime_error("power_mean: no convergence, last residual " + std::to_string(residual));
}

PowerMajorizationChecks karcher_power_majorization(const std::vector<PdMatrix>& a,
                                                   const WeightVector& w, double p, double q,
                                                   double tolerance, const KarcherConfig& cfg) {
  if (!(q > 0.0 && q <= p)) throw std::invalid_argument("karcher_power_majorization: 0 < q <= p");

  auto rescaled_mean_spectrum = [&](double e) {
    std::vector<PdMatrix> powered;
    powered.reserve(a.size());
    for (const PdMatrix& m : a) powered.push_back(PdMatrix(matrix_power(m, e)));
    const PdMatrix g = karcher_mean(powered, w, cfg).mean;
    std::vector<double> vals = g.eigenvalues().values();
    for (double& x : vals) x = std::pow(x, 1.0 / e);
    return Spectrum(std::move(vals));
  };

  const Spectrum sp = rescaled_mean_spectrum(p);
  const Spectrum sq = rescaled_mean_spectrum(q);
  const Spectrum le = log_euclidean_mean(a, w).eigenvalues();

  PowerMajorizationChecks checks{
      check_log_majorization(sp.values(), sq.values(), tolerance),
      check_log_majorization(sp.values(), le.values(), tolerance),
  };
  return checks;
}

std::vector<LieTrotterRow> lie_trotter_scan(const std::vector<PdMatrix>& a, const WeightVector& w,
                                            const std::vector<double>& q_sequence,
                                            const KarcherConfig& cfg) {
  for (size_t i = 0; i + 1 < q_sequence.size(); ++i)
    if (!(q_sequence[i] > q_sequence[i + 1]) || !(q_sequence[i + 1] > 0.0))
      throw std::invalid_argument("lie_trotter_scan: q sequence must be positive decreasing");

  const PdMatrix le = log_euclidean_mean(a, w);
  std::vector<LieTrotterRow> rows;
  rows.reserve(q_sequence.size());
  for (double q : q_sequence) {
    std::vector<PdMatrix> powered;
    powered.reserve(a.size());
    for (const PdMatrix& m : a) powered.push_back(PdMatrix(matrix_power(m, q)));
    const PdMatrix g = karcher_mean(powered, w, cfg).mean;
    const PdMatrix rescaled(matrix_power(g, 1.0 / q));
    rows.push_back({q, riemannian_distance(rescaled, le)});
  }
  return rows;
}

}  // namespace logmaj
