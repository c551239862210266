#include "logmaj/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

#include <json.hpp>

#include "logmaj/divergence.hpp"
#include "logmaj/expansion.hpp"
#include "logmaj/golden_thompson.hpp"
#include "logmaj/io.hpp"
#include "logmaj/random.hpp"

namespace logmaj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CaseResult {
  bool ok = true;
  double margin = kInf;  // min slack; negative = failed check
  std::string error;

  // slack >= 0 means the check passed
  void slack(double s) {
    margin = std::min(margin, s);
    if (!(s >= 0.0)) ok = false;
  }
  void require(bool condition) { slack(condition ? 1.0 : -1.0); }
};

using CaseBody = std::function<void(long index, uint64_t case_seed, CaseResult& out)>;

SuiteOutcome run_cases(const std::string& name, const RunConfig& cfg, long n_cases,
                       const CaseBody& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CaseResult> results(static_cast<size_t>(n_cases));
  const uint64_t suite_seed = Rng::split(cfg.seed, Rng::hash_name(name));

  auto worker = [&](long begin, long stride) {
    for (long i = begin; i < n_cases; i += stride) {
      CaseResult& r = results[static_cast<size_t>(i)];
      try {
        body(i, Rng::split(suite_seed, static_cast<uint64_t>(i)), r);
      } catch (const std::exception& e) {
        r.ok = false;
        r.margin = -kInf;
        r.error = e.what();
      }
    }
  };

  const int threads =
      std::max<int>(1, static_cast<int>(std::min<long>(cfg.effective_threads(), n_cases)));
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (std::thread& th : pool) th.join();
  }

  SuiteOutcome outcome;
  outcome.suite = name;
  outcome.cases = n_cases;
  outcome.seed = cfg.seed;
  outcome.worst_margin = kInf;
  for (long i = 0; i < n_cases; ++i) {
    const CaseResult& r = results[static_cast<size_t>(i)];
    if (!r.ok) ++outcome.failures;
    outcome.worst_margin = std::min(outcome.worst_margin, r.margin);
    nlohmann::json line{{"suite", name}, {"case", i}, {"ok", r.ok}};
    line["margin"] = std::isfinite(r.margin) ? nlohmann::json(r.margin)
                                             : nlohmann::json(r.margin > 0 ? "+inf" : "-inf");
    if (!r.error.empty()) line["error"] = r.error;
    outcome.case_lines.push_back(line.dump());
  }
  if (n_cases == 0) outcome.worst_margin = 0.0;
  outcome.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return outcome;
}

int clamp_dim(int m, const RunConfig& cfg) {
  return std::max(2, std::min(m, cfg.max_dim));
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> g(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

// slack of a log-majorization report at suite tolerances: partial margins at
// margin_tol, determinant stage at det_tol
double report_slack(const MajorizationReport& rep, double margin_tol, double det_tol) {
  double s = kInf;
  for (size_t k = 0; k + 1 < rep.margins.size(); ++k) s = std::min(s, rep.margins[k] + margin_tol);
  s = std::min(s, det_tol - std::abs(rep.final_equality_gap));
  return s;
}

double weak_slack(const MajorizationReport& rep, double margin_tol) {
  double s = kInf;
  for (double m : rep.margins) s = std::min(s, m + margin_tol);
  return s;
}

double rel_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm() / (1.0 + std::max(a.frobenius_norm(), b.frobenius_norm()));
}

std::vector<std::vector<int>> k_subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

// H_1..H_{n-1} random, H_n balancing so the weighted sum is c I; the whole
// family is rescaled so no member exceeds Frobenius norm 1.2 (keeps powered
// solves well-conditioned), which preserves the pinned-sum structure
std::vector<HermitianMatrix> pinned_sum_family(Rng& rng, int m, int n, const WeightVector& w) {
  const double c = rng.uniform(-0.3, 0.3);
  std::vector<HermitianMatrix> hs;
  ComplexMatrix acc(m);
  for (int j = 0; j < n - 1; ++j) {
    hs.push_back(random_hermitian(rng, m, 0.5));
    acc += w[j] * hs.back().matrix();
  }
  ComplexMatrix last = ComplexMatrix::identity(m);
  last *= Complex(c, 0.0);
  last -= acc;
  hs.push_back(HermitianMatrix(hermitian_part((1.0 / w[n - 1]) * last)));

  double biggest = 0.0;
  for (const HermitianMatrix& h : hs) biggest = std::max(biggest, h.frobenius_norm());
  if (biggest > 1.2) {
    const double scale = 1.2 / biggest;
    for (HermitianMatrix& h : hs) h = HermitianMatrix(scale * h.matrix());
  }
  return hs;
}

WeightVector random_weights(Rng& rng, int n) {
  std::vector<double> w(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : w) {
    x = rng.uniform(0.2, 1.0);
    sum += x;
  }
  for (double& x : w) x /= sum;
  // kill the last rounding crumb so the sum is exactly representable near 1
  double acc = 0.0;
  for (size_t i = 0; i + 1 < w.size(); ++i) acc += w[i];
  w.back() = 1.0 - acc;
  return WeightVector(w);
}

// ---------------------------------------------------------------- araki ----

void araki_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int m = clamp_dim(2 + static_cast<int>(i % 5), cfg);
  const double margin_tol = cfg.tol("araki_margin_tol", 1e-9);
  const double det_tol = cfg.tol("araki_det_tol", 1e-8);

  const PdMatrix a = random_pd(rng, m);
  const PdMatrix b = random_pd(rng, m);
  for (double p : {0.25, 0.5, 0.75}) {
    const ArakiResult res = araki_pair(a, b, p, margin_tol);
    out.slack(report_slack(res.report, margin_tol, det_tol));
    // log-majorization implies weak majorization of the same spectra
    const MajorizationReport weak =
        check_weak_majorization(res.lhs.values(), res.rhs.values(), margin_tol);
    out.slack(weak_slack(weak, margin_tol * (1.0 + res.rhs.max())));
  }

  if (i < 200) {
    // compound spectra are the k-fold eigenvalue products
    const HermitianMatrix h = random_hermitian(rng, m);
    const EigResult eh = jacobi_eig(h.matrix());
    for (int k = 2; k <= m; ++k) {
      const ComplexMatrix comp = hermitian_part(compound_matrix(h.matrix(), k));
      const EigResult ec = jacobi_eig(comp);
      std::vector<double> prods;
      for (const std::vector<int>& s : k_subsets(m, k)) {
        double v = 1.0;
        for (int idx : s) v *= eh.values[idx];
        prods.push_back(v);
      }
      std::sort(prods.begin(), prods.end(), std::greater<double>());
      double scale = 1.0;
      for (double v : prods) scale = std::max(scale, std::abs(v));
      double worst = 0.0;
      for (int idx = 0; idx < ec.values.size(); ++idx)
        worst = std::max(worst, std::abs(ec.values[idx] - prods[static_cast<size_t>(idx)]));
      out.slack(1e-8 * scale - worst);
    }
  }

  if (i < 200) {
    // equality probe: commuting pairs sit at gap 0, generic pairs above -tol
    const std::vector<PdMatrix> fam = random_commuting_family(rng, m, 2);
    const EqualityProbe comm = araki_equality_probe(fam[0], fam[1], 1.0, 2.0, NormKind::trace());
    const double scale = 1.0 + fam[0].eigenvalues().max() + fam[1].eigenvalues().max();
    out.slack(1e-10 * scale - std::abs(comm.gap));
    const EqualityProbe generic = araki_equality_probe(a, b, 0.5, 1.5, NormKind::schatten(2.0));
    out.slack(generic.gap + margin_tol);
  }

  if (i == 0) {
    // curated non-commuting witness: the gap is strictly positive
    const PdMatrix ca(ComplexMatrix(2, {Complex(2), Complex(1), Complex(1), Complex(1)}));
    const PdMatrix cb(ComplexMatrix::diagonal(std::vector<double>{1.0, 4.0}));
    const EqualityProbe probe = araki_equality_probe(ca, cb, 1.0, 2.0, NormKind::trace());
    out.slack(probe.gap - 1e-4);
    out.require(probe.commutator_norm > 0.1);
  }
}

// ------------------------------------------------------------- extended ----

void extended_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int m = clamp_dim(2 + static_cast<int>(i % 5), cfg);
  const double margin_tol = cfg.tol("araki_margin_tol", 1e-9);
  const double det_tol = cfg.tol("araki_det_tol", 1e-8);
  const double theta = std::vector<double>{0.0, 0.3, 0.7, 1.0}[static_cast<size_t>(i % 4)];

  const std::vector<PdMatrix> as = random_commuting_family(rng, m, 2);
  const std::vector<PdMatrix> bs = random_commuting_family(rng, m, 2);
  const PdMatrix& a1 = as[0];
  const PdMatrix& a2 = as[1];
  const PdMatrix& b1 = bs[0];
  const PdMatrix& b2 = bs[1];

  const bool endpoint = theta == 0.0 || theta == 1.0;
  const std::vector<EndpointConvention> convs =
      endpoint ? std::vector<EndpointConvention>{EndpointConvention::identity,
                                                 EndpointConvention::support}
               : std::vector<EndpointConvention>{EndpointConvention::identity};

  for (EndpointConvention conv : convs) {
    const ArakiResult res = extended_araki(a1, a2, b1, b2, theta, conv, margin_tol);
    out.slack(report_slack(res.report, margin_tol, det_tol));
    const MajorizationReport weak =
        check_weak_majorization(res.lhs.values(), res.rhs.values(), margin_tol);
    out.slack(weak_slack(weak, margin_tol * (1.0 + res.rhs.max())));

    const NormKind norm = (i % 4 == 0)   ? NormKind::trace()
                          : (i % 4 == 1) ? NormKind::op()
                          : (i % 4 == 2) ? NormKind::ky_fan(std::min(2, m))
                                         : NormKind::frobenius();
    const double r = std::vector<double>{0.5, 1.0, 2.0}[static_cast<size_t>(i % 3)];
    const NormCheckResult nc = norm_interpolation_check(a1, a2, b1, b2, theta, r, norm, conv, 0.0);
    out.slack(nc.rhs + 1e-9 * (1.0 + nc.rhs) - nc.lhs);
  }

  // singular-value form: s((A1^th A2^{1-th})(B1^th B2^{1-th})) equals the
  // square root of the blended check run on the squared inputs
  {
    auto squared = [](const PdMatrix& x) { return PdMatrix(matrix_power(x, 2.0)); };
    const ArakiResult sq = extended_araki(squared(a1), squared(a2), squared(b1), squared(b2), theta,
                                          EndpointConvention::identity, margin_tol);
    auto blend = [&](const PdMatrix& x, const PdMatrix& y) {
      const ComplexMatrix xp =
          theta == 0.0 ? ComplexMatrix::identity(m) : matrix_power(x, theta).matrix();
      const ComplexMatrix yp =
          theta == 1.0 ? ComplexMatrix::identity(m) : matrix_power(y, 1.0 - theta).matrix();
      return xp * yp;
    };
    const Spectrum sv = singular_values(blend(a1, a2) * blend(b1, b2));
    double worst = 0.0, scale = 1.0;
    for (int idx = 0; idx < sv.size(); ++idx) {
      const double ref = std::sqrt(sq.lhs[idx]);
      worst = std::max(worst, std::abs(sv[idx] - ref));
      scale = std::max(scale, ref);
    }
    out.slack(1e-8 * scale - worst);
  }

  // reduction at A1 = B1 = I reproduces the plain two-matrix check
  if (theta < 1.0) {
    const PdMatrix eye(ComplexMatrix::identity(m));
    const ArakiResult red = extended_araki(eye, a2, eye, b2, theta, EndpointConvention::identity,
                                           margin_tol);
    const ArakiResult plain = araki_pair(a2, b2, 1.0 - theta, margin_tol);
    double worst = 0.0, scale = 1.0;
    for (int idx = 0; idx < m; ++idx) {
      worst = std::max(worst, std::abs(red.lhs[idx] - plain.lhs[idx]));
      worst = std::max(worst, std::abs(red.rhs[idx] - plain.rhs[idx]));
      scale = std::max({scale, plain.lhs[idx], plain.rhs[idx]});
    }
    out.slack(1e-10 * scale - worst);
  }
}

// ----------------------------------------------------------- divergence ----

double scalar_renyi_q(const std::vector<double>& p, const std::vector<double>& q, double alpha) {
  double acc = 0.0;
  for (size_t i = 0; i < p.size(); ++i) acc += std::pow(p[i], alpha) * std::pow(q[i], 1.0 - alpha);
  return acc;
}

void divergence_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int m = clamp_dim(2 + static_cast<int>(i % 5), cfg);
  const double mono_tol = cfg.tol("mono_tol", 1e-8);

  const State rho(random_density(rng, m));
  const State sigma(random_density(rng, m));
  const std::vector<double> alpha_grid = linspace(0.0, 3.0, 41);

  for (double z : {0.5, 1.0, 2.0}) {
    const ScanResult scan = alpha_monotonicity_scan(rho, sigma, z, alpha_grid, mono_tol);
    out.slack(mono_tol - scan.worst_violation);
    out.require(scan.monotone && scan.straddle_ok);

    const ConvexityResult conv =
        log_convexity_check(rho, sigma, z, 0.5, 2.5, {0.25, 0.5, 0.75}, 1e-9);
    out.slack(1e-9 - conv.worst_violation);
  }

  // z-monotonicity direction per the case split
  const ScanResult below = z_monotonicity_scan(rho, sigma, 0.5, {0.5, 1.0, 2.0}, mono_tol);
  const ScanResult above = z_monotonicity_scan(rho, sigma, 2.0, {0.5, 1.0, 2.0}, mono_tol);
  out.slack(mono_tol - below.worst_violation);
  out.slack(mono_tol - above.worst_violation);

  // commuting pair: matches the scalar Renyi formula, z-independent
  {
    const ComplexMatrix u = haar_like_unitary(rng, m);
    std::vector<double> pd(static_cast<size_t>(m)), qd(static_cast<size_t>(m));
    double psum = 0.0, qsum = 0.0;
    for (int k = 0; k < m; ++k) {
      pd[static_cast<size_t>(k)] = rng.uniform(0.1, 1.0);
      qd[static_cast<size_t>(k)] = rng.uniform(0.1, 1.0);
      psum += pd[static_cast<size_t>(k)];
      qsum += qd[static_cast<size_t>(k)];
    }
    for (int k = 0; k < m; ++k) {
      pd[static_cast<size_t>(k)] /= psum;
      qd[static_cast<size_t>(k)] /= qsum;
    }
    const State crho(PsdMatrix::from_factors(u, pd));
    const State csig(PsdMatrix::from_factors(u, qd));
    for (double alpha : {0.3, 2.0}) {
      for (double z : {0.7, 1.3}) {
        const double expect =
            std::log(scalar_renyi_q(pd, qd, alpha) / crho.trace()) / (alpha - 1.0);
        const DivergenceValue got = d_alpha_z(crho, csig, alpha, z);
        out.require(got.finite);
        out.slack(1e-10 * (1.0 + std::abs(expect)) - std::abs(got.value - expect));
      }
    }
  }

  // Q is continuous at alpha = 1 with limit Tr rho
  {
    const double z = 1.3;
    for (double sign : {-1.0, 1.0}) {
      const double dev2 = std::abs(q_alpha_z(rho, sigma, 1.0 + sign * 1e-2, z).value - rho.trace());
      const double dev3 = std::abs(q_alpha_z(rho, sigma, 1.0 + sign * 1e-3, z).value - rho.trace());
      out.slack(0.25 * dev2 + 1e-12 - dev3);
    }
    const double d1 = d1_normalized(rho, sigma).value;
    for (double sign : {-1.0, 1.0}) {
      const double d = d_alpha_z(rho, sigma, 1.0 + sign * 1e-3, z).value;
      out.slack(1e-2 * (1.0 + std::abs(d1)) - std::abs(d - d1));
    }
  }

  // unitary covariance
  {
    const ComplexMatrix u = haar_like_unitary(rng, m);
    const State urho(PsdMatrix(hermitian_part(u * rho.matrix().matrix() * u.adjoint())));
    const State usig(PsdMatrix(hermitian_part(u * sigma.matrix().matrix() * u.adjoint())));
    const double base = d_alpha_z(rho, sigma, 0.7, 1.1).value;
    const double conj = d_alpha_z(urho, usig, 0.7, 1.1).value;
    out.slack(1e-9 * (1.0 + std::abs(base)) - std::abs(conj - base));
  }
}

// ------------------------------------------------------------------- gt ----

struct GtContext {
  BetaQuadrature quad;        // theta = 0 at the configured eps
  BetaQuadrature quad_tight;  // theta = 0 at 1e-12 for the commuting equality
  BetaQuadrature quad_half;   // theta = 0.5 for the log-majorization form
};

GtContext gt_context(const RunConfig& cfg) {
  const double eps = cfg.tol("quad_eps", 1e-8);
  return GtContext{
      build_quadrature(0.0, eps),
      build_quadrature(0.0, std::min(eps, 1e-12)),
      build_quadrature(0.5, eps),
  };
}

void gt_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const GtContext ctx = gt_context(cfg);
  const double eps = ctx.quad.target_eps;
  const int m = clamp_dim(2 + static_cast<int>(i % 3), cfg);

  std::vector<HermitianMatrix> hs;
  for (int j = 0; j < 3; ++j) hs.push_back(random_hermitian_spectrum(rng, m, -1.0, 1.0));

  for (double r : {1.0, 2.0}) {
    const GtReport rep = gt_check(hs, r, ctx.quad);
    out.slack(rep.gap + cfg.tol("gt_gap_tol", 1e-8));
  }

  if (i < 40) {
    // pairwise commuting family: equality up to the quadrature mass deficit
    const ComplexMatrix u = haar_like_unitary(rng, m);
    std::vector<HermitianMatrix> comm;
    for (int j = 0; j < 3; ++j) {
      std::vector<double> d(static_cast<size_t>(m));
      for (double& x : d) x = rng.uniform(-1.0, 1.0);
      ComplexMatrix hmat(m);
      for (int r0 = 0; r0 < m; ++r0)
        for (int c0 = 0; c0 < m; ++c0) {
          Complex acc = 0.0;
          for (int k = 0; k < m; ++k)
            acc += u(r0, k) * d[static_cast<size_t>(k)] * std::conj(u(c0, k));
          hmat(r0, c0) = acc;
        }
      comm.push_back(HermitianMatrix(hermitian_part(hmat)));
    }
    const GtReport rep = gt_check(comm, 1.0, ctx.quad_tight);
    out.slack(1e-9 - std::abs(rep.gap));

    // log-majorization form at theta = 1/2
    const MajorizationReport lm = gt_log_majorization(hs, 0.5, ctx.quad_half, 10.0 * eps);
    out.slack(report_slack(lm, 10.0 * eps, 10.0 * eps));

    // the triple-matrix integral identity at r = 2 (halved exponents)
    std::vector<HermitianMatrix> halved;
    for (const HermitianMatrix& h : hs) halved.push_back(HermitianMatrix(0.5 * h.matrix()));
    const GtReport rep2 = gt_check(halved, 2.0, ctx.quad);
    const EigResult e1 = jacobi_eig(hs[0].matrix());
    const EigResult e2 = jacobi_eig(hs[1].matrix());
    const EigResult e3 = jacobi_eig(hs[2].matrix());
    auto exp_of = [&](const EigResult& e, Complex scale) {
      std::vector<Complex> d(static_cast<size_t>(e.values.size()));
      for (int k = 0; k < e.values.size(); ++k) d[static_cast<size_t>(k)] = std::exp(scale * e.values[k]);
      ComplexMatrix r0(m);
      for (int a0 = 0; a0 < m; ++a0)
        for (int b0 = 0; b0 < m; ++b0) {
          Complex acc = 0.0;
          for (int k = 0; k < m; ++k)
            acc += e.vectors(a0, k) * d[static_cast<size_t>(k)] * std::conj(e.vectors(b0, k));
          r0(a0, b0) = acc;
        }
      return r0;
    };
    const ComplexMatrix eh1 = exp_of(e1, Complex(1.0, 0.0));
    const ComplexMatrix eh3 = exp_of(e3, Complex(1.0, 0.0));
    double direct = 0.0;
    for (size_t k = 0; k < ctx.quad.nodes.size(); ++k) {
      const double t = ctx.quad.nodes[k];
      const ComplexMatrix mid = exp_of(e2, Complex(0.5, 0.5 * t));
      const ComplexMatrix mid_conj = exp_of(e2, Complex(0.5, -0.5 * t));
      direct += ctx.quad.weights[k] * (eh1 * mid * eh3 * mid_conj).trace().real();
    }
    out.slack(1e-9 * (1.0 + direct) - std::abs(rep2.rhs - direct));
  }

  if (i == 0) {
    // saturating block triple from a non-commuting 2x2 pair
    const HermitianMatrix h(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}));
    const HermitianMatrix k(ComplexMatrix(2, {Complex(0), Complex(1), Complex(1), Complex(0)}));
    const BlockTriple triple = equality_block_triple(h, k);
    out.slack(triple.min_commutator_norm);

    const std::vector<HermitianMatrix> ts{triple.h1, triple.h2, triple.h3};
    const double closed = (std::exp(1.0) + std::exp(-1.0)) + (std::exp(1.0) + 1.0);
    for (double r : {0.5, 1.0, 2.0, 3.0}) {
      const GtReport rep = gt_check(ts, r, ctx.quad);
      if (r == 1.0) out.slack(1e-10 * closed - std::abs(rep.lhs - closed));
      out.slack(1e-6 - std::abs(rep.gap) / rep.lhs);
    }

    // quadrature masses and the even, normalized density
    for (double theta : {0.0, 0.3, 0.7}) {
      const BetaQuadrature q = build_quadrature(theta, eps);
      out.slack(2.0 * eps - std::abs(q.mass() - 1.0));
    }
    out.slack(1e-12 - std::abs(beta_density(0.0, 0.0) - std::numbers::pi / 4.0));
    out.slack(1e-12 - std::abs(beta_density(0.5, 0.0) - 1.0));

    // refinement self-consistency on a fixed input
    const BetaQuadrature q32 = build_quadrature(0.0, eps, 32);
    const GtReport base = gt_check(hs, 2.0, ctx.quad);
    const GtReport fine = gt_check(hs, 2.0, q32);
    out.slack(1e-10 * (1.0 + base.rhs) - std::abs(base.rhs - fine.rhs));
  }
}

// -------------------------------------------------------------- karcher ----

void karcher_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int m = clamp_dim(2 + static_cast<int>(i % 3), cfg);
  const int n = 2 + static_cast<int>(i % 3);
  KarcherConfig kcfg;
  kcfg.tol = cfg.tol("karcher_tol", 1e-12);

  std::vector<PdMatrix> as;
  for (int j = 0; j < n; ++j) as.push_back(random_spread_pd(rng, m));
  const WeightVector w = random_weights(rng, n);

  const KarcherSolveResult solve = karcher_mean(as, w, kcfg);
  out.slack(kcfg.tol - solve.residual);
  const PdMatrix& g = solve.mean;
  const double gscale = 1.0 + g.matrix().frobenius_norm();

  // solves of powered / conjugated / compound families square the input
  // conditioning, which lifts the log/exp roundoff floor; their verdicts sit
  // at 1e-8 and above, so a 1e-11 residual keeps the 10x separation
  KarcherConfig tcfg = kcfg;
  tcfg.tol = std::max(kcfg.tol, 1e-11);

  // rescaled log-majorization chain and the Log-Euclidean envelope
  const PowerMajorizationChecks checks = karcher_power_majorization(as, w, 2.0, 1.0, 1e-8, tcfg);
  out.slack(report_slack(checks.power_pair, 1e-8, 1e-8));
  out.slack(report_slack(checks.le_envelope, 1e-8, 1e-8));

  if (n == 2) {
    const PdMatrix two = geometric_mean_two(as[0], as[1], w[1]);
    out.slack(1e-10 * gscale - (g.matrix() - two.matrix()).frobenius_norm());
  }

  {  // permutation invariance
    std::vector<PdMatrix> rotated(as.begin() + 1, as.end());
    rotated.push_back(as[0]);
    std::vector<double> wr(w.weights().begin() + 1, w.weights().end());
    wr.push_back(w.weights().front());
    const KarcherSolveResult perm = karcher_mean(rotated, WeightVector(wr), kcfg);
    out.slack(1e-10 * gscale - (perm.mean.matrix() - g.matrix()).frobenius_norm());
  }

  if (i % 4 == 0) {  // congruence invariance
    const ComplexMatrix mtx = gaussian_matrix(rng, m);
    std::vector<PdMatrix> conj;
    for (const PdMatrix& a : as) conj.push_back(PdMatrix(hermitian_part(mtx.adjoint() * a.matrix() * mtx)));
    const KarcherSolveResult gc = karcher_mean(conj, w, tcfg);
    const ComplexMatrix expect = hermitian_part(mtx.adjoint() * g.matrix() * mtx);
    out.slack(1e-8 - rel_diff(gc.mean.matrix(), expect));
  }

  if (i % 4 == 1) {  // self-duality
    std::vector<PdMatrix> inv;
    for (const PdMatrix& a : as) inv.push_back(matrix_inverse(a));
    const PdMatrix dual = matrix_inverse(karcher_mean(inv, w, kcfg).mean);
    out.slack(1e-8 * gscale - (dual.matrix() - g.matrix()).frobenius_norm());
  }

  if (i % 4 == 2) {  // compound compatibility at k = 2
    std::vector<PdMatrix> comp;
    for (const PdMatrix& a : as) comp.push_back(PdMatrix(hermitian_part(compound_matrix(a.matrix(), 2))));
    const PdMatrix gcomp = karcher_mean(comp, w, tcfg).mean;
    const ComplexMatrix expect = hermitian_part(compound_matrix(g.matrix(), 2));
    out.slack(1e-7 - rel_diff(gcomp.matrix(), expect));
  }

  if (i % 4 == 3) {  // norm-contraction of powers when the mean is a contraction
    const double c = 0.999 / g.eigenvalues().max();
    std::vector<PdMatrix> scaled;
    for (const PdMatrix& a : as) scaled.push_back(PdMatrix(PsdMatrix::from_factors(
        a.eigenvectors(), [&] {
          std::vector<double> d = a.eigenvalues().values();
          for (double& x : d) x *= c;
          return d;
        }())));
    KarcherConfig pow_cfg = kcfg;
    pow_cfg.tol = std::max(kcfg.tol, 1e-10);  // powered spectra raise the log/exp floor
    for (double p : {1.5, 2.0, 3.0}) {
      std::vector<PdMatrix> powered;
      for (const PdMatrix& a : scaled) powered.push_back(PdMatrix(matrix_power(a, p)));
      const PdMatrix gp = karcher_mean(powered, w, pow_cfg).mean;
      out.slack(1.0 + 1e-8 - gp.eigenvalues().max());
    }
  }

  if (i % 5 == 0) {  // Lie-Trotter rescaling limit
    const std::vector<LieTrotterRow> rows = lie_trotter_scan(as, w, {1.0, 0.5, 0.1, 0.01}, kcfg);
    out.slack(1e-3 - rows.back().distance);
    for (size_t k = 0; k + 1 < rows.size(); ++k)
      out.slack(rows[k].distance * 1.1 + 1e-12 - rows[k + 1].distance);
  }

  if (i % 5 == 1) {  // power-mean family: endpoints and the t -> 0 limit
    PowerMeanConfig pcfg;
    ComplexMatrix arith(m);
    for (int j = 0; j < n; ++j) arith += w[j] * as[static_cast<size_t>(j)].matrix();
    const PdMatrix p1 = power_mean(as, w, 1.0, pcfg);
    out.slack(1e-10 * gscale - (p1.matrix() - arith).frobenius_norm());

    ComplexMatrix harm(m);
    for (int j = 0; j < n; ++j) harm += w[j] * matrix_inverse(as[static_cast<size_t>(j)]).matrix();
    const PdMatrix hmean = matrix_inverse(PdMatrix(hermitian_part(harm)));
    const PdMatrix pm1 = power_mean(as, w, -1.0, pcfg);
    out.slack(1e-10 * gscale - (pm1.matrix() - hmean.matrix()).frobenius_norm());

    double prev = kInf;
    for (double t : {0.5, 0.25, 0.1, 0.05}) {
      const double d = riemannian_distance(power_mean(as, w, t, pcfg), g);
      if (prev != kInf) out.slack(prev - d);
      prev = d;
    }
  }

  if (i % 5 == 2) {  // commuting diagonals: entrywise weighted geometric mean
    std::vector<PdMatrix> diags;
    std::vector<double> expect(static_cast<size_t>(m), 1.0);
    for (int j = 0; j < n; ++j) {
      std::vector<double> d(static_cast<size_t>(m));
      for (int k = 0; k < m; ++k) d[static_cast<size_t>(k)] = rng.log_uniform(0.25, 4.0);
      diags.push_back(PdMatrix(ComplexMatrix::diagonal(d)));
      for (int k = 0; k < m; ++k)
        expect[static_cast<size_t>(k)] *= std::pow(d[static_cast<size_t>(k)], w[j]);
    }
    const KarcherSolveResult dg = karcher_mean(diags, w, kcfg);
    out.slack(1e-12 * gscale - (dg.mean.matrix() - ComplexMatrix::diagonal(expect)).frobenius_norm());
    out.require(dg.iterations <= 1);  // the Log-Euclidean start already solves it
  }
}

// --------------------------------------------------------------- taylor ----

void taylor_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int n = 2 + static_cast<int>(i % 2);
  const int m = clamp_dim(2 + static_cast<int>(i % 2), cfg);

  std::vector<HermitianMatrix> hs;
  bool condition_a = (i % 5 == 0);
  const WeightVector w = random_weights(rng, n);
  if (condition_a) {
    // weighted sum pinned to c I: condition (a) holds with non-commuting H_j
    hs = pinned_sum_family(rng, m, n, w);
  } else {
    for (int j = 0; j < n; ++j) hs.push_back(random_hermitian(rng, m, 0.8));
  }

  const TaylorState state = taylor_recursion(hs, w, 4);
  const TaylorClosedForms forms = taylor_closed_forms(hs, w);
  double scale = 1.0;
  for (const HermitianMatrix& h : hs) scale = std::max(scale, h.frobenius_norm());
  scale = std::pow(scale, 4.0) + 1.0;

  for (int k = 0; k < 4; ++k) {
    out.slack(1e-10 * scale -
              (state.x[static_cast<size_t>(k)].matrix() - forms.x[static_cast<size_t>(k)].matrix())
                  .frobenius_norm());
    out.slack(1e-10 * scale -
              (state.y[static_cast<size_t>(k)].matrix() - forms.y[static_cast<size_t>(k)].matrix())
                  .frobenius_norm());
  }
  out.slack(1e-12 * scale - state.z_sums[0].frobenius_norm());

  // trace chain: exact for orders 1..3, order-4 defect is the commutator sum
  const ComplexMatrix h1 = state.h_moments[0].matrix();
  double kfact = 1.0;
  ComplexMatrix h1p = h1;
  for (int k = 1; k <= 3; ++k) {
    kfact *= k;
    if (k > 1) h1p = h1p * h1;
    out.slack(1e-10 * scale - std::abs(state.x[static_cast<size_t>(k - 1)].trace() -
                                       h1p.trace().real() / kfact));
  }
  h1p = h1p * h1;
  const double defect = state.x[3].trace() - h1p.trace().real() / 24.0;
  double comm_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double c = commutator(h1, hs[static_cast<size_t>(j)].matrix()).frobenius_norm();
    comm_sum += w[j] * c * c;
  }
  out.slack(1e-9 * scale - std::abs(defect + comm_sum / 12.0));
  if (condition_a) out.slack(1e-9 * scale - std::abs(defect));

  if (i < 5) {  // solver-based finite-difference oracle
    KarcherConfig kcfg;
    kcfg.tol = cfg.tol("karcher_tol", 1e-12);
    const FiniteDifferenceTaylor fd = finite_difference_taylor(hs, w, 3, 0.05, kcfg);
    for (int k = 0; k < 3; ++k) {
      const double err = (fd.x[static_cast<size_t>(k)].matrix() -
                          state.x[static_cast<size_t>(k)].matrix())
                             .frobenius_norm();
      out.slack(std::max(1e-6, 10.0 * fd.error_estimate[static_cast<size_t>(k)]) - err);
    }
  }

  if (i == 0) {  // single matrix: plain exponential series
    const std::vector<HermitianMatrix> one{hs[0]};
    const TaylorState s1 = taylor_recursion(one, WeightVector::uniform(1), 4);
    ComplexMatrix p = hs[0].matrix();
    double f = 1.0;
    for (int k = 1; k <= 4; ++k) {
      f *= k;
      if (k > 1) p = p * hs[0].matrix();
      out.slack(1e-12 * scale -
                (s1.x[static_cast<size_t>(k - 1)].matrix() - (1.0 / f) * p).frobenius_norm());
    }
  }
}

// --------------------------------------------------------------- eqcase ----

void eqcase_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int m = clamp_dim(3, cfg), n = 3;
  const double eq_tol = cfg.tol("eq_tol", tol::eq_case);
  KarcherConfig kcfg;
  kcfg.tol = cfg.tol("karcher_tol", 1e-12);
  const NormKind norm = (i % 3 == 0)   ? NormKind::trace()
                        : (i % 3 == 1) ? NormKind::frobenius()
                                       : NormKind::schatten(3.0);
  const WeightVector w = random_weights(rng, n);

  std::vector<PdMatrix> as;
  enum class Family { commuting, condition_a, generic };
  const Family fam = i < 50 ? Family::commuting : (i < 70 ? Family::condition_a : Family::generic);

  if (fam == Family::commuting) {
    as = random_commuting_family(rng, m, n);
  } else if (fam == Family::condition_a) {
    const std::vector<HermitianMatrix> hs = pinned_sum_family(rng, m, n, w);
    double min_comm = kInf;
    for (int a0 = 0; a0 < n; ++a0)
      for (int b0 = a0 + 1; b0 < n; ++b0)
        min_comm = std::min(min_comm, commutator(hs[static_cast<size_t>(a0)].matrix(),
                                                 hs[static_cast<size_t>(b0)].matrix())
                                          .frobenius_norm());
    out.slack(min_comm - 1e-6);  // witnesses: weaker than pairwise commutation
    for (const HermitianMatrix& h : hs) as.push_back(matrix_exp(h));
  } else {
    for (int j = 0; j < n; ++j) as.push_back(random_spread_pd(rng, m));
  }

  const EqualityCaseReport rep = equality_case_check(as, w, norm, 2.0, eq_tol, kcfg);

  // the four conditions are equivalent: verdicts must agree on every input
  out.require(rep.a == rep.b && rep.b == rep.c && rep.c == rep.d);

  if (fam == Family::generic) {
    out.require(!rep.a && !rep.b && !rep.c && !rep.d);
    out.slack(rep.e_max_decrease - 1e-6);  // strict decrease somewhere on the grid
  } else {
    out.require(rep.a && rep.b && rep.c && rep.d);
    out.slack(eq_tol - std::max({rep.a_value, rep.b_value, rep.c_value, rep.d_value}));
    out.require(rep.e_not_strictly_decreasing);  // flat probe
  }
}

// ------------------------------------------------------------------ ltk ----

void ltk_case(long i, uint64_t seed, CaseResult& out, const RunConfig& cfg) {
  Rng rng(seed);
  const int m = clamp_dim(2 + static_cast<int>(i % 3), cfg);
  const std::vector<double> grid{0.1, 0.05, 0.025, 0.0125};

  if (i < 10) {
    // commuting singular pair: the limit is attained at every t; probe where
    // the 1/t lift does not amplify clustered-spectrum roundoff past the bound
    const ComplexMatrix u = haar_like_unitary(rng, m);
    std::vector<double> da(static_cast<size_t>(m), 0.0), db(static_cast<size_t>(m), 0.0);
    const int ra = 1 + static_cast<int>(i % std::max(1, m - 1));
    for (int k = 0; k < ra; ++k) {
      da[static_cast<size_t>(k)] = rng.log_uniform(0.5, 2.0);
      db[static_cast<size_t>(k)] = rng.log_uniform(0.5, 2.0);
    }
    const PsdMatrix a = PsdMatrix::from_factors(u, da);
    const PsdMatrix b = PsdMatrix::from_factors(u, db);
    const LieTrotterKatoResult res = lie_trotter_kato(a, b, {0.5, 0.25, 0.1});
    double scale = 1.0 + res.target.matrix().frobenius_norm();
    for (const auto& [t, err] : res.errors) out.slack(1e-12 * scale - err);
    return;
  }

  const int ra = 1 + rng.uniform_int(0, m - 2);
  const int rb = 1 + rng.uniform_int(0, m - 2);
  const PsdMatrix a = random_psd_rank(rng, m, ra);
  const PsdMatrix b = random_psd_rank(rng, m, rb);
  const LieTrotterKatoResult res = lie_trotter_kato(a, b, grid);
  for (size_t k = 0; k + 1 < res.errors.size(); ++k)
    out.slack(res.errors[k].second - res.errors[k + 1].second);
}

}  // namespace

double RunConfig::tol(const std::string& key, double fallback) const {
  const auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

int RunConfig::effective_threads() const {
  if (threads > 0) return threads;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("LOGMAJ_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"araki",   "extended", "divergence", "gt",
                                              "karcher", "taylor",   "eqcase",     "ltk"};
  return names;
}

SuiteOutcome run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "all") {
    SuiteOutcome all;
    all.suite = "all";
    all.seed = cfg.seed;
    all.worst_margin = kInf;
    for (const std::string& sub : suite_names()) {
      SuiteOutcome o = run_suite(sub, cfg);
      all.cases += o.cases;
      all.failures += o.failures;
      all.worst_margin = std::min(all.worst_margin, o.worst_margin);
      all.seconds += o.seconds;
      for (std::string& line : o.case_lines) all.case_lines.push_back(std::move(line));
    }
    return all;
  }

  auto with = [&](long n, void (*fn)(long, uint64_t, CaseResult&, const RunConfig&)) {
    return run_cases(name, cfg, n,
                     [&cfg, fn](long i, uint64_t s, CaseResult& r) { fn(i, s, r, cfg); });
  };

  if (name == "araki") return with(1000, araki_case);
  if (name == "extended") return with(500, extended_case);
  if (name == "divergence") return with(200, divergence_case);
  if (name == "gt") return with(200, gt_case);
  if (name == "karcher") return with(100, karcher_case);
  if (name == "taylor") return with(100, taylor_case);
  if (name == "eqcase") return with(120, eqcase_case);
  if (name == "ltk") return with(50, ltk_case);
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::string summary_json(const SuiteOutcome& outcome) {
  nlohmann::json j{{"suite", outcome.suite},
                   {"cases", outcome.cases},
                   {"failures", outcome.failures},
                   {"worst_margin", std::isfinite(outcome.worst_margin)
                                        ? nlohmann::json(outcome.worst_margin)
                                        : nlohmann::json(outcome.worst_margin > 0 ? "+inf" : "-inf")},
                   {"seed", outcome.seed}};
  return j.dump();
}

void write_report(const SuiteOutcome& outcome, const RunConfig& cfg) {
  if (cfg.out.empty()) return;
  std::string text;
  if (cfg.format == "csv") {
    text += "suite,case,ok,margin\n";
    for (size_t i = 0; i < outcome.case_lines.size(); ++i) {
      const nlohmann::json j = nlohmann::json::parse(outcome.case_lines[i]);
      text += j.at("suite").get<std::string>() + "," + std::to_string(j.at("case").get<long>()) +
              "," + (j.at("ok").get<bool>() ? "1" : "0") + "," + j.at("margin").dump() + "\n";
    }
  } else {
    for (const std::string& line : outcome.case_lines) text += line + "\n";
    text += summary_json(outcome) + "\n";
  }
  write_text_file(cfg.out, text);
}

}  // namespace logmaj
