#include "logmaj/golden_thompson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace logmaj {

namespace {
constexpr double kPi = std::numbers::pi;
}

double beta_density(double theta, double t) {
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("beta_density: theta in [0,1)");
  if (theta == 0.0) return kPi / (2.0 * (std::cosh(kPi * t) + 1.0));
  return std::sin(kPi * theta) / (2.0 * theta * (std::cosh(kPi * t) + std::cos(kPi * theta)));
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = -x;
    nodes[static_cast<size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
}

double BetaQuadrature::mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

BetaQuadrature build_quadrature(double theta, double eps, int panel_order) {
  if (!(eps > 0.0)) throw std::invalid_argument("build_quadrature: eps > 0 required");
  if (!(theta >= 0.0 && theta < 1.0)) throw std::invalid_argument("build_quadrature: theta in [0,1)");
  if (panel_order < 2) throw std::invalid_argument("build_quadrature: panel order >= 2");

  // density <= pi * e^{-pi t} for t >= ln(4)/pi, so both tails beyond T carry
  // at most 2 e^{-pi T}
  const double T = std::max(1.0, std::log(2.0 / eps) / kPi);
  const int n_panels = static_cast<int>(std::ceil(2.0 * T / 0.5));
  const double width = 2.0 * T / n_panels;

  std::vector<double> gx, gw;
  gauss_legendre(panel_order, gx, gw);

  BetaQuadrature quad;
  quad.theta = theta;
  quad.truncation = T;
  quad.tail_bound = 2.0 * std::exp(-kPi * T);
  quad.target_eps = eps;
  quad.panel_order = panel_order;
  quad.nodes.reserve(static_cast<size_t>(n_panels * panel_order));
  quad.weights.reserve(static_cast<size_t>(n_panels * panel_order));
  for (int p = 0; p < n_panels; ++p) {
    const double lo = -T + p * width;
    const double mid = lo + 0.5 * width;
    for (int i = 0; i < panel_order; ++i) {
      const double t = mid + 0.5 * width * gx[static_cast<size_t>(i)];
      quad.nodes.push_back(t);
      quad.weights.push_back(0.5 * width * gw[static_cast<size_t>(i)] * beta_density(theta, t));
    }
  }
  return quad;
}

namespace {

// prod_j U_j diag(e^{(1+it) lambda_j}) U_j*, left to right
ComplexMatrix node_product(const std::vector<EigResult>& eigs, double t) {
  const Complex expo(1.0, t);
  ComplexMatrix prod = ComplexMatrix::identity(eigs.front().vectors.dim());
  for (const EigResult& e : eigs) {
    std::vector<Complex> d(static_cast<size_t>(e.values.size()));
    for (int i = 0; i < e.values.size(); ++i) d[static_cast<size_t>(i)] = std::exp(expo * e.values[i]);
    const int m = e.vectors.dim();
    ComplexMatrix factor(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < m; ++k)
          acc += e.vectors(i, k) * d[static_cast<size_t>(k)] * std::conj(e.vectors(j, k));
        factor(i, j) = acc;
      }
    prod = prod * factor;
  }
  return prod;
}

std::vector<EigResult> eig_list(const std::vector<HermitianMatrix>& h) {
  if (h.empty()) throw std::invalid_argument("golden-thompson: empty matrix list");
  for (const HermitianMatrix& m : h) require_same_dim(h.front().matrix(), m.matrix(), "golden-thompson");
  std::vector<EigResult> eigs;
  eigs.reserve(h.size());
  for (const HermitianMatrix& m : h) eigs.push_back(jacobi_eig(m.matrix()));
  return eigs;
}

}  // namespace

GtReport gt_check(const std::vector<HermitianMatrix>& h, double r, const BetaQuadrature& quad,
                  std::vector<std::pair<double, double>>* node_values) {
  if (!(r > 0.0)) throw std::invalid_argument("gt_check: r > 0 required");
  if (quad.theta != 0.0) throw std::invalid_argument("gt_check: quadrature must carry theta = 0");

  const std::vector<EigResult> eigs = eig_list(h);
  ComplexMatrix sum(h.front().dim());
  for (const HermitianMatrix& m : h) sum += m.matrix();

  GtReport rep;
  rep.r = r;
  rep.quadrature_eps = quad.target_eps;
  rep.quadrature_mass = quad.mass();
  rep.lhs = matrix_exp(HermitianMatrix(r * sum)).trace();

  double rhs = 0.0;
  for (size_t k = 0; k < quad.nodes.size(); ++k) {
    const ComplexMatrix prod = node_product(eigs, quad.nodes[k]);
    const PsdMatrix gram(hermitian_part(prod.adjoint() * prod));
    const double integrand = matrix_power(gram, r / 2.0).trace();  // Tr |prod|^r
    rhs += quad.weights[k] * integrand;
    if (node_values) node_values->push_back({quad.nodes[k], integrand});
  }
  rep.rhs = rhs;
  rep.gap = rep.rhs - rep.lhs;
  return rep;
}

MajorizationReport gt_log_majorization(const std::vector<HermitianMatrix>& h, double theta,
                                       const BetaQuadrature& quad, double tolerance) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("gt_log_majorization: theta in (0,1] required");
  const bool dirac = theta == 1.0;  // beta_1 is the point mass at t = 0
  if (!dirac && std::abs(quad.theta - theta) > 1e-14)
    throw std::invalid_argument("gt_log_majorization: quadrature theta does not match");

  const std::vector<EigResult> eigs = eig_list(h);
  const int m = h.front().dim();

  // lhs: log lambda(|prod e^{theta H_j}|^{1/theta}) = log lambda(P*P) / (2 theta)
  ComplexMatrix prod_theta = ComplexMatrix::identity(m);
  for (const HermitianMatrix& hm : h)
    prod_theta = prod_theta * matrix_exp(HermitianMatrix(theta * hm.matrix())).matrix();
  const PsdMatrix gram_theta(hermitian_part(prod_theta.adjoint() * prod_theta));
  std::vector<double> log_lhs(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    log_lhs[static_cast<size_t>(i)] = std::log(gram_theta.eigenvalues()[i]) / (2.0 * theta);

  // rhs: entrywise quadrature of the sorted log-singular-value vectors
  std::vector<double> log_rhs(static_cast<size_t>(m), 0.0);
  if (dirac) {
    const ComplexMatrix prod = node_product(eigs, 0.0);
    const PsdMatrix gram(hermitian_part(prod.adjoint() * prod));
    for (int i = 0; i < m; ++i) log_rhs[static_cast<size_t>(i)] = 0.5 * std::log(gram.eigenvalues()[i]);
  } else {
    for (size_t k = 0; k < quad.nodes.size(); ++k) {
      const ComplexMatrix prod = node_product(eigs, quad.nodes[k]);
      const PsdMatrix gram(hermitian_part(prod.adjoint() * prod));
      for (int i = 0; i < m; ++i)
        log_rhs[static_cast<size_t>(i)] += quad.weights[k] * 0.5 * std::log(gram.eigenvalues()[i]);
    }
  }

  return log_report_from_logs(log_lhs, log_rhs, tolerance);
}

BlockTriple equality_block_triple(const HermitianMatrix& h, const HermitianMatrix& k) {
  require_same_dim(h.matrix(), k.matrix(), "equality_block_triple");
  const double hk = commutator(h.matrix(), k.matrix()).frobenius_norm();
  if (!(hk > 0.0))
    throw std::invalid_argument("equality_block_triple: H and K must not commute");

  const ComplexMatrix h1 = direct_sum(h.matrix(), h.matrix());
  const ComplexMatrix h2 = direct_sum(-1.0 * h.matrix(), -1.0 * k.matrix());
  const ComplexMatrix h3 = direct_sum(k.matrix(), k.matrix());

  BlockTriple triple{HermitianMatrix(h1), HermitianMatrix(h2), HermitianMatrix(h3), {}, 0.0};
  const ComplexMatrix total = h1 + h2 + h3;
  const std::vector<std::pair<std::string, ComplexMatrix>> checks = {
      {"[H1,H2]", commutator(h1, h2)},
      {"[H1,H3]", commutator(h1, h3)},
      {"[H2,H3]", commutator(h2, h3)},
      {"[H1,H2+H3]", commutator(h1, h2 + h3)},
      {"[H2,H1+H3]", commutator(h2, h1 + h3)},
      {"[H3,H1+H2]", commutator(h3, h1 + h2)},
      {"[H1,H1+H2+H3]", commutator(h1, total)},
      {"[H2,H1+H2+H3]", commutator(h2, total)},
      {"[H3,H1+H2+H3]", commutator(h3, total)},
  };
  triple.min_commutator_norm = std::numeric_limits<double>::infinity();
  for (const auto& [label, c] : checks) {
    const double norm = c.frobenius_norm();
    triple.commutator_norms.push_back({label, norm});
    triple.min_commutator_norm = std::min(triple.min_commutator_norm, norm);
  }
  return triple;
}

}  // namespace logmaj
