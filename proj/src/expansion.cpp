#include "logmaj/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace logmaj {

namespace {

void require_hermitian_family(const std::vector<HermitianMatrix>& h, const WeightVector& w,
                              const char* what) {
  if (h.empty()) throw std::invalid_argument(std::string(what) + ": empty matrix list");
  if (static_cast<int>(h.size()) != w.size())
    throw std::invalid_argument(std::string(what) + ": weight count does not match matrix count");
  for (const HermitianMatrix& m : h) require_same_dim(h.front().matrix(), m.matrix(), what);
}

// ordered compositions of k into exactly r parts >= 1
void for_each_composition(int k, int r, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& emit) {
  if (r == 1) {
    parts.push_back(k);
    emit(parts);
    parts.pop_back();
    return;
  }
  for (int first = 1; first <= k - (r - 1); ++first) {
    parts.push_back(first);
    for_each_composition(k - first, r - 1, parts, emit);
    parts.pop_back();
  }
}

}  // namespace

TaylorState taylor_recursion(const std::vector<HermitianMatrix>& h, const WeightVector& w,
                             int order) {
  require_hermitian_family(h, w, "taylor_recursion");
  if (order < 1) throw std::invalid_argument("taylor_recursion: order >= 1 required");
  if (order > 8)
    throw std::invalid_argument("taylor_recursion: order capped at 8 (composition sums explode)");

  const int n = static_cast<int>(h.size());
  const int m = h.front().dim();
  const int K = order;

  // H_j^l for l = 0..K and the weighted moments
  std::vector<std::vector<ComplexMatrix>> hpow(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    hpow[static_cast<size_t>(j)].push_back(ComplexMatrix::identity(m));
    for (int l = 1; l <= K; ++l)
      hpow[static_cast<size_t>(j)].push_back(hpow[static_cast<size_t>(j)].back() *
                                             h[static_cast<size_t>(j)].matrix());
  }
  std::vector<ComplexMatrix> moment(static_cast<size_t>(K + 1), ComplexMatrix(m));
  moment[0] = ComplexMatrix::identity(m);
  for (int l = 1; l <= K; ++l)
    for (int j = 0; j < n; ++j) moment[static_cast<size_t>(l)] += w[j] * hpow[static_cast<size_t>(j)][static_cast<size_t>(l)];

  // factorials for the exact 1/l! prefactors
  std::vector<double> factorial(static_cast<size_t>(K + 1), 1.0);
  for (int l = 1; l <= K; ++l) factorial[static_cast<size_t>(l)] = factorial[static_cast<size_t>(l - 1)] * l;

  std::vector<ComplexMatrix> y(static_cast<size_t>(K + 1), ComplexMatrix(m));  // y[0] = I
  y[0] = ComplexMatrix::identity(m);
  std::vector<std::vector<ComplexMatrix>> z(static_cast<size_t>(K + 1),
                                            std::vector<ComplexMatrix>(static_cast<size_t>(n), ComplexMatrix(m)));
  std::vector<ComplexMatrix> zsum(static_cast<size_t>(K + 1), ComplexMatrix(m));

  y[1] = 0.5 * moment[1];
  for (int j = 0; j < n; ++j) z[1][static_cast<size_t>(j)] = moment[1] - h[static_cast<size_t>(j)].matrix();
  // zsum[1] stays zero by the Karcher equation

  for (int k = 2; k <= K; ++k) {
    // Z^{(k)} from the lower-order Z_{k_i,j}
    ComplexMatrix zk(m);
    for (int r = 2; r <= k; ++r) {
      const double coeff = (r % 2 == 0 ? 1.0 : -1.0) / r;
      ComplexMatrix inner(m);
      std::vector<int> parts;
      for_each_composition(k, r, parts, [&](const std::vector<int>& comp) {
        for (int j = 0; j < n; ++j) {
          ComplexMatrix prod = z[static_cast<size_t>(comp[0])][static_cast<size_t>(j)];
          for (size_t i = 1; i < comp.size(); ++i)
            prod = prod * z[static_cast<size_t>(comp[i])][static_cast<size_t>(j)];
          inner += w[j] * prod;
        }
      });
      zk += coeff * inner;
    }
    zsum[static_cast<size_t>(k)] = hermitian_part(zk);

    // 2 Y_k = Z^{(k)} - sum_{r=1}^{k-1} Y_r Y_{k-r}
    //        - sum_{l=1}^{k} (-1)^l/l! sum_{r=0}^{k-l} Y_r H^{(l)} Y_{k-l-r}
    ComplexMatrix acc = zsum[static_cast<size_t>(k)];
    for (int r = 1; r <= k - 1; ++r) acc -= y[static_cast<size_t>(r)] * y[static_cast<size_t>(k - r)];
    for (int l = 1; l <= k; ++l) {
      const double coeff = (l % 2 == 0 ? 1.0 : -1.0) / factorial[static_cast<size_t>(l)];
      ComplexMatrix inner(m);
      for (int r = 0; r <= k - l; ++r)
        inner += y[static_cast<size_t>(r)] * moment[static_cast<size_t>(l)] * y[static_cast<size_t>(k - l - r)];
      acc -= coeff * inner;
    }
    y[static_cast<size_t>(k)] = 0.5 * hermitian_part(acc);

    // Z_{k,j} = 2 Y_k + sum_{r=1}^{k-1} Y_r Y_{k-r}
    //          + sum_{l=1}^{k} (-1)^l/l! sum_{r=0}^{k-l} Y_r H_j^l Y_{k-l-r}
    for (int j = 0; j < n; ++j) {
      ComplexMatrix zj = 2.0 * y[static_cast<size_t>(k)];
      for (int r = 1; r <= k - 1; ++r) zj += y[static_cast<size_t>(r)] * y[static_cast<size_t>(k - r)];
      for (int l = 1; l <= k; ++l) {
        const double coeff = (l % 2 == 0 ? 1.0 : -1.0) / factorial[static_cast<size_t>(l)];
        ComplexMatrix inner(m);
        for (int r = 0; r <= k - l; ++r)
          inner += y[static_cast<size_t>(r)] * hpow[static_cast<size_t>(j)][static_cast<size_t>(l)] *
                   y[static_cast<size_t>(k - l - r)];
        zj += coeff * inner;
      }
      z[static_cast<size_t>(k)][static_cast<size_t>(j)] = hermitian_part(zj);
    }
  }

  TaylorState state;
  state.order = K;
  for (int k = 1; k <= K; ++k) {
    ComplexMatrix xk(m);
    for (int l = 0; l <= k; ++l) xk += y[static_cast<size_t>(l)] * y[static_cast<size_t>(k - l)];
    state.x.push_back(HermitianMatrix(hermitian_part(xk)));
    state.y.push_back(HermitianMatrix(y[static_cast<size_t>(k)]));
    std::vector<HermitianMatrix> zrow;
    for (int j = 0; j < n; ++j) zrow.push_back(HermitianMatrix(z[static_cast<size_t>(k)][static_cast<size_t>(j)]));
    state.z.push_back(std::move(zrow));
    state.h_moments.push_back(HermitianMatrix(moment[static_cast<size_t>(k)]));
    state.z_sums.push_back(HermitianMatrix(zsum[static_cast<size_t>(k)]));
  }
  return state;
}

TaylorClosedForms taylor_closed_forms(const std::vector<HermitianMatrix>& h, const WeightVector& w) {
  require_hermitian_family(h, w, "taylor_closed_forms");
  const int n = static_cast<int>(h.size());
  const int m = h.front().dim();

  ComplexMatrix h1(m), h2(m);
  for (int j = 0; j < n; ++j) {
    const ComplexMatrix& hj = h[static_cast<size_t>(j)].matrix();
    h1 += w[j] * hj;
    h2 += w[j] * (hj * hj);
  }
  ComplexMatrix s_jh1j(m);   // sum_j w_j H_j H1 H_j
  ComplexMatrix s_h1jh1j(m); // sum_j w_j H1 H_j H1 H_j
  ComplexMatrix s_jh1jh1(m); // sum_j w_j H_j H1 H_j H1
  for (int j = 0; j < n; ++j) {
    const ComplexMatrix& hj = h[static_cast<size_t>(j)].matrix();
    s_jh1j += w[j] * (hj * h1 * hj);
    s_h1jh1j += w[j] * (h1 * hj * h1 * hj);
    s_jh1jh1 += w[j] * (hj * h1 * hj * h1);
  }

  const ComplexMatrix h1sq = h1 * h1;
  const ComplexMatrix h1cube = h1sq * h1;
  const ComplexMatrix h1quad = h1sq * h1sq;

  TaylorClosedForms forms;
  forms.y.push_back(HermitianMatrix(0.5 * h1));
  forms.x.push_back(HermitianMatrix(h1));

  forms.y.push_back(HermitianMatrix((1.0 / 8.0) * h1sq));
  forms.x.push_back(HermitianMatrix(0.5 * h1sq));

  const ComplexMatrix y3 =
      (1.0 / 48.0) * h1cube - (1.0 / 24.0) * (h1 * h2) - (1.0 / 24.0) * (h2 * h1) + (1.0 / 12.0) * s_jh1j;
  forms.y.push_back(HermitianMatrix(hermitian_part(y3)));
  const ComplexMatrix x3 =
      (1.0 / 6.0) * (h1cube - 0.5 * (h1 * h2) - 0.5 * (h2 * h1) + s_jh1j);
  forms.x.push_back(HermitianMatrix(hermitian_part(x3)));

  const ComplexMatrix y4 = (1.0 / 384.0) * h1quad - (1.0 / 96.0) * (h1sq * h2) -
                           (1.0 / 48.0) * (h1 * h2 * h1) - (1.0 / 96.0) * (h2 * h1sq) +
                           (1.0 / 48.0) * s_h1jh1j + (1.0 / 48.0) * s_jh1jh1;
  forms.y.push_back(HermitianMatrix(hermitian_part(y4)));
  const ComplexMatrix x4 = (1.0 / 24.0) * (h1quad - h1sq * h2 - 2.0 * (h1 * h2 * h1) - h2 * h1sq +
                                           2.0 * s_h1jh1j + 2.0 * s_jh1jh1);
  forms.x.push_back(HermitianMatrix(hermitian_part(x4)));
  return forms;
}

FiniteDifferenceTaylor finite_difference_taylor(const std::vector<HermitianMatrix>& h,
                                                const WeightVector& w, int order, double step,
                                                const KarcherConfig& cfg) {
  require_hermitian_family(h, w, "finite_difference_taylor");
  if (order < 1 || order > 4)
    throw std::invalid_argument("finite_difference_taylor: order in 1..4 required");
  if (!(step > 0.0)) throw std::invalid_argument("finite_difference_taylor: step > 0 required");

  const int m = h.front().dim();
  auto mean_at = [&](double t) -> ComplexMatrix {
    if (t == 0.0) return ComplexMatrix::identity(m);
    std::vector<PdMatrix> exps;
    exps.reserve(h.size());
    for (const HermitianMatrix& hm : h) exps.push_back(matrix_exp(HermitianMatrix(t * hm.matrix())));
    return karcher_mean(exps, w, cfg).mean.matrix();
  };

  // g[o + 4] holds G at t = o * step
  std::vector<ComplexMatrix> g;
  g.reserve(9);
  for (int o = -4; o <= 4; ++o) g.push_back(mean_at(o * step));
  auto at = [&](int o) -> const ComplexMatrix& { return g[static_cast<size_t>(o + 4)]; };

  // central stencils with spacing s = u * step, u in {1, 2}
  auto derivative = [&](int k, int u) -> ComplexMatrix {
    const double s = u * step;
    switch (k) {
      case 1:
        return (1.0 / (2.0 * s)) * (at(u) - at(-u));
      case 2:
        return (1.0 / (s * s)) * (at(u) - 2.0 * at(0) + at(-u));
      case 3:
        return (1.0 / (2.0 * s * s * s)) * (at(2 * u) - 2.0 * at(u) + 2.0 * at(-u) - at(-2 * u));
      default:
        return (1.0 / (s * s * s * s)) *
               (at(2 * u) - 4.0 * at(u) + 6.0 * at(0) - 4.0 * at(-u) + at(-2 * u));
    }
  };

  FiniteDifferenceTaylor fd;
  double kfact = 1.0;
  for (int k = 1; k <= order; ++k) {
    kfact *= k;
    const ComplexMatrix d1 = derivative(k, 1);
    const ComplexMatrix d2 = derivative(k, 2);
    const ComplexMatrix richardson = (1.0 / 3.0) * (4.0 * d1 - d2);
    fd.x.push_back(HermitianMatrix(hermitian_part((1.0 / kfact) * richardson)));
    fd.error_estimate.push_back((d1 - d2).frobenius_norm() / (3.0 * kfact));
  }
  return fd;
}

EqualityCaseReport equality_case_check(const std::vector<PdMatrix>& a, const WeightVector& w,
                                       const NormKind& norm, double t_probe, double eq_tol,
                                       const KarcherConfig& cfg) {
  if (t_probe == 0.0) throw std::invalid_argument("equality_case_check: t_probe != 0 required");
  if (!norm.strictly_increasing())
    throw std::invalid_argument("equality_case_check: strictly increasing norm required, got " +
                                norm.name());
  if (a.empty() || static_cast<int>(a.size()) != w.size())
    throw std::invalid_argument("equality_case_check: matrix/weight count mismatch");

  // the probes solve at powers up to A^4, where the log/exp roundoff floor
  // can exceed the plain solver tolerance; verdicts only need a residual one
  // order below eq_tol
  KarcherConfig solve_cfg = cfg;
  solve_cfg.tol = std::max(cfg.tol, 0.1 * eq_tol);

  const PdMatrix le = log_euclidean_mean(a, w);

  EqualityCaseReport rep;
  rep.tol = eq_tol;

  for (const PdMatrix& aj : a) {
    const double scale = 1.0 + aj.matrix().frobenius_norm() * le.matrix().frobenius_norm();
    rep.a_value = std::max(rep.a_value, commutator(aj.matrix(), le.matrix()).frobenius_norm() / scale);
  }
  rep.a = rep.a_value <= eq_tol;

  auto mean_of_powers = [&](double t) {
    std::vector<PdMatrix> powered;
    powered.reserve(a.size());
    for (const PdMatrix& m : a) powered.push_back(PdMatrix(matrix_power(m, t)));
    return karcher_mean(powered, w, solve_cfg).mean;
  };

  for (double t : {1.0, -1.0, t_probe, -t_probe}) {
    const PdMatrix g = mean_of_powers(t);
    const PdMatrix le_t(matrix_power(le, t));
    rep.b_value = std::max(rep.b_value, riemannian_distance(g, le_t));
  }
  rep.b = rep.b_value <= eq_tol;

  const PdMatrix g_probe = mean_of_powers(t_probe);
  rep.c_value = std::abs(norm(g_probe.matrix()) - norm(matrix_power(le, t_probe).matrix()));
  rep.c = rep.c_value <= eq_tol;
  rep.d_value = std::abs(norm(matrix_power(g_probe, 1.0 / t_probe).matrix()) - norm(le.matrix()));
  rep.d = rep.d_value <= eq_tol;

  // probe of t -> ||G(A^t)^{1/t}|| on a log grid in [0.1, 4]
  const int points = 13;
  rep.e_max_increase = -std::numeric_limits<double>::infinity();
  rep.e_max_decrease = -std::numeric_limits<double>::infinity();
  double prev = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = 0.1 * std::pow(40.0, static_cast<double>(i) / (points - 1));
    const double f = norm(matrix_power(mean_of_powers(t), 1.0 / t).matrix());
    rep.e_probe.push_back({t, f});
    if (i > 0) {
      rep.e_max_increase = std::max(rep.e_max_increase, f - prev);
      rep.e_max_decrease = std::max(rep.e_max_decrease, prev - f);
      if (f - prev >= -eq_tol) rep.e_not_strictly_decreasing = true;
    }
    prev = f;
  }
  return rep;
}

LieTrotterKatoResult lie_trotter_kato(const PsdMatrix& a, const PsdMatrix& b,
                                      const std::vector<double>& t_sequence) {
  require_same_dim(a.matrix(), b.matrix(), "lie_trotter_kato");
  for (double t : t_sequence)
    if (!(t > 0.0)) throw std::invalid_argument("lie_trotter_kato: t values must be positive");

  const PsdMatrix p0 = projection_meet(support_projection(a), support_projection(b));
  const ComplexMatrix p = p0.matrix();
  const ComplexMatrix compressed =
      hermitian_part(p * support_log(a).matrix() * p + p * support_log(b).matrix() * p);
  const ComplexMatrix target_mat =
      hermitian_part(p * matrix_exp(HermitianMatrix(compressed)).matrix() * p);

  LieTrotterKatoResult result{PsdMatrix(target_mat), {}};
  for (double t : t_sequence) {
    const ComplexMatrix at2 = matrix_power(a, t / 2.0).matrix();
    const ComplexMatrix bt = matrix_power(b, t).matrix();
    const PsdMatrix inner(hermitian_part(at2 * bt * at2));
    const PsdMatrix lifted = matrix_power(inner, 1.0 / t);
    result.errors.push_back({t, (lifted.matrix() - result.target.matrix()).frobenius_norm()});
  }
  return result;
}

}  // namespace logmaj
