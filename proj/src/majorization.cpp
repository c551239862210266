#include "logmaj/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace logmaj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_equal_lengths(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("majorization: sequence length mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) throw std::invalid_argument("majorization: empty sequences");
}

bool log_holds(const std::vector<double>& margins, double tolerance) {
  const size_t m = margins.size();
  for (size_t k = 0; k + 1 < m; ++k)
    if (!(margins[k] >= -tolerance)) return false;
  return std::abs(margins[m - 1]) <= tolerance;
}

}  // namespace

double MajorizationReport::worst_margin() const {
  double w = kInf;
  for (double x : margins) w = std::min(w, x);
  return w;
}

std::vector<double> decreasing_rearrangement(std::vector<double> a) {
  for (double x : a)
    if (!std::isfinite(x)) throw std::invalid_argument("decreasing_rearrangement: non-finite entry");
  std::sort(a.begin(), a.end(), std::greater<double>());
  return a;
}

MajorizationReport check_log_majorization(const std::vector<double>& a, const std::vector<double>& b,
                                          double tolerance) {
  require_equal_lengths(a, b);
  for (double x : a)
    if (!(x >= 0.0)) throw std::invalid_argument("check_log_majorization: negative entry");
  for (double x : b)
    if (!(x >= 0.0)) throw std::invalid_argument("check_log_majorization: negative entry");

  const std::vector<double> ad = decreasing_rearrangement(a);
  const std::vector<double> bd = decreasing_rearrangement(b);
  const size_t m = ad.size();

  MajorizationReport rep;
  rep.kind = MajorizationKind::log;
  rep.tol = tolerance;
  rep.margins.resize(m);
  rep.zeros_a = static_cast<int>(std::count(ad.begin(), ad.end(), 0.0));
  rep.zeros_b = static_cast<int>(std::count(bd.begin(), bd.end(), 0.0));

  double acc = 0.0;
  for (size_t k = 0; k < m; ++k) {
    const double ai = ad[k];
    const double bi = bd[k];
    if (ai == 0.0 && bi == 0.0) {
      rep.margins[k] = 0.0;  // 0 = 0 from here on
    } else if (ai == 0.0) {
      rep.margins[k] = kInf;  // 0 <= positive product
    } else if (bi == 0.0) {
      rep.margins[k] = -kInf;  // positive product vs 0
    } else {
      acc += std::log(bi) - std::log(ai);
      rep.margins[k] = acc;
    }
  }
  rep.final_equality_gap = rep.margins[m - 1];
  rep.holds = log_holds(rep.margins, tolerance);
  return rep;
}

MajorizationReport check_weak_majorization(const std::vector<double>& a, const std::vector<double>& b,
                                           double tolerance) {
  require_equal_lengths(a, b);
  const std::vector<double> ad = decreasing_rearrangement(a);
  const std::vector<double> bd = decreasing_rearrangement(b);
  const size_t m = ad.size();

  MajorizationReport rep;
  rep.kind = MajorizationKind::weak;
  rep.tol = tolerance;
  rep.margins.resize(m);
  double acc = 0.0;
  for (size_t k = 0; k < m; ++k) {
    acc += bd[k] - ad[k];
    rep.margins[k] = acc;
  }
  rep.final_equality_gap = rep.margins[m - 1];
  rep.holds = true;
  for (double x : rep.margins)
    if (!(x >= -tolerance)) rep.holds = false;
  return rep;
}

MajorizationReport log_report_from_logs(const std::vector<double>& log_a,
                                        const std::vector<double>& log_b, double tolerance) {
  require_equal_lengths(log_a, log_b);
  const std::vector<double> ad = decreasing_rearrangement(log_a);
  const std::vector<double> bd = decreasing_rearrangement(log_b);
  const size_t m = ad.size();

  MajorizationReport rep;
  rep.kind = MajorizationKind::log;
  rep.tol = tolerance;
  rep.margins.resize(m);
  double acc = 0.0;
  for (size_t k = 0; k < m; ++k) {
    acc += bd[k] - ad[k];
    rep.margins[k] = acc;
  }
  rep.final_equality_gap = rep.margins[m - 1];
  rep.holds = log_holds(rep.margins, tolerance);
  return rep;
}

namespace {

// k-subsets of {0..m-1} in lexicographic order
std::vector<std::vector<int>> subsets_lex(int m, int k) {
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

ComplexMatrix submatrix(const ComplexMatrix& a, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  ComplexMatrix r(static_cast<int>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      r(static_cast<int>(i), static_cast<int>(j)) = a(rows[i], cols[j]);
  return r;
}

}  // namespace

ComplexMatrix compound_matrix(const ComplexMatrix& a, int k) {
  const int m = a.dim();
  if (k < 1 || k > m) throw std::invalid_argument("compound_matrix: k out of range");
  if (k == 1) return a;
  const std::vector<std::vector<int>> idx = subsets_lex(m, k);
  const int n = static_cast<int>(idx.size());
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r(i, j) = determinant(submatrix(a, idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]));
  return r;
}

namespace {

// the numerical kernel of a product of singular factors comes out as tiny
// positive garbage; pin it to exact zeros at the documented support cut so
// the determinant stage compares ranks, not roundoff
std::vector<double> cleaned_spectrum(const Spectrum& s, double rank_tolerance = tol::rank) {
  std::vector<double> v = s.values();
  const double cut = rank_tolerance * std::max(s.max(), 0.0);
  for (double& x : v)
    if (x <= cut) x = 0.0;
  return v;
}

}  // namespace

ArakiResult araki_pair(const PsdMatrix& a, const PsdMatrix& b, double p, double tolerance) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("araki_pair: p in (0,1] required");
  require_same_dim(a.matrix(), b.matrix(), "araki_pair");

  const ComplexMatrix ap2 = matrix_power(a, p / 2.0).matrix();
  const ComplexMatrix bp = matrix_power(b, p).matrix();
  const PsdMatrix lhs_mat(hermitian_part(ap2 * bp * ap2));

  const ComplexMatrix a12 = matrix_sqrt(a).matrix();
  const PsdMatrix inner(hermitian_part(a12 * b.matrix() * a12));
  std::vector<double> rhs_vals = cleaned_spectrum(inner.eigenvalues());
  for (double& x : rhs_vals) x = x > 0.0 ? std::pow(x, p) : 0.0;

  ArakiResult res{Spectrum(cleaned_spectrum(lhs_mat.eigenvalues())), Spectrum(std::move(rhs_vals)),
                  {}};
  res.report = check_log_majorization(res.lhs.values(), res.rhs.values(), tolerance);
  return res;
}

namespace {

void require_commuting(const PsdMatrix& x, const PsdMatrix& y, const char* label) {
  const double norm = commutator(x.matrix(), y.matrix()).frobenius_norm();
  const double bound = tol::commute * (1.0 + x.matrix().frobenius_norm() * y.matrix().frobenius_norm());
  if (norm > bound)
    throw std::invalid_argument(std::string("extended_araki: pair ") + label +
                                " does not commute, ||[X1,X2]||_F = " + std::to_string(norm));
}

// X1^theta * X2^{1-theta} for a commuting pair, honoring the endpoint
// convention for the zeroth power.
PsdMatrix blended_power(const PsdMatrix& x1, const PsdMatrix& x2, double theta,
                        EndpointConvention convention) {
  auto power_or_convention = [&](const PsdMatrix& x, double e) -> ComplexMatrix {
    if (e == 0.0) {
      if (convention == EndpointConvention::identity) return ComplexMatrix::identity(x.dim());
      return support_projection(x).matrix();
    }
    return matrix_power(x, e).matrix();
  };
  const ComplexMatrix prod = power_or_convention(x1, theta) * power_or_convention(x2, 1.0 - theta);
  return PsdMatrix(hermitian_part(prod));
}

double scalar_power_with_convention(double x, double e, EndpointConvention convention, double cut) {
  if (e == 0.0) {
    if (convention == EndpointConvention::identity) return 1.0;
    return x > cut ? 1.0 : 0.0;
  }
  return x > cut ? std::pow(x, e) : 0.0;
}

}  // namespace

ArakiResult extended_araki(const PsdMatrix& a1, const PsdMatrix& a2, const PsdMatrix& b1,
                           const PsdMatrix& b2, double theta, EndpointConvention convention,
                           double tolerance) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("extended_araki: theta in [0,1]");
  require_same_dim(a1.matrix(), a2.matrix(), "extended_araki");
  require_same_dim(a1.matrix(), b1.matrix(), "extended_araki");
  require_same_dim(a1.matrix(), b2.matrix(), "extended_araki");
  require_commuting(a1, a2, "(A1,A2)");
  require_commuting(b1, b2, "(B1,B2)");

  const PsdMatrix wa = blended_power(a1, a2, theta, convention);
  const PsdMatrix wb = blended_power(b1, b2, theta, convention);
  const ComplexMatrix wa12 = matrix_sqrt(wa).matrix();
  const PsdMatrix lhs_mat(hermitian_part(wa12 * wb.matrix() * wa12));

  auto outer_spectrum = [](const PsdMatrix& x, const PsdMatrix& y) {
    const ComplexMatrix x12 = matrix_sqrt(x).matrix();
    return PsdMatrix(hermitian_part(x12 * y.matrix() * x12)).eigenvalues();
  };
  const Spectrum s1 = outer_spectrum(a1, b1);
  const Spectrum s2 = outer_spectrum(a2, b2);

  const double cut1 = tol::rank * std::max(s1.max(), 0.0);
  const double cut2 = tol::rank * std::max(s2.max(), 0.0);
  std::vector<double> rhs_vals(static_cast<size_t>(s1.size()));
  for (int i = 0; i < s1.size(); ++i)
    rhs_vals[static_cast<size_t>(i)] =
        scalar_power_with_convention(s1[i], theta, convention, cut1) *
        scalar_power_with_convention(s2[i], 1.0 - theta, convention, cut2);

  ArakiResult res{Spectrum(cleaned_spectrum(lhs_mat.eigenvalues())), Spectrum(std::move(rhs_vals)),
                  {}};
  res.report = check_log_majorization(res.lhs.values(), res.rhs.values(), tolerance);
  return res;
}

NormCheckResult norm_interpolation_check(const PsdMatrix& a1, const PsdMatrix& a2, const PsdMatrix& b1,
                                     const PsdMatrix& b2, double theta, double r, const NormKind& norm,
                                     EndpointConvention convention, double tolerance) {
  if (!(r > 0.0)) throw std::invalid_argument("norm_interpolation_check: r > 0 required");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("norm_interpolation_check: theta in [0,1]");
  require_commuting(a1, a2, "(A1,A2)");
  require_commuting(b1, b2, "(B1,B2)");

  auto abs_power_norm = [&](const ComplexMatrix& x) {
    const PsdMatrix sq(hermitian_part(x.adjoint() * x));
    return norm(matrix_power(sq, r / 2.0).matrix());
  };

  const PsdMatrix wa = blended_power(a1, a2, theta, convention);
  const PsdMatrix wb = blended_power(b1, b2, theta, convention);

  NormCheckResult res;
  res.lhs = abs_power_norm(wa.matrix() * wb.matrix());
  const double n1 = abs_power_norm(a1.matrix() * b1.matrix());
  const double n2 = abs_power_norm(a2.matrix() * b2.matrix());
  res.rhs = scalar_power_with_convention(n1, theta, convention, 0.0) *
            scalar_power_with_convention(n2, 1.0 - theta, convention, 0.0);
  res.holds = res.lhs <= res.rhs + tolerance;
  return res;
}

EqualityProbe araki_equality_probe(const PsdMatrix& a, const PsdMatrix& b, double p, double q,
                                   const NormKind& norm) {
  if (!(p > 0.0 && p < q)) throw std::invalid_argument("araki_equality_probe: 0 < p < q required");
  if (!norm.strictly_increasing())
    throw std::invalid_argument("araki_equality_probe: strictly increasing norm required, got " +
                                norm.name());
  require_same_dim(a.matrix(), b.matrix(), "araki_equality_probe");

  auto scaled_norm = [&](double r) {
    const ComplexMatrix ar2 = matrix_power(a, r / 2.0).matrix();
    const ComplexMatrix br = matrix_power(b, r).matrix();
    const PsdMatrix inner(hermitian_part(ar2 * br * ar2));
    return norm(matrix_power(inner, 1.0 / r).matrix());
  };

  EqualityProbe probe;
  probe.gap = scaled_norm(q) - scaled_norm(p);
  probe.commutator_norm = commutator(a.matrix(), b.matrix()).frobenius_norm();
  return probe;
}

}  // namespace logmaj
