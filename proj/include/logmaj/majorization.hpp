#pragma once

#include <vector>

#include "logmaj/functions.hpp"

namespace logmaj {

enum class MajorizationKind { weak, log };

// Per-k margins of b against a (log domain for log kind). For the log kind
// the last margin is the determinant identity and must vanish; zeros are
// compared by count first so no NaN arithmetic occurs (aligned zero tails
// contribute margin 0, mismatched ones +-inf).
struct MajorizationReport {
  MajorizationKind kind = MajorizationKind::log;
  std::vector<double> margins;
  double final_equality_gap = 0.0;
  bool holds = false;
  double tol = 0.0;
  int zeros_a = 0;
  int zeros_b = 0;

  double worst_margin() const;
};

std::vector<double> decreasing_rearrangement(std::vector<double> a);

MajorizationReport check_log_majorization(const std::vector<double>& a, const std::vector<double>& b,
                                          double tolerance = tol::majorization);
MajorizationReport check_weak_majorization(const std::vector<double>& a, const std::vector<double>& b,
                                           double tolerance = tol::majorization);

// Log-kind report directly from log-domain values (all finite).
MajorizationReport log_report_from_logs(const std::vector<double>& log_a,
                                        const std::vector<double>& log_b,
                                        double tolerance = tol::majorization);

// k-th antisymmetric tensor power: C(m,k) x C(m,k) matrix of k x k minors,
// increasing index tuples in lexicographic order. (AB)^{^k} = A^{^k} B^{^k}.
ComplexMatrix compound_matrix(const ComplexMatrix& a, int k);

enum class EndpointConvention { identity, support };

struct ArakiResult {
  Spectrum lhs;
  Spectrum rhs;
  MajorizationReport report;
};

// lambda(A^{p/2} B^p A^{p/2}) log-majorized by lambda((A^{1/2} B A^{1/2})^p),
// 0 < p <= 1.
ArakiResult araki_pair(const PsdMatrix& a, const PsdMatrix& b, double p,
                       double tolerance = tol::majorization);

// Two commuting pairs (A1,A2), (B1,B2): the theta-blended inner pair is
// log-majorized by the entrywise lambda^theta * lambda^{1-theta} of the outer
// pairs. Endpoints theta in {0,1} use the chosen A^0 / 0^0 convention.
ArakiResult extended_araki(const PsdMatrix& a1, const PsdMatrix& a2, const PsdMatrix& b1,
                           const PsdMatrix& b2, double theta,
                           EndpointConvention convention = EndpointConvention::identity,
                           double tolerance = tol::majorization);

struct NormCheckResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// || |(A1^th A2^{1-th})(B1^th B2^{1-th})|^r ||  <=  || |A1 B1|^r ||^th * || |A2 B2|^r ||^{1-th}
NormCheckResult norm_interpolation_check(const PsdMatrix& a1, const PsdMatrix& a2, const PsdMatrix& b1,
                                     const PsdMatrix& b2, double theta, double r, const NormKind& norm,
                                     EndpointConvention convention = EndpointConvention::identity,
                                     double tolerance = tol::majorization);

struct EqualityProbe {
  double gap = 0.0;              // ||(A^{q/2}B^qA^{q/2})^{1/q}|| - ||(A^{p/2}B^pA^{p/2})^{1/p}||
  double commutator_norm = 0.0;  // ||AB - BA||_F
};

// Strictly increasing norms only: gap >= 0, and gap == 0 forces AB = BA.
EqualityProbe araki_equality_probe(const PsdMatrix& a, const PsdMatrix& b, double p, double q,
                                   const NormKind& norm);

}  // namespace logmaj
