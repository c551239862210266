#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logmaj/divergence.hpp"
#include "logmaj/expansion.hpp"
#include "logmaj/golden_thompson.hpp"
#include "logmaj/random.hpp"
#include "logmaj/suites.hpp"

namespace py = pybind11;
using namespace logmaj;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
    throw std::invalid_argument("expected a square 2d array");
  const int m = static_cast<int>(arr.shape(0));
  ComplexMatrix a(m);
  auto r = arr.unchecked<2>();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = r(i, j);
  return a;
}

py::array to_array(const ComplexMatrix& a) {
  const int m = a.dim();
  py::array_t<std::complex<double>> out({m, m});
  auto w = out.mutable_unchecked<2>();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w(i, j) = a(i, j);
  return out;
}

py::array to_array(const Spectrum& s) {
  py::array_t<double> out(s.size());
  auto w = out.mutable_unchecked<1>();
  for (int i = 0; i < s.size(); ++i) w(i) = s[i];
  return out;
}

std::vector<PdMatrix> to_pd_list(const std::vector<ComplexArray>& arrays) {
  std::vector<PdMatrix> out;
  out.reserve(arrays.size());
  for (const ComplexArray& a : arrays) out.push_back(PdMatrix(to_matrix(a)));
  return out;
}

std::vector<HermitianMatrix> to_hermitian_list(const std::vector<ComplexArray>& arrays) {
  std::vector<HermitianMatrix> out;
  out.reserve(arrays.size());
  for (const ComplexArray& a : arrays) out.push_back(HermitianMatrix(to_matrix(a)));
  return out;
}

WeightVector weights_or_uniform(const std::vector<double>& w, size_t n) {
  if (w.empty()) return WeightVector::uniform(static_cast<int>(n));
  return WeightVector(w);
}

py::dict report_dict(const MajorizationReport& rep) {
  py::dict d;
  d["kind"] = rep.kind == MajorizationKind::log ? "log" : "weak";
  d["margins"] = rep.margins;
  d["final_equality_gap"] = rep.final_equality_gap;
  d["holds"] = rep.holds;
  d["tol"] = rep.tol;
  d["zeros_a"] = rep.zeros_a;
  d["zeros_b"] = rep.zeros_b;
  return d;
}

py::dict araki_dict(const ArakiResult& res) {
  py::dict d;
  d["lhs"] = to_array(res.lhs);
  d["rhs"] = to_array(res.rhs);
  d["report"] = report_dict(res.report);
  return d;
}

double divergence_scalar(const DivergenceValue& v) {
  return v.finite ? v.value : std::numeric_limits<double>::infinity();
}

}  // namespace

PYBIND11_MODULE(_logmaj, m) {
  m.doc() =
      "Log-majorization, matrix means, Renyi divergences, and trace-inequality "
      "checks for dense complex matrices";

  // linear algebra core
  m.def(
      "eigh",
      [](const ComplexArray& a) {
        const EigResult e = jacobi_eig(hermitian_part(to_matrix(a)));
        return py::make_tuple(to_array(e.values), to_array(e.vectors));
      },
      py::arg("a"), "Eigenvalues (decreasing) and eigenvectors of a Hermitian matrix");
  m.def(
      "fractional_power",
      [](const ComplexArray& a, double p) { return to_array(matrix_power(PsdMatrix(to_matrix(a)), p).matrix()); },
      py::arg("a"), py::arg("p"), "Generalized PSD power with 0^p = 0");
  m.def(
      "matrix_exp",
      [](const ComplexArray& h) { return to_array(matrix_exp(HermitianMatrix(to_matrix(h))).matrix()); },
      py::arg("h"));
  m.def(
      "matrix_log",
      [](const ComplexArray& a) { return to_array(matrix_log(PdMatrix(to_matrix(a))).matrix()); },
      py::arg("a"));
  m.def(
      "support_projection",
      [](const ComplexArray& a) { return to_array(support_projection(PsdMatrix(to_matrix(a))).matrix()); },
      py::arg("a"));
  m.def(
      "projection_meet",
      [](const ComplexArray& p, const ComplexArray& q) {
        return to_array(projection_meet(PsdMatrix(to_matrix(p)), PsdMatrix(to_matrix(q))).matrix());
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "singular_values",
      [](const ComplexArray& x) { return to_array(singular_values(to_matrix(x))); }, py::arg("x"));
  m.def(
      "schatten_norm", [](const ComplexArray& x, double p) { return schatten_norm(to_matrix(x), p); },
      py::arg("x"), py::arg("p"));
  m.def(
      "operator_norm", [](const ComplexArray& x) { return operator_norm(to_matrix(x)); },
      py::arg("x"));
  m.def(
      "ky_fan_products", [](const ComplexArray& x) { return ky_fan_products(to_matrix(x)); },
      py::arg("x"));
  m.def(
      "compound_matrix",
      [](const ComplexArray& a, int k) { return to_array(compound_matrix(to_matrix(a), k)); },
      py::arg("a"), py::arg("k"));

  // majorization
  m.def(
      "check_log_majorization",
      [](const std::vector<double>& a, const std::vector<double>& b, double tol) {
        return report_dict(check_log_majorization(a, b, tol));
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = tol::majorization);
  m.def(
      "check_weak_majorization",
      [](const std::vector<double>& a, const std::vector<double>& b, double tol) {
        return report_dict(check_weak_majorization(a, b, tol));
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = tol::majorization);
  m.def(
      "araki_pair",
      [](const ComplexArray& a, const ComplexArray& b, double p, double tol) {
        return araki_dict(araki_pair(PsdMatrix(to_matrix(a)), PsdMatrix(to_matrix(b)), p, tol));
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("tol") = tol::majorization);
  m.def(
      "extended_araki",
      [](const ComplexArray& a1, const ComplexArray& a2, const ComplexArray& b1,
         const ComplexArray& b2, double theta, const std::string& convention, double tol) {
        const EndpointConvention conv =
            convention == "support" ? EndpointConvention::support : EndpointConvention::identity;
        return araki_dict(extended_araki(PsdMatrix(to_matrix(a1)), PsdMatrix(to_matrix(a2)),
                                         PsdMatrix(to_matrix(b1)), PsdMatrix(to_matrix(b2)), theta,
                                         conv, tol));
      },
      py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"), py::arg("theta"),
      py::arg("convention") = "identity", py::arg("tol") = tol::majorization);
  m.def(
      "araki_equality_probe",
      [](const ComplexArray& a, const ComplexArray& b, double p, double q,
         const std::string& norm) {
        const EqualityProbe probe = araki_equality_probe(PsdMatrix(to_matrix(a)),
                                                         PsdMatrix(to_matrix(b)), p, q,
                                                         NormKind::parse(norm));
        return py::make_tuple(probe.gap, probe.commutator_norm);
      },
      py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("norm") = "trace");

  // means
  m.def(
      "geometric_mean",
      [](const ComplexArray& a, const ComplexArray& b, double alpha) {
        return to_array(geometric_mean_two(PdMatrix(to_matrix(a)), PdMatrix(to_matrix(b)), alpha).matrix());
      },
      py::arg("a"), py::arg("b"), py::arg("alpha") = 0.5);
  m.def(
      "riemannian_distance",
      [](const ComplexArray& a, const ComplexArray& b) {
        return riemannian_distance(PdMatrix(to_matrix(a)), PdMatrix(to_matrix(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "karcher_mean",
      [](const std::vector<ComplexArray>& arrays, const std::vector<double>& weights, double tol) {
        KarcherConfig cfg;
        cfg.tol = tol;
        const std::vector<PdMatrix> as = to_pd_list(arrays);
        const KarcherSolveResult res =
            karcher_mean(as, weights_or_uniform(weights, as.size()), cfg);
        py::dict d;
        d["mean"] = to_array(res.mean.matrix());
        d["residual"] = res.residual;
        d["iterations"] = res.iterations;
        d["residual_history"] = res.residual_history;
        return d;
      },
      py::arg("matrices"), py::arg("weights") = std::vector<double>{},
      py::arg("tol") = tol::karcher);
  m.def(
      "log_euclidean_mean",
      [](const std::vector<ComplexArray>& arrays, const std::vector<double>& weights) {
        const std::vector<PdMatrix> as = to_pd_list(arrays);
        return to_array(log_euclidean_mean(as, weights_or_uniform(weights, as.size())).matrix());
      },
      py::arg("matrices"), py::arg("weights") = std::vector<double>{});
  m.def(
      "power_mean",
      [](const std::vector<ComplexArray>& arrays, double t, const std::vector<double>& weights) {
        const std::vector<PdMatrix> as = to_pd_list(arrays);
        return to_array(power_mean(as, weights_or_uniform(weights, as.size()), t).matrix());
      },
      py::arg("matrices"), py::arg("t"), py::arg("weights") = std::vector<double>{});

  // divergences
  m.def(
      "q_alpha_z",
      [](const ComplexArray& rho, const ComplexArray& sigma, double alpha, double z) {
        return divergence_scalar(q_alpha_z(State(PsdMatrix(to_matrix(rho))),
                                           State(PsdMatrix(to_matrix(sigma))), alpha, z));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("alpha"), py::arg("z"),
      "Q value; +inf when the support case analysis dictates");
  m.def(
      "d_alpha_z",
      [](const ComplexArray& rho, const ComplexArray& sigma, double alpha, double z) {
        const State r(PsdMatrix(to_matrix(rho)));
        const State s(PsdMatrix(to_matrix(sigma)));
        return divergence_scalar(alpha == 1.0 ? d1_normalized(r, s) : d_alpha_z(r, s, alpha, z));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("alpha"), py::arg("z") = 1.0);
  m.def(
      "umegaki",
      [](const ComplexArray& rho, const ComplexArray& sigma) {
        return divergence_scalar(
            umegaki(State(PsdMatrix(to_matrix(rho))), State(PsdMatrix(to_matrix(sigma)))));
      },
      py::arg("rho"), py::arg("sigma"));

  // golden-thompson
  m.def("beta_density", &beta_density, py::arg("theta"), py::arg("t"));
  m.def(
      "gt_check",
      [](const std::vector<ComplexArray>& arrays, double r, double eps) {
        const GtReport rep = gt_check(to_hermitian_list(arrays), r, build_quadrature(0.0, eps));
        py::dict d;
        d["lhs"] = rep.lhs;
        d["rhs"] = rep.rhs;
        d["gap"] = rep.gap;
        d["quadrature_mass"] = rep.quadrature_mass;
        return d;
      },
      py::arg("matrices"), py::arg("r") = 1.0, py::arg("eps") = 1e-8);
  m.def(
      "gt_log_majorization",
      [](const std::vector<ComplexArray>& arrays, double theta, double eps) {
        return report_dict(gt_log_majorization(to_hermitian_list(arrays), theta,
                                               build_quadrature(theta == 1.0 ? 0.0 : theta, eps),
                                               10.0 * eps));
      },
      py::arg("matrices"), py::arg("theta"), py::arg("eps") = 1e-8);
  m.def(
      "equality_block_triple",
      [](const ComplexArray& h, const ComplexArray& k) {
        const BlockTriple triple =
            equality_block_triple(HermitianMatrix(to_matrix(h)), HermitianMatrix(to_matrix(k)));
        py::dict d;
        d["h1"] = to_array(triple.h1.matrix());
        d["h2"] = to_array(triple.h2.matrix());
        d["h3"] = to_array(triple.h3.matrix());
        d["commutator_norms"] = triple.commutator_norms;
        d["min_commutator_norm"] = triple.min_commutator_norm;
        return d;
      },
      py::arg("h"), py::arg("k"));

  // expansion
  m.def(
      "taylor_coefficients",
      [](const std::vector<ComplexArray>& arrays, int order, const std::vector<double>& weights) {
        const std::vector<HermitianMatrix> hs = to_hermitian_list(arrays);
        const TaylorState state =
            taylor_recursion(hs, weights_or_uniform(weights, hs.size()), order);
        py::list xs, ys;
        for (const HermitianMatrix& x : state.x) xs.append(to_array(x.matrix()));
        for (const HermitianMatrix& y : state.y) ys.append(to_array(y.matrix()));
        py::dict d;
        d["x"] = xs;
        d["y"] = ys;
        return d;
      },
      py::arg("matrices"), py::arg("order") = 4, py::arg("weights") = std::vector<double>{});
  m.def(
      "equality_case_check",
      [](const std::vector<ComplexArray>& arrays, const std::vector<double>& weights,
         const std::string& norm, double t_probe, double eq_tol) {
        const std::vector<PdMatrix> as = to_pd_list(arrays);
        const EqualityCaseReport rep = equality_case_check(
            as, weights_or_uniform(weights, as.size()), NormKind::parse(norm), t_probe, eq_tol);
        py::dict d;
        d["a"] = rep.a;
        d["b"] = rep.b;
        d["c"] = rep.c;
        d["d"] = rep.d;
        d["a_value"] = rep.a_value;
        d["b_value"] = rep.b_value;
        d["c_value"] = rep.c_value;
        d["d_value"] = rep.d_value;
        d["e_probe"] = rep.e_probe;
        d["e_not_strictly_decreasing"] = rep.e_not_strictly_decreasing;
        d["e_max_decrease"] = rep.e_max_decrease;
        return d;
      },
      py::arg("matrices"), py::arg("weights") = std::vector<double>{}, py::arg("norm") = "trace",
      py::arg("t_probe") = 2.0, py::arg("eq_tol") = tol::eq_case);
  m.def(
      "lie_trotter_kato",
      [](const ComplexArray& a, const ComplexArray& b, const std::vector<double>& ts) {
        const LieTrotterKatoResult res =
            lie_trotter_kato(PsdMatrix(to_matrix(a)), PsdMatrix(to_matrix(b)), ts);
        py::dict d;
        d["target"] = to_array(res.target.matrix());
        d["errors"] = res.errors;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("t_sequence") = std::vector<double>{0.1, 0.05, 0.025});

  // randomized property suites
  m.def(
      "run_suite",
      [](const std::string& name, uint64_t seed, int threads) {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.threads = threads;
        const SuiteOutcome outcome = run_suite(name, cfg);
        py::dict d;
        d["suite"] = outcome.suite;
        d["cases"] = outcome.cases;
        d["failures"] = outcome.failures;
        d["worst_margin"] = outcome.worst_margin;
        d["seed"] = outcome.seed;
        d["seconds"] = outcome.seconds;
        return d;
      },
      py::arg("name"), py::arg("seed") = 42, py::arg("threads") = 0);
}
