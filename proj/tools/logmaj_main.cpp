#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logmaj/io.hpp"
#include "logmaj/random.hpp"
#include "logmaj/suites.hpp"

namespace {

using namespace logmaj;
using nlohmann::json;

std::vector<double> parse_weights(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    j = json::parse(read_text_file(text));
  }
  if (!j.is_array()) throw std::invalid_argument("weights: expected a JSON array");
  return j.get<std::vector<double>>();
}

// "lo:hi:n" inclusive linear grid
std::vector<double> parse_grid(const std::string& text) {
  const size_t c1 = text.find(':');
  const size_t c2 = text.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("grid: expected lo:hi:n");
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const int n = std::stoi(text.substr(c2 + 1));
  if (n < 2 || !(hi > lo)) throw std::invalid_argument("grid: need hi > lo and n >= 2");
  std::vector<double> g(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of numbers");
  return out;
}

std::vector<PdMatrix> load_pd_list(const std::vector<std::string>& paths) {
  std::vector<PdMatrix> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) out.push_back(PdMatrix(read_matrix(p)));
  return out;
}

std::vector<HermitianMatrix> load_hermitian_list(const std::vector<std::string>& paths) {
  std::vector<HermitianMatrix> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) out.push_back(HermitianMatrix(read_matrix(p)));
  return out;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text_file(out_path, j.dump(2) + "\n");
}

int run_command(const std::string& suite, RunConfig cfg,
                const std::vector<std::string>& tol_overrides) {
  for (const std::string& kv : tol_overrides) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--tol expects KEY=VALUE, got '" + kv + "'");
    cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  if (suite != "all" &&
      std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    std::cerr << "unknown suite '" << suite << "'; choose one of: all";
    for (const std::string& s : suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return 2;
  }
  const SuiteOutcome outcome = run_suite(suite, cfg);
  write_report(outcome, cfg);
  std::cout << summary_json(outcome) << "\n";
  return outcome.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logmaj: log-majorization, matrix means, and trace-inequality checks"};
  app.require_subcommand(1);

  // --- majorize ---
  std::string maj_a, maj_b, maj_kind = "log", maj_out;
  double maj_tol = tol::majorization;
  auto* maj = app.add_subcommand("majorize", "majorization verdict between two spectra");
  maj->add_option("--a", maj_a, "matrix file, a-side")->required();
  maj->add_option("--b", maj_b, "matrix file, b-side")->required();
  maj->add_option("--kind", maj_kind, "log | weak")->check(CLI::IsMember({"log", "weak"}));
  maj->add_option("--tol", maj_tol, "margin tolerance");
  maj->add_option("--out", maj_out, "write report here instead of stdout");
  maj->callback([&] {
    const HermitianMatrix a(read_matrix(maj_a));
    const HermitianMatrix b(read_matrix(maj_b));
    json rep;
    json sa, sb;
    if (maj_kind == "log") {
      const PsdMatrix pa(a), pb(b);
      sa = to_json(pa.eigenvalues());
      sb = to_json(pb.eigenvalues());
      rep = to_json(check_log_majorization(pa.eigenvalues().values(), pb.eigenvalues().values(),
                                           maj_tol));
    } else {
      const EigResult ea = jacobi_eig(a.matrix());
      const EigResult eb = jacobi_eig(b.matrix());
      sa = to_json(ea.values);
      sb = to_json(eb.values);
      rep = to_json(check_weak_majorization(ea.values.values(), eb.values.values(), maj_tol));
    }
    emit(json{{"a_spectrum", sa}, {"b_spectrum", sb}, {"report", rep}}, maj_out);
  });

  // --- araki ---
  std::string ar_a, ar_b, ar_out;
  double ar_p = 0.5, ar_tol = tol::majorization;
  auto* ar = app.add_subcommand("araki", "two-matrix log-majorization check");
  ar->add_option("--a", ar_a)->required();
  ar->add_option("--b", ar_b)->required();
  ar->add_option("--p", ar_p, "power in (0,1]")->required();
  ar->add_option("--tol", ar_tol);
  ar->add_option("--out", ar_out);
  ar->callback([&] {
    const PsdMatrix a(read_matrix(ar_a));
    const PsdMatrix b(read_matrix(ar_b));
    emit(to_json(araki_pair(a, b, ar_p, ar_tol)), ar_out);
  });

  // --- araki-ext ---
  std::string ax_a1, ax_a2, ax_b1, ax_b2, ax_conv = "identity", ax_norm, ax_out;
  double ax_theta = 0.5, ax_r = 1.0, ax_tol = tol::majorization;
  auto* ax = app.add_subcommand("araki-ext", "blended commuting-pair log-majorization check");
  ax->add_option("--a1", ax_a1)->required();
  ax->add_option("--a2", ax_a2)->required();
  ax->add_option("--b1", ax_b1)->required();
  ax->add_option("--b2", ax_b2)->required();
  ax->add_option("--theta", ax_theta, "blend in [0,1]")->required();
  ax->add_option("--convention", ax_conv, "endpoint convention for X^0")
      ->check(CLI::IsMember({"identity", "support"}));
  ax->add_option("--norm", ax_norm, "also run the norm inequality with this norm");
  ax->add_option("--r", ax_r, "norm-inequality power r > 0");
  ax->add_option("--tol", ax_tol);
  ax->add_option("--out", ax_out);
  ax->callback([&] {
    const PsdMatrix a1(read_matrix(ax_a1)), a2(read_matrix(ax_a2));
    const PsdMatrix b1(read_matrix(ax_b1)), b2(read_matrix(ax_b2));
    const EndpointConvention conv =
        ax_conv == "support" ? EndpointConvention::support : EndpointConvention::identity;
    json out = to_json(extended_araki(a1, a2, b1, b2, ax_theta, conv, ax_tol));
    if (!ax_norm.empty()) {
      const NormCheckResult nc =
          norm_interpolation_check(a1, a2, b1, b2, ax_theta, ax_r, NormKind::parse(ax_norm), conv, ax_tol);
      out["norm_check"] = json{{"lhs", nc.lhs}, {"rhs", nc.rhs}, {"holds", nc.holds},
                               {"norm", ax_norm}, {"r", ax_r}};
    }
    emit(out, ax_out);
  });

  // --- mean ---
  std::vector<std::string> mean_in;
  std::string mean_kind, mean_weights, mean_out, mean_report;
  double mean_alpha = 0.5, mean_t = 0.5, mean_tol = tol::karcher;
  auto* mn = app.add_subcommand("mean", "matrix means of a positive definite family");
  mn->add_option("--kind", mean_kind, "karcher | le | power | geo2")
      ->required()
      ->check(CLI::IsMember({"karcher", "le", "power", "geo2"}));
  mn->add_option("input", mean_in, "matrix files")->required()->expected(-1);
  mn->add_option("--weights", mean_weights, "JSON array (inline or file)");
  mn->add_option("--alpha", mean_alpha, "geo2 weight in [0,1]");
  mn->add_option("--t", mean_t, "power-mean parameter in [-1,1] \\ {0}");
  mn->add_option("--tol", mean_tol, "solver residual tolerance");
  mn->add_option("--out", mean_out, "write the mean matrix here");
  mn->add_option("--report", mean_report, "write the JSON result record here");
  mn->callback([&] {
    const std::vector<PdMatrix> as = load_pd_list(mean_in);
    const WeightVector w = mean_weights.empty()
                               ? WeightVector::uniform(static_cast<int>(as.size()))
                               : WeightVector(parse_weights(mean_weights));
    json record{{"kind", mean_kind}};
    ComplexMatrix mean_matrix(as.front().dim());
    if (mean_kind == "karcher") {
      KarcherConfig cfg;
      cfg.tol = mean_tol;
      const KarcherSolveResult res = karcher_mean(as, w, cfg);
      mean_matrix = res.mean.matrix();
      record.update(to_json(res));
    } else if (mean_kind == "le") {
      mean_matrix = log_euclidean_mean(as, w).matrix();
    } else if (mean_kind == "power") {
      PowerMeanConfig cfg;
      cfg.tol = mean_tol;
      mean_matrix = power_mean(as, w, mean_t, cfg).matrix();
      record["t"] = mean_t;
    } else {
      if (as.size() != 2) throw std::invalid_argument("mean --kind geo2 needs exactly 2 inputs");
      mean_matrix = geometric_mean_two(as[0], as[1], mean_alpha).matrix();
      record["alpha"] = mean_alpha;
    }
    if (mean_out.empty())
      std::cout << dump_matrix_json(mean_matrix) << "\n";
    else
      write_matrix(mean_out, mean_matrix);
    emit(record, mean_report);
  });

  // --- divergence ---
  std::string dv_rho, dv_sigma, dv_scan, dv_grid, dv_format = "json", dv_out;
  double dv_alpha = 2.0, dv_z = 1.0, dv_kappa = 0.0, dv_z0 = 1.0;
  auto* dv = app.add_subcommand("divergence", "alpha-z Renyi divergences and scans");
  dv->add_option("--rho", dv_rho)->required();
  dv->add_option("--sigma", dv_sigma)->required();
  dv->add_option("--alpha", dv_alpha);
  dv->add_option("--z", dv_z);
  dv->add_option("--scan", dv_scan, "alpha | z | line")->check(CLI::IsMember({"alpha", "z", "line"}));
  dv->add_option("--kappa", dv_kappa, "line scan: z = kappa*alpha + z0");
  dv->add_option("--z0", dv_z0, "line scan offset (>= 0)");
  dv->add_option("--grid", dv_grid, "lo:hi:n scan grid");
  dv->add_option("--format", dv_format)->check(CLI::IsMember({"json", "csv"}));
  dv->add_option("--out", dv_out, "write rows here (csv) or full JSON");
  dv->callback([&] {
    const State rho{PsdMatrix(read_matrix(dv_rho))};
    const State sigma{PsdMatrix(read_matrix(dv_sigma))};
    if (dv_scan.empty()) {
      const DivergenceValue v = dv_alpha == 1.0 ? d1_normalized(rho, sigma)
                                                : d_alpha_z(rho, sigma, dv_alpha, dv_z);
      json j = to_json(v);
      j["alpha"] = dv_alpha;
      j["z"] = dv_z;
      if (dv_alpha != 1.0) j["q"] = to_json(q_alpha_z(rho, sigma, dv_alpha, dv_z));
      emit(j, dv_out);
      return;
    }
    std::vector<ScanRow> rows;
    json verdict;
    if (dv_scan == "alpha") {
      const ScanResult s = alpha_monotonicity_scan(
          rho, sigma, dv_z, dv_grid.empty() ? parse_grid("0:3:41") : parse_grid(dv_grid));
      rows = s.rows;
      verdict = json{{"monotone", s.monotone},
                     {"straddle_ok", s.straddle_ok},
                     {"worst_violation", s.worst_violation}};
    } else if (dv_scan == "z") {
      const ScanResult s = z_monotonicity_scan(
          rho, sigma, dv_alpha, dv_grid.empty() ? parse_grid("0.25:4:16") : parse_grid(dv_grid));
      rows = s.rows;
      verdict = json{{"monotone", s.monotone},
                     {"direction", dv_alpha < 1.0 ? "non-decreasing" : "non-increasing"},
                     {"worst_violation", s.worst_violation}};
    } else {
      const LineScanResult s = line_scan(rho, sigma, dv_kappa, dv_z0,
                                         dv_grid.empty() ? parse_grid("0.05:2:40")
                                                         : parse_grid(dv_grid));
      rows = s.rows;
      verdict = json{{"verdict_reported", s.verdict_reported},
                     {"monotone_below_one", s.monotone_below_one},
                     {"worst_violation", s.worst_violation},
                     {"note", "above alpha = 1 the rows are exploratory data"}};
    }
    std::string csv = "alpha,z,value,finite\n";
    json jrows = json::array();
    for (const ScanRow& r : rows) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%d\n", r.alpha, r.z, r.value,
                    r.finite ? 1 : 0);
      csv += buf;
      jrows.push_back(json{{"alpha", r.alpha}, {"z", r.z}, {"value", r.value}, {"finite", r.finite}});
    }
    if (dv_format == "csv") {
      if (dv_out.empty())
        std::cout << csv;
      else
        write_text_file(dv_out, csv);
      std::cout << verdict.dump(2) << "\n";
    } else {
      emit(json{{"rows", jrows}, {"verdict", verdict}}, dv_out);
    }
  });

  // --- gt ---
  std::vector<std::string> gt_in;
  std::string gt_csv, gt_out;
  double gt_r = 1.0, gt_theta = 0.0, gt_eps = 1e-8;
  bool gt_ex41 = false;
  auto* gt = app.add_subcommand("gt", "multivariate trace/log-majorization inequality checks");
  gt->add_option("input", gt_in, "Hermitian matrix files")->required()->expected(-1);
  gt->add_option("--r", gt_r, "trace power r > 0");
  gt->add_option("--theta", gt_theta, "0 for the trace inequality, (0,1] for log-majorization");
  gt->add_option("--eps", gt_eps, "quadrature tail target");
  gt->add_flag("--example41", gt_ex41,
               "treat the two inputs as the non-commuting pair of the saturating block triple");
  gt->add_option("--csv", gt_csv, "write per-node integrand values here");
  gt->add_option("--out", gt_out);
  gt->callback([&] {
    std::vector<HermitianMatrix> hs = load_hermitian_list(gt_in);
    json extra;
    if (gt_ex41) {
      if (hs.size() != 2) throw std::invalid_argument("gt --example41 needs exactly 2 inputs");
      const BlockTriple triple = equality_block_triple(hs[0], hs[1]);
      hs = {triple.h1, triple.h2, triple.h3};
      json comms = json::array();
      for (const auto& [label, norm] : triple.commutator_norms)
        comms.push_back(json{{"commutator", label}, {"frobenius_norm", norm}});
      extra = json{{"commutator_report", comms},
                   {"min_commutator_norm", triple.min_commutator_norm}};
    }
    if (gt_theta == 0.0) {
      const BetaQuadrature quad = build_quadrature(0.0, gt_eps);
      std::vector<std::pair<double, double>> nodes;
      const GtReport rep = gt_check(hs, gt_r, quad, gt_csv.empty() ? nullptr : &nodes);
      if (!gt_csv.empty()) {
        std::string csv = "t,integrand\n";
        for (const auto& [t, v] : nodes) {
          char buf[80];
          std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", t, v);
          csv += buf;
        }
        write_text_file(gt_csv, csv);
      }
      json j = to_json(rep);
      if (!extra.is_null()) j.update(extra);
      emit(j, gt_out);
    } else {
      const BetaQuadrature quad = build_quadrature(gt_theta == 1.0 ? 0.0 : gt_theta, gt_eps);
      const MajorizationReport rep = gt_log_majorization(hs, gt_theta, quad, 10.0 * gt_eps);
      json j = to_json(rep);
      if (!extra.is_null()) j.update(extra);
      emit(j, gt_out);
    }
  });

  // --- taylor ---
  std::vector<std::string> ty_in;
  std::string ty_weights, ty_out;
  int ty_order = 4;
  auto* ty = app.add_subcommand("taylor", "Karcher-mean Taylor coefficients of e^{tH_j}");
  ty->add_option("input", ty_in, "Hermitian matrix files")->required()->expected(-1);
  ty->add_option("--order", ty_order, "highest coefficient order (<= 8)");
  ty->add_option("--weights", ty_weights);
  ty->add_option("--out", ty_out);
  ty->callback([&] {
    const std::vector<HermitianMatrix> hs = load_hermitian_list(ty_in);
    const WeightVector w = ty_weights.empty()
                               ? WeightVector::uniform(static_cast<int>(hs.size()))
                               : WeightVector(parse_weights(ty_weights));
    const TaylorState state = taylor_recursion(hs, w, ty_order);
    json xs = json::array(), ys = json::array(), traces = json::array();
    for (int k = 0; k < state.order; ++k) {
      xs.push_back(matrix_to_json(state.x[static_cast<size_t>(k)].matrix()));
      ys.push_back(matrix_to_json(state.y[static_cast<size_t>(k)].matrix()));
      traces.push_back(state.x[static_cast<size_t>(k)].trace());
    }
    emit(json{{"order", state.order}, {"x", xs}, {"y", ys}, {"trace_x", traces}}, ty_out);
  });

  // --- eqcase ---
  std::vector<std::string> eq_in;
  std::string eq_weights, eq_norm = "trace", eq_out;
  double eq_t = 2.0, eq_tol_opt = tol::eq_case;
  auto* eq = app.add_subcommand("eqcase", "equality-case conditions for the Karcher norm inequality");
  eq->add_option("input", eq_in, "positive definite matrix files")->required()->expected(-1);
  eq->add_option("--weights", eq_weights);
  eq->add_option("--norm", eq_norm, "trace | frobenius | schatten:p");
  eq->add_option("--t", eq_t, "probe exponent (nonzero)");
  eq->add_option("--tol", eq_tol_opt);
  eq->add_option("--out", eq_out);
  eq->callback([&] {
    const std::vector<PdMatrix> as = load_pd_list(eq_in);
    const WeightVector w = eq_weights.empty()
                               ? WeightVector::uniform(static_cast<int>(as.size()))
                               : WeightVector(parse_weights(eq_weights));
    emit(to_json(equality_case_check(as, w, NormKind::parse(eq_norm), eq_t, eq_tol_opt)), eq_out);
  });

  // --- ltk ---
  std::string ltk_a, ltk_b, ltk_grid = "0.1,0.05,0.025,0.0125", ltk_out;
  auto* lt = app.add_subcommand("ltk", "Lie-Trotter-Kato limit with singular inputs");
  lt->add_option("--a", ltk_a)->required();
  lt->add_option("--b", ltk_b)->required();
  lt->add_option("--grid", ltk_grid, "comma-separated decreasing t values");
  lt->add_option("--out", ltk_out);
  lt->callback([&] {
    const PsdMatrix a(read_matrix(ltk_a));
    const PsdMatrix b(read_matrix(ltk_b));
    emit(to_json(lie_trotter_kato(a, b, parse_list(ltk_grid))), ltk_out);
  });

  // --- run ---
  std::string run_suite_name, run_out, run_format = "json";
  std::vector<std::string> run_tols;
  RunConfig run_cfg;
  auto* rn = app.add_subcommand("run", "randomized property suites");
  rn->add_option("suite", run_suite_name, "araki | extended | divergence | gt | karcher | taylor | eqcase | ltk | all")
      ->required();
  rn->add_option("--seed", run_cfg.seed);
  rn->add_option("--tol", run_tols, "KEY=VALUE overrides")->take_all();
  rn->add_option("--out", run_out, "report file (JSON-lines or CSV)");
  rn->add_option("--format", run_format)->check(CLI::IsMember({"json", "csv"}));
  rn->add_option("--threads", run_cfg.threads, "worker threads (LOGMAJ_THREADS also caps)");
  rn->add_option("--max-dim", run_cfg.max_dim, "ensemble dimension cap (default 6)")
      ->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (rn->parsed()) {
    try {
      run_cfg.out = run_out;
      run_cfg.format = run_format;
      return run_command(run_suite_name, run_cfg, run_tols);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}
