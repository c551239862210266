// Acceptance gate: one pass/fail line per criterion. Criteria 1-8 drive the
// seeded property suites (each case pins its margins and tolerances in
// src/suites.cpp); criterion 9 exercises the CLI end to end, including byte
// reproducibility of the report file.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "logmaj/io.hpp"
#include "logmaj/suites.hpp"

namespace {

using namespace logmaj;

int failures = 0;

void report(int number, bool ok, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, text.c_str());
  if (!ok) ++failures;
}

std::string stats(const SuiteOutcome& o) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "cases=%ld failures=%ld worst_margin=%.3e runtime=%.1fs",
                o.cases, o.failures, o.worst_margin, o.seconds);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.seed = 42;

  const SuiteOutcome araki = run_suite("araki", cfg);
  report(1, araki.failures == 0 && araki.cases == 1000 && araki.seconds < 30.0,
         "araki log-majorization on 1000 seeded PSD pairs, p in {0.25,0.5,0.75}, "
         "margins >= -1e-9, determinant <= 1e-8 rel, under 30s (" +
             stats(araki) + ")");

  const SuiteOutcome extended = run_suite("extended", cfg);
  report(2, extended.failures == 0 && extended.cases == 500,
         "extended blended checks + norm inequality on 500 commuting families, both endpoint "
         "conventions, reductions reproduce the two-matrix check to 1e-10 (" +
             stats(extended) + ")");

  const SuiteOutcome divergence = run_suite("divergence", cfg);
  report(3, divergence.failures == 0 && divergence.cases == 200,
         "alpha monotonicity on 200 full-rank pairs x z in {0.5,1,2} x 41-point grid within 1e-8, "
         "log-convexity, scalar commuting values to 1e-10, z-direction split (" +
             stats(divergence) + ")");

  const SuiteOutcome gt = run_suite("gt", cfg);
  report(4, gt.failures == 0 && gt.cases == 200 && gt.seconds < 60.0,
         "trace inequality on 200 random triples with gap >= -1e-8, saturating block triple "
         "|gap|/lhs <= 1e-6 for r in {0.5,1,2,3} with the closed-form trace to 1e-10, "
         "quadrature mass within 2e-8, under 60s (" +
             stats(gt) + ")");

  const SuiteOutcome karcher = run_suite("karcher", cfg);
  report(5, karcher.failures == 0 && karcher.cases == 100,
         "Karcher solver residual <= 1e-12 on regression inputs, two-matrix identity to 1e-10, "
         "permutation/congruence/self-duality, compound compatibility to 1e-7, rescaled "
         "log-majorization margins >= -1e-8 on 100 triples, Lie-Trotter < 1e-3 at q=0.01 (" +
             stats(karcher) + ")");

  const SuiteOutcome taylor = run_suite("taylor", cfg);
  report(6, taylor.failures == 0 && taylor.cases == 100,
         "recursion equals closed forms to 1e-10 on 100 instances (K=4), finite differences "
         "within max(1e-6, 10*estimate) for k <= 3, trace identities for k <= 3 and the "
         "order-4 commutator defect to 1e-9 (" +
             stats(taylor) + ")");

  const SuiteOutcome eqcase = run_suite("eqcase", cfg);
  report(7, eqcase.failures == 0 && eqcase.cases == 120,
         "equality-case verdicts consistent on 50 commuting, 20 pinned-sum, 50 generic families; "
         "generic probes decrease by > 1e-6 somewhere on the grid (" +
             stats(eqcase) + ")");

  const SuiteOutcome ltk = run_suite("ltk", cfg);
  report(8, ltk.failures == 0 && ltk.cases == 50,
         "Lie-Trotter-Kato error strictly decreasing on the geometric grid for 50 singular "
         "pairs, commuting singular case exact to 1e-12 (" +
             stats(ltk) + ")");

  if (argc > 1) {
    const std::string cli = argv[1];
    const std::string out1 = "/tmp/logmaj_accept_run1.jsonl";
    const std::string out2 = "/tmp/logmaj_accept_run2.jsonl";
    const auto t0 = std::chrono::steady_clock::now();
    const int rc1 = std::system(
        (cli + " run all --seed 42 --out " + out1 + " > /tmp/logmaj_accept_run1.summary").c_str());
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const int rc2 = std::system(
        (cli + " run all --seed 42 --out " + out2 + " > /tmp/logmaj_accept_run2.summary").c_str());
    bool ok = rc1 == 0 && rc2 == 0 && seconds < 300.0;
    std::string detail;
    if (ok) {
      const std::string a = read_text_file(out1);
      const std::string b = read_text_file(out2);
      ok = !a.empty() && a == b;
      detail = ok ? "byte-identical reports" : "reports differ between runs";
    } else {
      detail = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), ", runtime=%.1fs", seconds);
    report(9, ok, "`logmaj run all` exits 0 in under 5 minutes and is byte-reproducible (" +
                      detail + buf + ")");
  } else {
    report(9, false, "CLI path not supplied to the acceptance binary");
  }

  std::printf("ACCEPTANCE: %d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
