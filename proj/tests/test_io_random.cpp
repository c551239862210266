#include <cmath>
#include <cstdio>

#include <doctest.h>

#include "logmaj/io.hpp"
#include "logmaj/random.hpp"
#include "logmaj/suites.hpp"

using namespace logmaj;
using nlohmann::json;

TEST_CASE("matrix json round trip") {
  Rng rng(501);
  const ComplexMatrix a = gaussian_matrix(rng, 3);
  const std::string text = dump_matrix_json(a);
  const ComplexMatrix back = matrix_from_json(json::parse(text));
  CHECK((back - a).frobenius_norm() == 0.0);  // 17 digits round-trip doubles exactly

  SUBCASE("real-only matrices omit the imaginary block") {
    const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<double>{1.5, -2.0});
    const json j = json::parse(dump_matrix_json(d));
    CHECK_FALSE(j.contains("im"));
    const ComplexMatrix back2 = matrix_from_json(j);
    CHECK((back2 - d).frobenius_norm() == 0.0);
  }
  SUBCASE("malformed input is rejected") {
    CHECK_THROWS_AS(matrix_from_json(json::parse("{\"dim\": 2, \"re\": [[1,2]]}")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json::parse("{\"re\": [[1]]}")), std::invalid_argument);
  }
  SUBCASE("file round trip") {
    const std::string path = "/tmp/logmaj_test_matrix.json";
    write_matrix(path, a);
    const ComplexMatrix back3 = read_matrix(path);
    CHECK((back3 - a).frobenius_norm() == 0.0);
    std::remove(path.c_str());
  }
}

TEST_CASE("report serialization carries infinities as strings") {
  const MajorizationReport rep = check_log_majorization({2, 1}, {4, 0}, 1e-9);
  const json j = to_json(rep);
  CHECK(j.at("final_equality_gap").is_string());
  CHECK(j.at("holds") == false);
  CHECK(j.at("zeros_b") == 1);
}

TEST_CASE("rng determinism and samplers") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  SUBCASE("split streams differ") {
    CHECK(Rng::split(1, 0) != Rng::split(1, 1));
    CHECK(Rng::split(1, 0) != Rng::split(2, 0));
  }
  SUBCASE("normal sampler has sane moments") {
    Rng rng(123);
    double mean = 0.0, var = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const double x = rng.normal();
      mean += x;
      var += x * x;
    }
    mean /= n;
    var = var / n - mean * mean;
    CHECK(std::abs(mean) < 0.03);
    CHECK(std::abs(var - 1.0) < 0.05);
  }
}

TEST_CASE("random ensembles") {
  SUBCASE("pd kind: m = 1 gives a positive scalar") {
    const std::vector<PsdMatrix> one = random_psd(1, 7, "pd");
    REQUIRE(one.size() == 1);
    CHECK(one[0].eigenvalues().min() > 0.0);
  }
  SUBCASE("commuting family commutes to roundoff") {
    const std::vector<PsdMatrix> fam = random_psd(4, 11, "commuting-family-2");
    REQUIRE(fam.size() == 2);
    CHECK(commutator(fam[0].matrix(), fam[1].matrix()).frobenius_norm() <= 1e-12);
  }
  SUBCASE("rank-deficient kind has exactly the requested rank") {
    const std::vector<PsdMatrix> one = random_psd(3, 13, "psd-rank-1");
    REQUIRE(one.size() == 1);
    CHECK(one[0].rank() == 1);
    CHECK(one[0].eigenvalues()[1] == 0.0);  // exact spectral zero
  }
  SUBCASE("unknown kind is rejected") {
    CHECK_THROWS_AS(random_psd(3, 1, "wishart"), std::invalid_argument);
  }
  SUBCASE("haar-like unitary is unitary") {
    Rng rng(17);
    const ComplexMatrix u = haar_like_unitary(rng, 5);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(5)).frobenius_norm() < 1e-13);
  }
  SUBCASE("spread ensemble keeps moderate conditioning") {
    Rng rng(19);
    for (int i = 0; i < 5; ++i) CHECK(random_spread_pd(rng, 4).condition_number() <= 25.0 + 1e-9);
  }
}

TEST_CASE("suite runner basics") {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.threads = 1;
  SUBCASE("unknown suite throws") {
    CHECK_THROWS_AS(run_suite("bogus", cfg), std::invalid_argument);
  }
  SUBCASE("ltk suite runs clean and is deterministic") {
    const SuiteOutcome a = run_suite("ltk", cfg);
    CHECK(a.failures == 0);
    CHECK(a.cases == 50);
    RunConfig two = cfg;
    two.threads = 2;
    const SuiteOutcome b = run_suite("ltk", two);
    REQUIRE(a.case_lines.size() == b.case_lines.size());
    for (size_t i = 0; i < a.case_lines.size(); ++i) CHECK(a.case_lines[i] == b.case_lines[i]);
    CHECK(summary_json(a) == summary_json(b));
  }
}
