#include <cmath>

#include <doctest.h>

#include "logmaj/means.hpp"
#include "logmaj/random.hpp"

using namespace logmaj;

namespace {

// derivative-free pattern search over 2x2 Hermitian parameters (a, d, re, im),
// independent of the Karcher field; minimizes the weighted squared distance
ComplexMatrix karcher_cost_minimizer(const std::vector<PdMatrix>& as, const WeightVector& w) {
  auto cost = [&](double a, double d, double re, double im) {
    ComplexMatrix x(2);
    x(0, 0) = a;
    x(1, 1) = d;
    x(0, 1) = Complex(re, im);
    x(1, 0) = Complex(re, -im);
    // reject non-PD trial points
    const double det = a * d - (re * re + im * im);
    if (a <= 1e-8 || d <= 1e-8 || det <= 1e-10) return 1e100;
    const PdMatrix xp(x);
    double acc = 0.0;
    for (int j = 0; j < static_cast<int>(as.size()); ++j) {
      const double dist = riemannian_distance(xp, as[static_cast<size_t>(j)]);
      acc += w[j] * dist * dist;
    }
    return acc;
  };

  // start from the arithmetic mean
  ComplexMatrix arith(2);
  for (int j = 0; j < static_cast<int>(as.size()); ++j)
    arith += w[j] * as[static_cast<size_t>(j)].matrix();
  double p[4] = {arith(0, 0).real(), arith(1, 1).real(), arith(0, 1).real(), arith(0, 1).imag()};

  double step = 0.25;
  double best = cost(p[0], p[1], p[2], p[3]);
  while (step > 1e-7) {
    bool improved = false;
    for (int k = 0; k < 4; ++k) {
      for (double sgn : {1.0, -1.0}) {
        double q[4] = {p[0], p[1], p[2], p[3]};
        q[k] += sgn * step;
        const double c = cost(q[0], q[1], q[2], q[3]);
        if (c < best) {
          best = c;
          p[k] = q[k];
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  ComplexMatrix x(2);
  x(0, 0) = p[0];
  x(1, 1) = p[1];
  x(0, 1) = Complex(p[2], p[3]);
  x(1, 0) = Complex(p[2], -p[3]);
  return x;
}

}  // namespace

TEST_CASE("weight vector validation") {
  CHECK_THROWS_AS(WeightVector({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({1.5, -0.5}), std::invalid_argument);
  CHECK(WeightVector::uniform(4).size() == 4);
}

TEST_CASE("two-variable geometric mean") {
  Rng rng(101);
  const PdMatrix a = random_spread_pd(rng, 3);
  const PdMatrix b = random_spread_pd(rng, 3);
  SUBCASE("endpoints") {
    CHECK((geometric_mean_two(a, b, 0.0).matrix() - a.matrix()).frobenius_norm() < 1e-11);
    CHECK((geometric_mean_two(a, b, 1.0).matrix() - b.matrix()).frobenius_norm() < 1e-11);
  }
  SUBCASE("commuting diagonals interpolate entrywise") {
    const PdMatrix da(ComplexMatrix::diagonal(std::vector<double>{4.0, 9.0}));
    const PdMatrix db(ComplexMatrix::identity(2));
    const PdMatrix g = geometric_mean_two(da, db, 0.5);
    CHECK(g.matrix()(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(g.matrix()(1, 1).real() == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("A # I is the square root") {
    const PdMatrix ca(ComplexMatrix(2, {Complex(2), Complex(1), Complex(1), Complex(1)}));
    const PdMatrix g = geometric_mean_two(ca, PdMatrix(ComplexMatrix::identity(2)), 0.5);
    CHECK((g.matrix() - matrix_sqrt(ca).matrix()).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("riemannian distance") {
  Rng rng(103);
  const PdMatrix a = random_spread_pd(rng, 3);
  const PdMatrix b = random_spread_pd(rng, 3);
  CHECK(riemannian_distance(a, a) < 1e-7);
  CHECK(riemannian_distance(a, b) == doctest::Approx(riemannian_distance(b, a)).epsilon(1e-10));
  const PdMatrix scaled(
      ComplexMatrix::diagonal(std::vector<double>{std::exp(2.0), std::exp(-2.0)}));
  CHECK(riemannian_distance(PdMatrix(ComplexMatrix::identity(2)), scaled) ==
        doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("karcher field") {
  Rng rng(107);
  const PdMatrix a = random_spread_pd(rng, 3);
  SUBCASE("vanishes at the single-matrix mean") {
    CHECK(karcher_field(a, {a}, WeightVector::uniform(1)).frobenius_norm() < 1e-12);
  }
  SUBCASE("vanishes when every matrix equals the base point") {
    const std::vector<PdMatrix> as{a, a, a};
    CHECK(karcher_field(a, as, WeightVector::uniform(3)).frobenius_norm() < 1e-12);
  }
  SUBCASE("at the identity it is minus the weighted log sum") {
    const std::vector<PdMatrix> as{
        PdMatrix(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.5})),
        PdMatrix(ComplexMatrix::diagonal(std::vector<double>{3.0, 1.0}))};
    const WeightVector w({0.25, 0.75});
    const HermitianMatrix f = karcher_field(PdMatrix(ComplexMatrix::identity(2)), as, w);
    ComplexMatrix expected(2);
    expected(0, 0) = -(0.25 * std::log(2.0) + 0.75 * std::log(3.0));
    expected(1, 1) = -(0.25 * std::log(0.5) + 0.75 * std::log(1.0));
    CHECK((f.matrix() - expected).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("karcher mean solver") {
  Rng rng(109);
  KarcherConfig cfg;

  SUBCASE("n = 2 equals the weighted geometric mean") {
    const PdMatrix a = random_spread_pd(rng, 3);
    const PdMatrix b = random_spread_pd(rng, 3);
    const double alpha = 0.3;
    const KarcherSolveResult res = karcher_mean({a, b}, WeightVector({1.0 - alpha, alpha}), cfg);
    CHECK(res.residual <= cfg.tol);
    const PdMatrix direct = geometric_mean_two(a, b, alpha);
    CHECK((res.mean.matrix() - direct.matrix()).frobenius_norm() <=
          1e-10 * (1.0 + direct.matrix().frobenius_norm()));
  }

  SUBCASE("idempotence") {
    const PdMatrix a = random_spread_pd(rng, 4);
    const KarcherSolveResult res = karcher_mean({a, a, a}, WeightVector::uniform(3), cfg);
    CHECK((res.mean.matrix() - a.matrix()).frobenius_norm() < 1e-10);
    CHECK(res.iterations <= 1);
  }

  SUBCASE("commuting diagonals: entrywise weighted geometric mean, solved at the start") {
    const PdMatrix a(ComplexMatrix::diagonal(std::vector<double>{2.0, 8.0}));
    const PdMatrix b(ComplexMatrix::diagonal(std::vector<double>{8.0, 2.0}));
    const KarcherSolveResult res = karcher_mean({a, b}, WeightVector::uniform(2), cfg);
    CHECK(res.mean.matrix()(0, 0).real() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(res.mean.matrix()(1, 1).real() == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(res.iterations <= 1);
  }

  SUBCASE("residual history is non-increasing") {
    std::vector<PdMatrix> as;
    for (int j = 0; j < 3; ++j) as.push_back(random_spread_pd(rng, 3));
    const KarcherSolveResult res = karcher_mean(as, WeightVector::uniform(3), cfg);
    CHECK(res.residual <= cfg.tol);
    for (size_t i = 0; i + 1 < res.residual_history.size(); ++i)
      CHECK(res.residual_history[i + 1] <= res.residual_history[i]);
  }

  SUBCASE("determinant multiplies through the mean") {
    std::vector<PdMatrix> as;
    for (int j = 0; j < 3; ++j) as.push_back(random_spread_pd(rng, 3));
    const WeightVector w({0.5, 0.2, 0.3});
    const KarcherSolveResult res = karcher_mean(as, w, cfg);
    double expect = 1.0;
    for (int j = 0; j < 3; ++j)
      expect *= std::pow(determinant(as[static_cast<size_t>(j)].matrix()).real(), w[j]);
    CHECK(determinant(res.mean.matrix()).real() == doctest::Approx(expect).epsilon(1e-10));
  }

  SUBCASE("three random 2x2 matrices match the grid-refined cost minimizer") {
    std::vector<PdMatrix> as;
    for (int j = 0; j < 3; ++j) as.push_back(random_spread_pd(rng, 2));
    const WeightVector w = WeightVector::uniform(3);
    const KarcherSolveResult res = karcher_mean(as, w, cfg);
    const ComplexMatrix oracle = karcher_cost_minimizer(as, w);
    CHECK((res.mean.matrix() - oracle).frobenius_norm() <=
          1e-5 * (1.0 + oracle.frobenius_norm()));
  }

  SUBCASE("ill-conditioned input is rejected by the guard") {
    // extreme conditioning already fails the PD rank floor at construction
    CHECK_THROWS_AS(PdMatrix(ComplexMatrix::diagonal(std::vector<double>{1e13, 1.0})),
                    std::domain_error);
    // the configurable solver guard rejects earlier than the type does
    const PdMatrix bad(ComplexMatrix::diagonal(std::vector<double>{1e8, 1.0}));
    KarcherConfig strict;
    strict.max_condition = 1e6;
    CHECK_THROWS_AS(karcher_mean({bad}, WeightVector::uniform(1), strict), std::domain_error);
  }
}

TEST_CASE("log-euclidean mean") {
  Rng rng(113);
  SUBCASE("single matrix") {
    const PdMatrix a = random_spread_pd(rng, 3);
    CHECK((log_euclidean_mean({a}, WeightVector::uniform(1)).matrix() - a.matrix())
              .frobenius_norm() < 1e-11);
  }
  SUBCASE("commuting family agrees with the Karcher mean") {
    const std::vector<PdMatrix> fam = random_commuting_family(rng, 3, 3);
    const WeightVector w({0.5, 0.3, 0.2});
    const PdMatrix le = log_euclidean_mean(fam, w);
    const KarcherSolveResult g = karcher_mean(fam, w, {});
    CHECK((le.matrix() - g.mean.matrix()).frobenius_norm() <=
          1e-10 * (1.0 + le.matrix().frobenius_norm()));
  }
  SUBCASE("non-commuting pair differs from the Karcher mean") {
    std::vector<PdMatrix> as{random_spread_pd(rng, 3), random_spread_pd(rng, 3)};
    const WeightVector w({0.5, 0.5});
    const PdMatrix le = log_euclidean_mean(as, w);
    const KarcherSolveResult g = karcher_mean(as, w, {});
    CHECK(riemannian_distance(le, g.mean) > 1e-6);
  }
}

TEST_CASE("power mean") {
  Rng rng(127);
  std::vector<PdMatrix> as;
  for (int j = 0; j < 3; ++j) as.push_back(random_spread_pd(rng, 3));
  const WeightVector w({0.2, 0.5, 0.3});
  PowerMeanConfig cfg;

  SUBCASE("t = 1 is the weighted arithmetic mean") {
    ComplexMatrix arith(3);
    for (int j = 0; j < 3; ++j) arith += w[j] * as[static_cast<size_t>(j)].matrix();
    CHECK((power_mean(as, w, 1.0, cfg).matrix() - arith).frobenius_norm() < 1e-11);
  }
  SUBCASE("t = -1 is the weighted harmonic mean") {
    ComplexMatrix hsum(3);
    for (int j = 0; j < 3; ++j) hsum += w[j] * matrix_inverse(as[static_cast<size_t>(j)]).matrix();
    const PdMatrix harmonic = matrix_inverse(PdMatrix(hermitian_part(hsum)));
    CHECK((power_mean(as, w, -1.0, cfg).matrix() - harmonic.matrix()).frobenius_norm() < 1e-10);
  }
  SUBCASE("t -> 0 approaches the Karcher mean monotonically") {
    const PdMatrix g = karcher_mean(as, w, {}).mean;
    double prev = 1e100;
    for (double t : {0.5, 0.25, 0.1, 0.05}) {
      const double d = riemannian_distance(power_mean(as, w, t, cfg), g);
      CHECK(d < prev);
      prev = d;
    }
    CHECK(prev < 0.1);
  }
  SUBCASE("t outside [-1,1] or zero rejected") {
    CHECK_THROWS_AS(power_mean(as, w, 0.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(power_mean(as, w, 1.5, cfg), std::invalid_argument);
  }
}

TEST_CASE("rescaled power log-majorization and the Log-Euclidean envelope") {
  Rng rng(131);
  std::vector<PdMatrix> as;
  for (int j = 0; j < 3; ++j) as.push_back(random_spread_pd(rng, 3));
  const WeightVector w = WeightVector::uniform(3);

  SUBCASE("random non-commuting family holds") {
    const PowerMajorizationChecks checks = karcher_power_majorization(as, w, 2.0, 1.0, 1e-8);
    CHECK(checks.power_pair.holds);
    CHECK(checks.le_envelope.holds);
  }
  SUBCASE("p = q is an equality") {
    const PowerMajorizationChecks checks = karcher_power_majorization(as, w, 1.5, 1.5, 1e-8);
    for (double m : checks.power_pair.margins) CHECK(std::abs(m) < 1e-9);
  }
  SUBCASE("commuting family meets the envelope with equality") {
    const std::vector<PdMatrix> fam = random_commuting_family(rng, 3, 3);
    const PowerMajorizationChecks checks = karcher_power_majorization(fam, w, 2.0, 0.5, 1e-8);
    CHECK(checks.le_envelope.holds);
    for (double m : checks.le_envelope.margins) CHECK(std::abs(m) < 1e-8);
  }
}

TEST_CASE("power mean is Loewner-monotone in t") {
  Rng rng(139);
  std::vector<PdMatrix> as;
  for (int j = 0; j < 3; ++j) as.push_back(random_spread_pd(rng, 3));
  const WeightVector w = WeightVector::uniform(3);
  PdMatrix prev = power_mean(as, w, -1.0);
  for (double t : {-0.5, 0.25, 0.5, 1.0}) {
    const PdMatrix next = power_mean(as, w, t);
    const EigResult gap = jacobi_eig(hermitian_part(next.matrix() - prev.matrix()));
    CHECK(gap.values.min() >= -1e-9);
    prev = next;
  }
}

TEST_CASE("rescaled means converge to the Log-Euclidean mean") {
  Rng rng(137);
  SUBCASE("single matrix: zero at every q") {
    const PdMatrix a = random_spread_pd(rng, 3);
    const std::vector<LieTrotterRow> rows =
        lie_trotter_scan({a}, WeightVector::uniform(1), {1.0, 0.5, 0.1});
    for (const LieTrotterRow& r : rows) CHECK(r.distance < 1e-7);
  }
  SUBCASE("commuting family: zero at every q") {
    const std::vector<PdMatrix> fam = random_commuting_family(rng, 3, 2);
    const std::vector<LieTrotterRow> rows =
        lie_trotter_scan(fam, WeightVector::uniform(2), {1.0, 0.5, 0.1});
    for (const LieTrotterRow& r : rows) CHECK(r.distance < 1e-7);
  }
  SUBCASE("random pair: decreasing to below 1e-3 at q = 0.01") {
    std::vector<PdMatrix> as{random_spread_pd(rng, 3), random_spread_pd(rng, 3)};
    const std::vector<LieTrotterRow> rows =
        lie_trotter_scan(as, WeightVector::uniform(2), {1.0, 0.5, 0.1, 0.01});
    CHECK(rows.back().distance < 1e-3);
    CHECK(rows.back().distance < rows.front().distance);
  }
}
