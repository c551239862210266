#include <cmath>

#include <doctest.h>

#include "logmaj/majorization.hpp"
#include "logmaj/random.hpp"

using namespace logmaj;

namespace {

ComplexMatrix mat2(double a, double b, double c, double d) {
  return ComplexMatrix(2, {Complex(a), Complex(b), Complex(c), Complex(d)});
}

double reconstruction_error(const PsdMatrix& a) {
  const int m = a.dim();
  ComplexMatrix rebuilt(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < m; ++k)
        acc += a.eigenvectors()(i, k) * a.eigenvalues()[k] * std::conj(a.eigenvectors()(j, k));
      rebuilt(i, j) = acc;
    }
  return (rebuilt - a.matrix()).frobenius_norm();
}

}  // namespace

TEST_CASE("jacobi eigendecomposition on frozen inputs") {
  SUBCASE("diagonal input is only reordered") {
    const EigResult e = jacobi_eig(ComplexMatrix::diagonal(std::vector<double>{1.0, 3.0, 2.0}));
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(e.values[2] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("identity keeps a unitary eigenbasis") {
    const EigResult e = jacobi_eig(ComplexMatrix::identity(4));
    for (int i = 0; i < 4; ++i) CHECK(e.values[i] == doctest::Approx(1.0));
    const ComplexMatrix gram = e.vectors.adjoint() * e.vectors;
    CHECK((gram - ComplexMatrix::identity(4)).frobenius_norm() < 1e-12);
  }
  SUBCASE("[[2,1],[1,2]] has the quadratic-formula spectrum (3,1)") {
    const EigResult e = jacobi_eig(mat2(2, 1, 1, 2));
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("eigendecomposition reconstruction and orthogonality on random hermitians") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 6;
    const HermitianMatrix h = random_hermitian(rng, m);
    const EigResult e = jacobi_eig(h.matrix());
    CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::identity(m)).frobenius_norm() <
          tol::ortho);
    ComplexMatrix rebuilt(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < m; ++k)
          acc += e.vectors(i, k) * e.values[k] * std::conj(e.vectors(j, k));
        rebuilt(i, j) = acc;
      }
    CHECK((rebuilt - h.matrix()).frobenius_norm() <= 1e-10 * (1.0 + h.frobenius_norm()));
  }
}

TEST_CASE("eigendecomposition handles clustered and scaled spectra") {
  Rng rng(43);
  SUBCASE("repeated eigenvalues keep an orthonormal eigenbasis") {
    const ComplexMatrix u = haar_like_unitary(rng, 4);
    ComplexMatrix a(4);
    const double d[4] = {2.0, 2.0, 2.0, 1.0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += u(i, k) * d[k] * std::conj(u(j, k));
        a(i, j) = acc;
      }
    const EigResult e = jacobi_eig(hermitian_part(a));
    CHECK(e.values[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(e.values[2] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(e.values[3] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK((e.vectors.adjoint() * e.vectors - ComplexMatrix::identity(4)).frobenius_norm() <
          tol::ortho);
  }
  SUBCASE("scale invariance across 16 orders of magnitude") {
    const HermitianMatrix h = random_hermitian(rng, 3);
    const EigResult base = jacobi_eig(h.matrix());
    for (double scale : {1e-8, 1e8}) {
      const EigResult scaled = jacobi_eig(ComplexMatrix(scale * h.matrix()));
      for (int i = 0; i < 3; ++i)
        CHECK(scaled.values[i] == doctest::Approx(scale * base.values[i]).epsilon(1e-12));
    }
  }
  SUBCASE("near-degenerate gap is resolved") {
    const ComplexMatrix u = haar_like_unitary(rng, 3);
    ComplexMatrix a(3);
    const double d[3] = {1.0 + 1e-9, 1.0, 0.5};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < 3; ++k) acc += u(i, k) * d[k] * std::conj(u(j, k));
        a(i, j) = acc;
      }
    const EigResult e = jacobi_eig(hermitian_part(a));
    CHECK(e.values[0] - e.values[1] == doctest::Approx(1e-9).epsilon(1e-4));
  }
}

TEST_CASE("psd reconstruction invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const PdMatrix a = random_pd(rng, 2 + trial % 5);
    CHECK(reconstruction_error(a) <= 1e-10 * (1.0 + a.matrix().frobenius_norm()));
  }
}

TEST_CASE("hermitian construction rejects non-hermitian input") {
  CHECK_THROWS_AS(HermitianMatrix(mat2(0, 1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(PdMatrix(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0})),
                  std::domain_error);
  CHECK_THROWS_AS(PsdMatrix(ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0})),
                  std::domain_error);
}

TEST_CASE("matrix_function handles the kernel per convention") {
  SUBCASE("square root of diag(4,9)") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{4.0, 9.0}));
    const HermitianMatrix r = matrix_function(a, [](double x) { return std::sqrt(x); });
    CHECK(r.matrix()(0, 0).real() == doctest::Approx(2.0));
    CHECK(r.matrix()(1, 1).real() == doctest::Approx(3.0));
  }
  SUBCASE("log with the support convention maps the kernel to zero") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{std::exp(1.0), 0.0}));
    const HermitianMatrix r =
        matrix_function(a, [](double x) { return std::log(x); }, ZeroConvention::map_to_zero);
    CHECK(r.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(r.matrix()(1, 1)) < 1e-14);
  }
  SUBCASE("log without the convention is a domain error on singular input") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}));
    CHECK_THROWS_AS(matrix_function(a, [](double x) { return std::log(x); }), std::domain_error);
  }
  SUBCASE("generalized inverse of diag(2,0)") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.0}));
    const PsdMatrix inv = matrix_power(a, -1.0);
    CHECK(inv.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(std::abs(inv.matrix()(1, 1)) < 1e-14);
  }
}

TEST_CASE("functional calculus composition: pow_p of pow_q is pow_pq") {
  Rng rng(13);
  const PdMatrix a = random_pd(rng, 4);
  const PsdMatrix twice = matrix_power(matrix_power(a, 0.7), 0.4);
  const PsdMatrix direct = matrix_power(a, 0.28);
  CHECK((twice.matrix() - direct.matrix()).frobenius_norm() <=
        1e-10 * (1.0 + direct.matrix().frobenius_norm()));
}

TEST_CASE("complex powers") {
  SUBCASE("identity to any complex power stays the identity") {
    const PsdMatrix eye(ComplexMatrix::identity(3));
    const ComplexMatrix r = complex_power(eye, Complex(1.0, 5.0));
    CHECK((r - ComplexMatrix::identity(3)).frobenius_norm() < 1e-13);
  }
  SUBCASE("0^z = 0 keeps singular directions dark") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{4.0, 0.0}));
    const ComplexMatrix r = complex_power(a, Complex(1.0, 0.0));
    CHECK(std::abs(r(0, 0) - Complex(4.0)) < 1e-13);
    CHECK(std::abs(r(1, 1)) < 1e-14);
  }
  SUBCASE("scalar imaginary power is the complex exponential") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{std::exp(1.0)}));
    const ComplexMatrix r = complex_power(a, Complex(0.0, 1.0));
    CHECK(std::abs(r(0, 0) - Complex(std::cos(1.0), std::sin(1.0))) < 1e-14);
  }
  SUBCASE("imaginary power of a PD matrix is unitary") {
    Rng rng(17);
    const PdMatrix a = random_pd(rng, 3);
    const ComplexMatrix u = complex_power(a, Complex(0.0, 2.0));
    CHECK((u.adjoint() * u - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("singular values on frozen inputs") {
  SUBCASE("unitary matrices have unit spectrum") {
    Rng rng(19);
    const ComplexMatrix u = haar_like_unitary(rng, 4);
    const Spectrum s = singular_values(u);
    for (int i = 0; i < 4; ++i) CHECK(s[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diag(-3,2) has singular values (3,2)") {
    const Spectrum s = singular_values(ComplexMatrix::diagonal(std::vector<double>{-3.0, 2.0}));
    CHECK(s[0] == doctest::Approx(3.0));
    CHECK(s[1] == doctest::Approx(2.0));
  }
  SUBCASE("nilpotent [[0,2],[0,0]]: X*X = diag(0,4) so s = (2,0)") {
    const Spectrum s = singular_values(mat2(0, 2, 0, 0));
    CHECK(s[0] == doctest::Approx(2.0));
    CHECK(std::abs(s[1]) < 1e-12);
  }
  SUBCASE("s_i(X)^2 = lambda_i(X*X) entrywise") {
    Rng rng(23);
    const ComplexMatrix x = gaussian_matrix(rng, 5);
    const Spectrum s = singular_values(x);
    const EigResult e = jacobi_eig(hermitian_part(x.adjoint() * x));
    for (int i = 0; i < 5; ++i)
      CHECK(s[i] * s[i] == doctest::Approx(e.values[i]).epsilon(1e-10));
  }
}

TEST_CASE("norms") {
  CHECK(schatten_norm(ComplexMatrix::identity(3), 1.0) == doctest::Approx(3.0));
  CHECK(schatten_norm(ComplexMatrix::diagonal(std::vector<double>{3.0, 4.0}), 2.0) ==
        doctest::Approx(5.0));
  // largest singular value of [[1,1],[0,1]] is the golden ratio
  CHECK(operator_norm(mat2(1, 1, 0, 1)) ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(schatten_norm(ComplexMatrix::identity(2), 0.5), std::invalid_argument);

  const ComplexMatrix d = ComplexMatrix::diagonal(std::vector<double>{3.0, 2.0, 0.5});
  const std::vector<double> prods = ky_fan_products(d);
  CHECK(prods[0] == doctest::Approx(3.0));
  CHECK(prods[1] == doctest::Approx(6.0));
  CHECK(prods[2] == doctest::Approx(3.0));
  CHECK(ky_fan_norm(d, 2) == doctest::Approx(5.0));

  CHECK(NormKind::parse("schatten:3").p == doctest::Approx(3.0));
  CHECK(NormKind::parse("trace").strictly_increasing());
  CHECK_FALSE(NormKind::parse("operator").strictly_increasing());
  CHECK_FALSE(NormKind::parse("kyfan:2").strictly_increasing());
  CHECK_THROWS_AS(NormKind::parse("nuclear"), std::invalid_argument);
}

TEST_CASE("norms are unitarily invariant") {
  Rng rng(53);
  const ComplexMatrix x = gaussian_matrix(rng, 4);
  const ComplexMatrix u = haar_like_unitary(rng, 4);
  const ComplexMatrix v = haar_like_unitary(rng, 4);
  const ComplexMatrix conj = u * x * v;
  for (const NormKind& norm : {NormKind::trace(), NormKind::frobenius(), NormKind::schatten(3.0),
                               NormKind::op(), NormKind::ky_fan(2)}) {
    CHECK(norm(conj) == doctest::Approx(norm(x)).epsilon(1e-11));
  }
}

TEST_CASE("weak majorization orders every unitarily invariant norm") {
  // Ky Fan dominance: lambda(A) weakly majorized by lambda(B) forces
  // ||A|| <= ||B|| for the whole norm family
  Rng rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    const PdMatrix a = random_pd(rng, 4);
    const PdMatrix b = random_pd(rng, 4);
    const ArakiResult res = araki_pair(a, b, 0.5);
    REQUIRE(res.report.holds);
    const ComplexMatrix lhs = ComplexMatrix::diagonal(res.lhs.values());
    const ComplexMatrix rhs = ComplexMatrix::diagonal(res.rhs.values());
    for (const NormKind& norm :
         {NormKind::trace(), NormKind::frobenius(), NormKind::schatten(4.0), NormKind::op(),
          NormKind::ky_fan(2), NormKind::ky_fan(3)}) {
      CHECK(norm(lhs) <= norm(rhs) * (1.0 + 1e-10) + 1e-12);
    }
  }
}

TEST_CASE("support projections") {
  SUBCASE("diagonal support") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.0}));
    const PsdMatrix p = support_projection(a);
    CHECK(p.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(p.matrix()(1, 1)) < 1e-14);
  }
  SUBCASE("PD support is the identity") {
    Rng rng(29);
    const PdMatrix a = random_pd(rng, 3);
    CHECK((support_projection(a).matrix() - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
  }
  SUBCASE("rank-one support reproduces the projector, and P A = A") {
    Rng rng(31);
    const PsdMatrix a = random_psd_rank(rng, 3, 1);
    const PsdMatrix p = support_projection(a);
    CHECK((p.matrix() * a.matrix() - a.matrix()).frobenius_norm() <=
          1e-10 * (1.0 + a.matrix().frobenius_norm()));
    CHECK(p.rank() == 1);
    // eigen oracle: the projector onto the leading eigenvector
    const ComplexMatrix& u = a.eigenvectors();
    ComplexMatrix vv(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) vv(i, j) = u(i, 0) * std::conj(u(j, 0));
    CHECK((p.matrix() - vv).frobenius_norm() < 1e-10);
  }
}

TEST_CASE("projection meet") {
  const PsdMatrix p(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}));
  const PsdMatrix q(ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0}));
  SUBCASE("meet with itself") {
    const PsdMatrix meet = projection_meet(p, p);
    CHECK((meet.matrix() - p.matrix()).frobenius_norm() < 1e-12);
  }
  SUBCASE("orthogonal ranges meet in zero") {
    const PsdMatrix meet = projection_meet(p, q);
    CHECK(meet.matrix().frobenius_norm() < 1e-12);
  }
  SUBCASE("two planes in 3d meet in their common line") {
    // span{e1,e2} and span{e1,(e2+e3)/sqrt2} intersect exactly in span{e1}
    const PsdMatrix pa(ComplexMatrix::diagonal(std::vector<double>{1.0, 1.0, 0.0}));
    ComplexMatrix qb(3);
    qb(0, 0) = 1.0;
    qb(1, 1) = 0.5;
    qb(1, 2) = 0.5;
    qb(2, 1) = 0.5;
    qb(2, 2) = 0.5;
    const PsdMatrix meet = projection_meet(pa, PsdMatrix(qb));
    CHECK((meet.matrix() - ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0, 0.0}))
              .frobenius_norm() < 1e-10);
  }
  SUBCASE("random rank-2 meets in dim 3: null-space oracle on the stacked complements") {
    Rng rng(37);
    for (int trial = 0; trial < 5; ++trial) {
      const PsdMatrix pa = support_projection(random_psd_rank(rng, 3, 2));
      const PsdMatrix pb = support_projection(random_psd_rank(rng, 3, 2));
      const PsdMatrix meet = projection_meet(pa, pb);
      // idempotent and hermitian
      CHECK((meet.matrix() * meet.matrix() - meet.matrix()).frobenius_norm() < 1e-10);
      CHECK((meet.matrix() - meet.matrix().adjoint()).frobenius_norm() < 1e-12);
      // oracle: null space of (I-P)*(I-P) + (I-Q)*(I-Q)
      const ComplexMatrix cp = ComplexMatrix::identity(3) - pa.matrix();
      const ComplexMatrix cq = ComplexMatrix::identity(3) - pb.matrix();
      const EigResult null_eig =
          jacobi_eig(hermitian_part(cp.adjoint() * cp + cq.adjoint() * cq));
      int null_dim = 0;
      for (int i = 0; i < 3; ++i)
        if (null_eig.values[i] < 1e-10) ++null_dim;
      CHECK(meet.rank() == null_dim);
      CHECK(meet.rank() >= 1);  // two planes in dim 3 always share a line
      // meet is dominated by both projections
      CHECK((pa.matrix() * meet.matrix() - meet.matrix()).frobenius_norm() < 1e-10);
      CHECK((pb.matrix() * meet.matrix() - meet.matrix()).frobenius_norm() < 1e-10);
    }
  }
  SUBCASE("non-projection input is rejected") {
    const PsdMatrix a(ComplexMatrix::diagonal(std::vector<double>{2.0, 0.0}));
    CHECK_THROWS_AS(projection_meet(a, p), std::invalid_argument);
  }
}

TEST_CASE("determinant and compound basics") {
  Rng rng(41);
  const ComplexMatrix a = gaussian_matrix(rng, 5);
  const ComplexMatrix b = gaussian_matrix(rng, 5);
  // det is multiplicative (LU path at dim 5)
  const Complex dab = determinant(a * b);
  const Complex dadb = determinant(a) * determinant(b);
  CHECK(std::abs(dab - dadb) < 1e-9 * (1.0 + std::abs(dadb)));
}
