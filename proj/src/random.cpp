#include "logmaj/random.hpp"

#include <cmath>
#include <numbers>

namespace logmaj {

uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::sqrt(0.5);
}

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

uint64_t Rng::split(uint64_t seed, uint64_t stream) {
  Rng g(seed ^ (stream * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL));
  return g.next();
}

uint64_t Rng::hash_name(const std::string& name) {
  uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

ComplexMatrix gaussian_matrix(Rng& rng, int m) {
  ComplexMatrix g(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix haar_like_unitary(Rng& rng, int m) {
  ComplexMatrix g = gaussian_matrix(rng, m);
  // modified Gram-Schmidt on columns, run twice
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < j; ++k) {
        Complex dot = 0.0;
        for (int i = 0; i < m; ++i) dot += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < m; ++i) g(i, j) -= dot * g(i, k);
      }
      double norm = 0.0;
      for (int i = 0; i < m; ++i) norm += std::norm(g(i, j));
      norm = std::sqrt(norm);
      if (norm < 1e-12) {  // re-draw the degenerate column
        for (int i = 0; i < m; ++i) g(i, j) = rng.complex_normal();
        --j;
        continue;
      }
      for (int i = 0; i < m; ++i) g(i, j) /= norm;
    }
  }
  return g;
}

HermitianMatrix random_hermitian(Rng& rng, int m, double scale) {
  return HermitianMatrix(scale * hermitian_part(gaussian_matrix(rng, m)));
}

HermitianMatrix random_hermitian_spectrum(Rng& rng, int m, double lo, double hi) {
  const ComplexMatrix u = haar_like_unitary(rng, m);
  std::vector<double> d(static_cast<size_t>(m));
  for (double& x : d) x = rng.uniform(lo, hi);
  ComplexMatrix r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < m; ++k) acc += u(i, k) * d[static_cast<size_t>(k)] * std::conj(u(j, k));
      r(i, j) = acc;
    }
  return HermitianMatrix(hermitian_part(r));
}

PdMatrix random_pd(Rng& rng, int m, double mu) {
  const ComplexMatrix g = gaussian_matrix(rng, m);
  ComplexMatrix a = g.adjoint() * g;
  for (int i = 0; i < m; ++i) a(i, i) += mu;
  return PdMatrix(hermitian_part(a));
}

PdMatrix random_spread_pd(Rng& rng, int m) {
  const ComplexMatrix u = haar_like_unitary(rng, m);
  std::vector<double> d(static_cast<size_t>(m));
  for (double& x : d) x = rng.log_uniform(0.2, 5.0);
  return PdMatrix(PsdMatrix::from_factors(u, d));
}

PsdMatrix random_psd_rank(Rng& rng, int m, int rank) {
  if (rank < 1 || rank > m) throw std::invalid_argument("random_psd_rank: rank out of range");
  const ComplexMatrix u = haar_like_unitary(rng, m);
  std::vector<double> d(static_cast<size_t>(m), 0.0);
  for (int i = 0; i < rank; ++i) d[static_cast<size_t>(i)] = rng.log_uniform(0.2, 5.0);
  return PsdMatrix::from_factors(u, d);
}

std::vector<PdMatrix> random_commuting_family(Rng& rng, int m, int n) {
  const ComplexMatrix u = haar_like_unitary(rng, m);
  std::vector<PdMatrix> family;
  family.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<double> d(static_cast<size_t>(m));
    for (double& x : d) x = rng.log_uniform(0.2, 5.0);
    family.push_back(PdMatrix(PsdMatrix::from_factors(u, d)));
  }
  return family;
}

PdMatrix random_density(Rng& rng, int m) {
  const PdMatrix a = random_pd(rng, m);
  return PdMatrix(PsdMatrix::from_factors(a.eigenvectors(), [&] {
    std::vector<double> d = a.eigenvalues().values();
    const double tr = a.trace();
    for (double& x : d) x /= tr;
    return d;
  }()));
}

std::vector<PsdMatrix> random_psd(int m, uint64_t seed, const std::string& kind) {
  if (m < 1) throw std::invalid_argument("random_psd: m >= 1 required");
  Rng rng(seed);
  if (kind == "pd") return {random_pd(rng, m)};
  if (kind.rfind("psd-rank-", 0) == 0) {
    const int r = std::stoi(kind.substr(9));
    return {random_psd_rank(rng, m, r)};
  }
  if (kind.rfind("commuting-family-", 0) == 0) {
    const int n = std::stoi(kind.substr(17));
    if (n < 1) throw std::invalid_argument("random_psd: family size >= 1 required");
    std::vector<PsdMatrix> out;
    for (const PdMatrix& p : random_commuting_family(rng, m, n)) out.push_back(p);
    return out;
  }
  throw std::invalid_argument("random_psd: unknown kind '" + kind + "'");
}

}  // namespace logmaj
