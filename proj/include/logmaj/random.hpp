#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logmaj/eig.hpp"

namespace logmaj {

// SplitMix64 with hand-rolled samplers so that every suite is reproducible
// from the seed alone, independent of the standard library's distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  double uniform();                          // [0, 1)
  double uniform(double lo, double hi);      // [lo, hi)
  double log_uniform(double lo, double hi);  // exp(uniform(log lo, log hi))
  double normal();                           // Box-Muller
  Complex complex_normal();                  // (N + iN)/sqrt(2)
  int uniform_int(int lo, int hi);           // inclusive bounds

  // decorrelated per-case seed
  static uint64_t split(uint64_t seed, uint64_t stream);
  static uint64_t hash_name(const std::string& name);

 private:
  uint64_t state_;
};

ComplexMatrix gaussian_matrix(Rng& rng, int m);
ComplexMatrix haar_like_unitary(Rng& rng, int m);  // QR of a Gaussian (twice-orthogonalized)
HermitianMatrix random_hermitian(Rng& rng, int m, double scale = 1.0);
// Q diag(d) Q* with the d_i drawn uniformly from [lo, hi]
HermitianMatrix random_hermitian_spectrum(Rng& rng, int m, double lo, double hi);

// G*G + mu I with complex Gaussian G
PdMatrix random_pd(Rng& rng, int m, double mu = 1e-3);
// Q diag(log-uniform in [0.2, 5]) Q*: moderate condition number for solver work
PdMatrix random_spread_pd(Rng& rng, int m);
// exact spectral zeros via the factor constructor
PsdMatrix random_psd_rank(Rng& rng, int m, int rank);
// shared eigenbasis, independent positive diagonals: commutes up to roundoff
std::vector<PdMatrix> random_commuting_family(Rng& rng, int m, int n);

PdMatrix random_density(Rng& rng, int m);  // trace-1 full-rank state

// kind: "pd" | "psd-rank-<r>" | "commuting-family-<n>"
std::vector<PsdMatrix> random_psd(int m, uint64_t seed, const std::string& kind);

}  // namespace logmaj
