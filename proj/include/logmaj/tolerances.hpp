#pragma once

// Central numerical tolerances. Everything downstream of the eigensolver
// inherits these; suite-level tolerances are configurable via RunConfig.
namespace logmaj::tol {

inline constexpr double hermitian = 1e-10;     // construction check, relative
inline constexpr double psd = 1e-10;           // allowed negative eigenvalue, relative
inline constexpr double rank = 1e-12;          // support cut, relative to lambda_1
inline constexpr double ortho = 1e-12;         // ||U*U - I||_F bound
inline constexpr double jacobi_off = 1e-13;    // off(A) <= jacobi_off * ||A||_F
inline constexpr int jacobi_max_sweeps = 50;
inline constexpr double commute = 1e-10;       // commuting-pair precondition, relative
inline constexpr double majorization = 1e-9;   // default margin tolerance
inline constexpr double karcher = 1e-12;       // Karcher field residual
inline constexpr double power_mean = 1e-12;    // power-mean fixed-point residual
inline constexpr double eq_case = 1e-7;        // equality-case verdicts
inline constexpr double max_condition = 1e12;  // solver input guard

}  // namespace logmaj::tol
