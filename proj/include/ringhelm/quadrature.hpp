#pragma once

#include "ringhelm/params.hpp"
#include "ringhelm/types.hpp"

namespace ringhelm {

// G_H^m from the defining angular integral. m <= 64.
// terms_used reports the number of integrand evaluations. Refinement stops once
// the error estimate is below max(abs_tol, rel_tol |value|) or at the rounding floor.
MethodReport quad_angular(const RingConfig& config, double abs_tol = 1e-13, double rel_tol = 0);

// G_H^m from the spectral Bessel integral; real beta and z != Z only.
MethodReport quad_spectral(const RingConfig& config, double abs_tol = 1e-13, double rel_tol = 0);

// yhat_m(i sigma, omega) from the evanescent-wave integral; sigma > 0, omega > 1.
// Pass omega_m1 = omega - 1 directly when omega is very close to 1.
MethodReport quad_evanescent(double sigma, double omega, int m, double abs_tol = 1e-13, double rel_tol = 0);
MethodReport quad_evanescent_m1(double sigma, double omega_m1, int m, double abs_tol = 1e-13, double rel_tol = 0);

// yhat -> G_H^m.
cplx evanescent_to_coefficient(cplx yhat, double rR);

}  // namespace ringhelm
