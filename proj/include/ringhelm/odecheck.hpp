#pragma once

#include <array>
#include <utility>

#include "ringhelm/hyper2d.hpp"
#include "ringhelm/types.hpp"

namespace ringhelm {

using OdeCoefficients = std::array<cplx, 5>;  // c0 .. c4, multiplying d^k/dvar^k

// Fourth-order operator in x at fixed chi = x y / 2 satisfied by g_plus and g_minus.
OdeCoefficients ode_x_coefficients(int m, cplx y, double x);
// Fourth-order operator in omega at fixed lambda satisfied by yhat_m.
OdeCoefficients ode_omega_coefficients(int m, cplx lambda, double omega);

// |sum c_k d_k| / sum |c_k d_k|, with 0/0 taken as 0.
double relative_residual(const OdeCoefficients& c, const Jet& derivs);
// sum c_k d_k.
cplx apply_operator(const OdeCoefficients& c, const Jet& derivs);

// derivs = [g, g', g'', g''', g''''] in x along fixed x y.
double ode_residual_x(int m, cplx y, double x, const Jet& derivs);
// derivs of yhat in omega at fixed lambda.
double ode_residual_omega(int m, cplx lambda, double omega, const Jet& derivs);

// Chain rule for x = 2 / (omega + 1): x-derivatives to omega-derivatives.
Jet jet_x_to_omega(double x, const Jet& dx);

// Legendre equation of degree m - 1/2.
double legendre_residual(int m, double omega, double q, double dq, double d2q);

// Residuals of the two second-order PDEs of each system.
std::pair<double, double> pde_residual_h3(double alpha, double x, cplx y, const Partials& d);
std::pair<double, double> pde_residual_kdf(double alpha, cplx u, cplx v, const Partials& d);

}  // namespace ringhelm
