#pragma once

#include <array>

#include "ringhelm/params.hpp"
#include "ringhelm/types.hpp"

namespace ringhelm {

// Summation order for the double series. The default walks anti-diagonals
// n + p = const; the row orders exist to check order independence.
enum class DoubleOrder { diagonal, n_outer, p_outer };

// H3(a, a, 2a; x, y) = sum (a)_{n-p} (a)_n / ((2a)_n n! p!) x^n y^p, 0 < x < 1.
MethodReport horn_h3(double alpha, double x, cplx y, const SeriesPolicy& policy = {},
                     DoubleOrder order = DoubleOrder::diagonal);

// Kampe de Feriet F^{0:1;0}_{1:1;0}: sum (a)_n / ((a+1)_{n+p} (2a)_n n! p!) u^n v^p.
MethodReport kdf(double alpha, cplx u, cplx v, const SeriesPolicy& policy = {},
                 DoubleOrder order = DoubleOrder::diagonal);

MethodReport lambda_plus_closed(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});
MethodReport lambda_minus_closed(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});

// Dimensionless coefficients, sqrt(rR) * Lambda_pm.
MethodReport g_plus(int m, double x, cplx y, const SeriesPolicy& policy = {});
MethodReport g_minus(int m, double x, cplx y, const SeriesPolicy& policy = {});

// Value and first/second partials of a two-variable series:
// z, z_1, z_2, z_11, z_12, z_22.
struct Partials {
    cplx z{}, p{}, q{}, r{}, s{}, t{};
};

Partials horn_h3_partials(double alpha, double x, cplx y, const SeriesPolicy& policy = {});
Partials kdf_partials(double alpha, cplx u, cplx v, const SeriesPolicy& policy = {});

// Derivatives 0..4 of g_pm along fixed chi = x y / 2 (fixed lambda), with
// respect to x or to omega = (2 - x) / x.
enum class JetVariable { x, omega };
using Jet = std::array<cplx, 5>;

Jet g_plus_jet(int m, double x, cplx chi, JetVariable var, const SeriesPolicy& policy = {});
Jet g_minus_jet(int m, double x, cplx chi, JetVariable var, const SeriesPolicy& policy = {});

}  // namespace ringhelm
