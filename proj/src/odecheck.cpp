#include "ringhelm/odecheck.hpp"

#include <cmath>
#include <initializer_list>

namespace ringhelm {

namespace {

double normalised(std::initializer_list<cplx> terms)
{
    cplx sum = 0.0;
    double mag = 0;
    for (const cplx& t : terms) {
        sum += t;
        mag += std::abs(t);
    }
    return mag == 0 ? 0.0 : std::abs(sum) / mag;
}

}  // namespace

OdeCoefficients ode_x_coefficients(int m, cplx y, double x)
{
    const double a = m + 0.5;
    const double x2 = x * x;
    return {y * y,
            -2.0 * (a * (a - 1) + x * (3.0 + y)) * x,
            (a - a * a + 6 - 18 * x + (2 - x) * y) * x2,
            cplx((6 - 9 * x) * x2 * x),
            cplx((1 - x) * x2 * x2)};
}

OdeCoefficients ode_omega_coefficients(int m, cplx lambda, double omega)
{
    const cplx l2 = lambda * lambda;
    return {-(l2 / 4.0) * (l2 / 4.0),
            -l2,
            double(m * m) - l2 * omega / 2.0 - 25.0 / 4,
            cplx(-6 * omega),
            cplx(1 - omega * omega)};
}

cplx apply_operator(const OdeCoefficients& c, const Jet& d)
{
    cplx s = 0.0;
    for (int k = 0; k < 5; ++k) s += c[k] * d[k];
    return s;
}

double relative_residual(const OdeCoefficients& c, const Jet& d)
{
    return normalised({c[0] * d[0], c[1] * d[1], c[2] * d[2], c[3] * d[3], c[4] * d[4]});
}

double ode_residual_x(int m, cplx y, double x, const Jet& derivs)
{
    return relative_residual(ode_x_coefficients(m, y, x), derivs);
}

double ode_residual_omega(int m, cplx lambda, double omega, const Jet& derivs)
{
    return relative_residual(ode_omega_coefficients(m, lambda, omega), derivs);
}

Jet jet_x_to_omega(double x, const Jet& g)
{
    // d^k x / d omega^k = (-1)^k k! x^{k+1} / 2^k
    const double x1 = -x * x / 2;
    const double x2 = x * x * x / 2;
    const double x3 = -3 * std::pow(x, 4) / 4;
    const double x4 = 3 * std::pow(x, 5) / 2;
    return {g[0],
            g[1] * x1,
            g[2] * x1 * x1 + g[1] * x2,
            g[3] * x1 * x1 * x1 + 3.0 * g[2] * x1 * x2 + g[1] * x3,
            g[4] * std::pow(x1, 4) + 6.0 * g[3] * x1 * x1 * x2 + g[2] * (3 * x2 * x2 + 4 * x1 * x3) + g[1] * x4};
}

double legendre_residual(int m, double omega, double q, double dq, double d2q)
{
    return normalised({(1 - omega * omega) * d2q, -2 * omega * dq, (m * m - 0.25) * q});
}

std::pair<double, double> pde_residual_h3(double a, double x, cplx y, const Partials& d)
{
    const double first = normalised({x * (1 - x) * d.r, x * y * d.s, (2 * a - (2 * a + 1) * x) * d.p, a * y * d.q,
                                     -a * a * d.z});
    const double second = normalised({y * d.t, -x * d.s, (1 - a) * d.q, d.z});
    return {first, second};
}

std::pair<double, double> pde_residual_kdf(double a, cplx u, cplx v, const Partials& d)
{
    const double first = normalised({d.z, -v * d.t, -u * d.s, -(a + 1) * d.q});
    const double second = normalised({d.z, -2 * a * d.p, -u * d.r, -d.q, -v * d.t});
    return {first, second};
}

}  // namespace ringhelm
