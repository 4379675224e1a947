#include "ringhelm/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ringhelm/hyper2d.hpp"
#include "ringhelm/quadrature.hpp"
#include "ringhelm/series.hpp"
#include "ringhelm/specfun.hpp"

namespace ringhelm {

namespace {

// Sum of separately evaluated parts. The parts may cancel, so convergence is
// judged against the total.
CoeffResult combine(const MethodReport& plus, const MethodReport& minus, Method method, const SeriesPolicy& policy)
{
    CoeffResult out;
    out.value.plus = plus.value;
    out.value.minus = minus.value;
    out.value.total = plus.value + minus.value;
    out.report.value = out.value.total;
    out.report.method = method;
    out.report.terms_used = std::max(plus.terms_used, minus.terms_used);
    out.report.est_error = plus.est_error + minus.est_error;
    const double mag = std::abs(out.value.total.real()) + std::abs(out.value.total.imag());
    // Judged on the total: for real beta the parts are orthogonal, for complex beta they may cancel.
    const bool finite = std::isfinite(mag) && std::isfinite(out.report.est_error);
    const bool budget = plus.terms_used < policy.max_terms && minus.terms_used < policy.max_terms;
    out.report.converged = finite && budget && out.report.est_error <= policy.rel_tol * mag;
    out.report.working_digits = std::max(plus.working_digits, minus.working_digits);
    return out;
}

CoeffResult from_split(const SplitReport& s, Method method)
{
    CoeffResult out;
    out.value = {s.total.value, s.plus.value, s.minus.value, true};
    out.report = s.total;
    out.report.method = method;
    return out;
}

CoeffResult from_quadrature(MethodReport rep, const RingConfig& c, const SeriesPolicy& policy)
{
    CoeffResult out;
    rep.converged = rep.converged || (std::isfinite(rep.est_error) && rep.est_error <= policy.rel_tol * std::abs(rep.value));
    out.report = rep;
    out.value.total = rep.value;
    if (c.beta.imag() == 0) {
        out.value.plus = rep.value.real();
        out.value.minus = cplx(0, rep.value.imag());
    } else {
        out.value.has_split = false;
        out.value.plus = out.value.minus = cplx(std::nan(""), std::nan(""));
    }
    return out;
}

}  // namespace

const std::vector<Method>& coefficient_methods()
{
    static const std::vector<Method> methods = {Method::closed_form, Method::hankel,   Method::bessel_jy,
                                                Method::legendre,    Method::legendre_q, Method::p_series,
                                                Method::angular,     Method::spectral, Method::evanescent,
                                                Method::static_q};
    return methods;
}

bool admits(Method method, const RingConfig& c)
{
    const bool static_case = c.beta == 0.0;
    const bool real_beta = c.beta.imag() == 0;
    switch (method) {
    case Method::hankel:
    case Method::bessel_jy: return !static_case;
    case Method::spectral: return real_beta && c.z != c.Z;
    case Method::evanescent: return c.beta.real() == 0 && c.beta.imag() > 0;
    case Method::static_q: return static_case;
    case Method::legendre_q: return real_beta;
    case Method::angular: return c.m <= 64;
    case Method::closed_form:
    case Method::legendre:
    case Method::p_series:
    case Method::automatic: return true;
    default: return false;
    }
}

cplx static_coefficient(const RingConfig& c)
{
    const Dimensionless d = derive(c);
    return toroidal_q(c.m, d.omega_m1) / (std::numbers::pi * std::sqrt(d.rR));
}

CoeffResult compute_coefficient(const RingConfig& c, Method method, const SeriesPolicy& policy)
{
    const Dimensionless d = derive(c);
    const double rR = d.rR;
    if (method != Method::automatic && !admits(method, c))
        throw domain_error(std::string("method ") + std::string(to_string(method)) + " does not apply to this configuration");

    switch (method) {
    case Method::closed_form:
        return combine(lambda_plus_closed(d, rR, policy), lambda_minus_closed(d, rR, policy), Method::closed_form, policy);
    case Method::hankel: return from_split(eval_hankel_split(d, rR, policy), Method::hankel);
    case Method::bessel_jy: {
        SplitReport s = eval_hankel_split(d, rR, policy);
        return combine(s.plus, s.minus, Method::bessel_jy, policy);
    }
    case Method::legendre:
        return combine(eval_legendre_plus_series(d, rR, policy), eval_legendre_minus_series(d, rR, policy),
                       Method::legendre, policy);
    case Method::legendre_q:
        return combine(eval_legendre_plus_series(d, rR, policy),
                       eval_legendre_minus_series(d, rR, policy, MinusForm::q_form), Method::legendre_q, policy);
    case Method::p_series: return from_split(eval_p_series_split(d, rR, policy), Method::p_series);
    case Method::angular: return from_quadrature(quad_angular(c, 0.0, 0.01 * policy.rel_tol), c, policy);
    case Method::spectral: return from_quadrature(quad_spectral(c, 0.0, 0.01 * policy.rel_tol), c, policy);
    case Method::evanescent: {
        const double sigma = c.beta.imag() * std::sqrt(2 * rR);
        MethodReport rep = quad_evanescent_m1(sigma, d.omega_m1, c.m, 0.0, 0.01 * policy.rel_tol);
        const double scale = std::abs(evanescent_to_coefficient(1.0, rR));
        rep.value = evanescent_to_coefficient(rep.value, rR);
        rep.est_error *= scale;
        return from_quadrature(rep, c, policy);
    }
    case Method::static_q: {
        CoeffResult out;
        out.value.total = out.value.plus = static_coefficient(c);
        out.value.minus = 0.0;
        out.report.value = out.value.total;
        out.report.method = Method::static_q;
        out.report.terms_used = 1;
        out.report.converged = true;
        out.report.est_error = 4 * std::numeric_limits<double>::epsilon() * std::abs(out.value.total);
        return out;
    }
    case Method::automatic: {
        const bool use_legendre = d.omega < 2 || c.beta == 0.0;
        CoeffResult r = compute_coefficient(c, use_legendre ? Method::legendre : Method::hankel, policy);
        if (r.report.converged || c.m > 64) return r;
        return compute_coefficient(c, Method::angular, policy);
    }
    default:
        throw domain_error(std::string("method ") + std::string(to_string(method)) + " yields only part of the coefficient");
    }
}

}  // namespace ringhelm
