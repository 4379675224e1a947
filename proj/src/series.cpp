#include "ringhelm/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ringhelm/detail/accumulator.hpp"
#include "ringhelm/detail/legendre_series.hpp"
#include "ringhelm/specfun.hpp"

namespace ringhelm {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr cplx kI(0, 1);
const double kRootPi = std::sqrt(std::numbers::pi);

double norm1(cplx v) { return std::abs(v.real()) + std::abs(v.imag()); }

MethodReport make_report(const detail::SeriesAccumulator<double>& acc, cplx pref, Method method,
                         const SeriesPolicy& policy, bool finished)
{
    MethodReport rep;
    rep.method = method;
    rep.value = pref * acc.value();
    rep.terms_used = acc.terms_used();
    rep.est_error = std::abs(pref) * acc.error_estimate(kEps);
    rep.converged = finished && rep.est_error <= policy.rel_tol * norm1(rep.value);
    return rep;
}

// Scaled spherical-Bessel ladders for the Hankel-family series:
// A_l = k^{2l+1} gamma^{l+1} f_l(gamma) / (2^l Gamma(l+1/2)) for f = h, j, y. All three
// obey A_{l+1} = k^2 A_l - k^4 gamma^2 A_{l-1} / (4 l^2 - 1).
struct Ladders {
    std::vector<cplx> h, j, y;
};

std::vector<cplx> ladder_up(cplx a0, cplx a1, double k2, cplx g2, int top)
{
    std::vector<cplx> a(std::max(top, 1) + 1);
    a[0] = a0;
    a[1] = a1;
    const cplx c = k2 * k2 * g2;
    for (int l = 1; l < top; ++l) a[l + 1] = k2 * a[l] - c * a[l - 1] / double(4 * l * l - 1);
    a.resize(top + 1);
    return a;
}

// Minimal solution by downward recurrence, normalised to the exact j-ladder start.
std::vector<cplx> ladder_j(cplx g, double k, int top)
{
    const double k2 = k * k;
    const cplx g2 = g * g;
    const cplx b0 = k * std::sin(g) / kRootPi;
    const cplx b1 = k * k2 * (std::sin(g) - g * std::cos(g)) / kRootPi;
    const double ag = std::abs(g);
    if (top <= ag / 2) return ladder_up(b0, b1, k2, g2, top);

    const int start = std::max(double(top), ag) + 20 + int(std::sqrt(40.0 * std::max(double(top), ag)));
    std::vector<cplx> b(top + 2, 0.0);
    const cplx c = k2 * k2 * g2;
    cplx hi = 0.0, cur = 1.0;
    for (int l = start; l >= 1; --l) {
        cplx lo = (k2 * cur - hi) * double(4 * l * l - 1) / c;
        hi = cur;
        cur = lo;
        if (l <= top + 1) b[l] = hi;
        if (l - 1 <= top + 1) b[l - 1] = cur;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            hi *= 1e-250;
            for (int i = std::max(l - 1, 0); i <= top + 1; ++i) b[i] *= 1e-250;
        }
    }
    const bool use0 = std::abs(std::sin(g)) >= std::abs(std::sin(g) - g * std::cos(g));
    const cplx scale = use0 ? b0 / b[0] : b1 / b[1];
    for (auto& v : b) v *= scale;
    b.resize(top + 1);
    return b;
}

// c_l = Gamma(l+1/2)^2 / (sqrt(pi) Gamma(l+m+1) Gamma(l-m+1)) for l = m, m+1, ...
struct HankelWeights {
    int m;
    double c;
    int l;
    explicit HankelWeights(int mm)
        : m(mm), c(std::exp(2 * std::lgamma(mm + 0.5) - std::lgamma(2 * mm + 1.0)) / kRootPi), l(mm) {}
    void advance()
    {
        c *= (l + 0.5) * (l + 0.5) / ((l + m + 1.0) * (l - m + 1.0));
        ++l;
    }
};

SplitReport hankel_impl(const Dimensionless& d, double rR, const SeriesPolicy& policy, std::vector<cplx>* terms)
{
    policy.validate();
    if (d.gamma == 0.0) throw domain_error("Hankel series needs gamma != 0");
    const int m = d.m;
    const cplx g = d.gamma;
    const cplx g2 = g * g;
    const double k2 = d.k2;
    const double k = std::sqrt(k2);
    const cplx eig = std::exp(kI * g);

    // Pass 1: the dominant h-ladder fixes the truncation point.
    const cplx a0 = -kI * k * eig / kRootPi;
    const cplx a1 = -k * k2 * eig * (g + kI) / kRootPi;
    detail::SeriesAccumulator<double> probe(policy.rel_tol, policy.stagnation_window);
    std::vector<cplx> h = {a0, a1};
    {
        const cplx c = k2 * k2 * g2;
        for (int l = 1; l < m; ++l) h.push_back(k2 * h[l] - c * h[l - 1] / double(4 * l * l - 1));
        HankelWeights w(m);
        for (int n = 0; n < policy.max_terms; ++n) {
            const int l = m + n;
            while (int(h.size()) <= l)
                h.push_back(k2 * h.back() - c * h[h.size() - 2] / double(4 * (h.size() - 1) * (h.size() - 1) - 1));
            probe.push(w.c * h[l]);
            if (probe.done()) break;
            w.advance();
        }
    }
    const bool finished = probe.done();
    const int top = m + probe.count() - 1;

    const bool real_gamma = g.imag() == 0;
    std::vector<cplx> jl = ladder_j(g, k, top);
    std::vector<cplx> yl;
    if (real_gamma) {
        const cplx d0 = -k * std::cos(g) / kRootPi;
        const cplx d1 = k * k2 * (-std::cos(g) - g * std::sin(g)) / kRootPi;
        yl = ladder_up(d0, d1, k2, g2, top);
    }

    detail::SeriesAccumulator<double> tot(policy.rel_tol, policy.stagnation_window);
    detail::SeriesAccumulator<double> ys(policy.rel_tol, policy.stagnation_window);
    detail::SeriesAccumulator<double> js(policy.rel_tol, policy.stagnation_window);
    const cplx pref = kI / (2 * std::sqrt(rR));
    HankelWeights w(m);
    for (int l = m; l <= top; ++l) {
        const cplx yv = real_gamma ? yl[l] : -kI * (h[l] - jl[l]);
        const cplx hv = real_gamma ? jl[l] + kI * yv : h[l];
        tot.push(w.c * hv);
        ys.push(w.c * yv);
        js.push(w.c * jl[l]);
        if (terms) terms->push_back(pref * w.c * hv);
        w.advance();
    }

    SplitReport out;
    out.total = make_report(tot, pref, Method::hankel, policy, finished);
    out.plus = make_report(ys, -1.0 / (2 * std::sqrt(rR)), Method::bessel_y, policy, finished);
    out.minus = make_report(js, pref, Method::bessel_j, policy, finished);
    out.total.terms_used = probe.terms_used();
    return out;
}

// Result of one Legendre-family sum after the precision decision.
struct Outcome {
    cplx sum;
    double err;  // absolute, before the prefactor
    int terms_used;
    bool done;
    int digits;
};

template <class T>
Outcome to_outcome(const detail::PartSum<T>& p, int digits)
{
    using std::sqrt;
    const T eps = std::numeric_limits<T>::epsilon();
    const T rounding = eps * p.abs_sum * sqrt(T(std::max(p.count, 1)));
    return {detail::narrow(p.sum), static_cast<double>(p.tail + rounding), p.terms_used, p.done, digits};
}

template <class T>
bool adequate(const detail::PartSum<T>& p, double tol)
{
    using std::abs;
    const T mag = abs(p.sum.real()) + abs(p.sum.imag());
    using std::sqrt;
    const T rounding = std::numeric_limits<T>::epsilon() * p.abs_sum * sqrt(T(std::max(p.count, 1)));
    return p.finite && rounding <= T(0.1 * tol) * mag;
}

// Runs `fn` in binary64 and reruns it in 100-digit arithmetic when rounding
// would dominate the requested tolerance.
template <class Fn>
Outcome with_promotion(const SeriesPolicy& policy, std::vector<cplx>* terms, Fn&& fn)
{
    std::vector<std::complex<double>> td;
    auto pd = fn(double{}, terms ? &td : nullptr);
    if (adequate(pd, policy.rel_tol)) {
        if (terms) terms->insert(terms->end(), td.begin(), td.end());
        return to_outcome(pd, 16);
    }
    std::vector<std::complex<Wide>> tw;
    auto pw = fn(Wide{}, terms ? &tw : nullptr);
    if (terms)
        for (const auto& t : tw) terms->push_back(detail::narrow(t));
    return to_outcome(pw, std::numeric_limits<Wide>::digits10);
}

MethodReport report_from(const Outcome& o, cplx pref, Method method, const SeriesPolicy& policy)
{
    MethodReport rep;
    rep.method = method;
    rep.value = pref * o.sum;
    rep.terms_used = o.terms_used;
    rep.est_error = std::abs(pref) * o.err;
    rep.converged = o.done && rep.est_error <= policy.rel_tol * norm1(rep.value);
    rep.working_digits = o.digits;
    return rep;
}

void scale_terms(std::vector<cplx>* terms, std::size_t from, cplx pref)
{
    if (!terms) return;
    for (std::size_t i = from; i < terms->size(); ++i) (*terms)[i] *= pref;
}

void require_off_ring(const Dimensionless& d)
{
    if (!(d.omega_m1 > 0)) throw geometry_error("Legendre series needs omega > 1");
}

}  // namespace

SplitReport eval_hankel_split(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    return hankel_impl(d, rR, policy, nullptr);
}

MethodReport eval_hankel_series(const Dimensionless& d, double rR, const SeriesPolicy& policy, std::vector<cplx>* terms)
{
    return hankel_impl(d, rR, policy, terms).total;
}

MethodReport eval_bessely_series(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    return hankel_impl(d, rR, policy, nullptr).plus;
}

MethodReport eval_besselj_series(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    return hankel_impl(d, rR, policy, nullptr).minus;
}

MethodReport eval_legendre_plus_series(const Dimensionless& d, double rR, const SeriesPolicy& policy,
                                       std::vector<cplx>* terms)
{
    policy.validate();
    require_off_ring(d);
    const std::size_t from = terms ? terms->size() : 0;
    Outcome o = with_promotion(policy, terms, [&](auto zero, auto* t) {
        using T = decltype(zero);
        return detail::legendre_u_sum<T>(d.m, d.lambda, d.omega_m1, policy.rel_tol, policy.stagnation_window,
                                         policy.max_terms, t);
    });
    const cplx pref = (d.m % 2 == 0 ? 1.0 : -1.0) * kRootPi / std::sqrt(2 * rR);
    scale_terms(terms, from, pref);
    return report_from(o, pref, Method::legendre_plus, policy);
}

MethodReport eval_legendre_minus_series(const Dimensionless& d, double rR, const SeriesPolicy& policy, MinusForm form,
                                        std::vector<cplx>* terms)
{
    policy.validate();
    require_off_ring(d);
    const std::size_t from = terms ? terms->size() : 0;
    Outcome o = with_promotion(policy, terms, [&](auto zero, auto* t) {
        using T = decltype(zero);
        if (form == MinusForm::q_form)
            return detail::legendre_w_sum<T>(d.m, d.lambda, d.omega_m1, policy.rel_tol, policy.stagnation_window,
                                             policy.max_terms, t);
        return detail::legendre_v_sum<T>(d.m, d.lambda, d.omega_m1, policy.rel_tol, policy.stagnation_window,
                                         policy.max_terms, t);
    });
    const cplx pref = kRootPi * kI * d.lambda / (2 * std::sqrt(2 * rR));
    scale_terms(terms, from, pref);
    return report_from(o, pref, Method::legendre_minus, policy);
}

SplitReport eval_p_series_split(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    policy.validate();
    require_off_ring(d);
    auto run = [&](auto zero) {
        using T = decltype(zero);
        return detail::legendre_p_sum<T>(d.m, d.lambda, d.omega_m1, policy.rel_tol, policy.stagnation_window,
                                         policy.max_terms);
    };
    const cplx pref = (d.m % 2 == 0 ? 1.0 : -1.0) / std::sqrt(2 * rR);
    auto build = [&](const auto& sums, int digits) {
        SplitReport out;
        out.total = report_from(to_outcome(sums.total, digits), pref, Method::p_series, policy);
        out.plus = report_from(to_outcome(sums.even, digits), pref, Method::p_series, policy);
        out.minus = report_from(to_outcome(sums.odd, digits), pref, Method::p_series, policy);
        // Terms are counted in the single index n, two per step.
        out.total.terms_used *= 2;
        out.plus.converged = out.minus.converged = out.total.converged;
        return out;
    };
    auto pd = run(double{});
    if (adequate(pd.total, policy.rel_tol) && adequate(pd.even, policy.rel_tol) &&
        (pd.odd.abs_sum == 0 || adequate(pd.odd, policy.rel_tol)))
        return build(pd, 16);
    return build(run(Wide{}), std::numeric_limits<Wide>::digits10);
}

MethodReport eval_p_series(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    return eval_p_series_split(d, rR, policy).total;
}

MethodReport eval_1f2_series(const Dimensionless& d, double rR, const SeriesPolicy& policy, std::vector<cplx>* terms)
{
    policy.validate();
    const int m = d.m;
    MethodReport rep;
    rep.method = Method::f12;
    if (d.gamma == 0.0) {
        rep.converged = true;
        return rep;
    }
    const cplx arg = d.y * d.k2;  // gamma^2 k^2 / 4
    const cplx pref = kI * kRootPi / (std::tgamma(m + 1.0) * std::sqrt(rR)) *
                      std::pow(d.gamma * std::sqrt(d.k2) / 4.0, 2 * m + 1);
    detail::SeriesAccumulator<double> acc(policy.rel_tol, policy.stagnation_window);
    cplx f = 1.0 / std::tgamma(m + 1.5);
    for (int n = 0; n < policy.max_terms; ++n) {
        const cplx t = f * hyp1f2(m + 0.5, n + m + 1.5, 2.0 * m + 1, arg);
        if (terms) terms->push_back(pref * t);
        acc.push(t);
        if (acc.done()) break;
        f *= -d.y / ((n + m + 1.5) * (n + 1));
    }
    return make_report(acc, pref, Method::f12, policy, acc.done());
}

}  // namespace ringhelm
