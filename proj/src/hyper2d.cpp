#include "ringhelm/hyper2d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ringhelm/detail/accumulator.hpp"
#include "ringhelm/specfun.hpp"

namespace ringhelm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Term ratios of the Horn H3 pattern used here.
struct H3Rule {
    double a;
    double x;
    cplx y;
    cplx along_p(int n, int p) const { return y / (double(p) * (a + n - p)); }
    cplx along_n(int n) const { return (a + n - 1) * (a + n - 1) * x / ((2 * a + n - 1) * n); }
};

struct KdfRule {
    double a;
    cplx u;
    cplx v;
    cplx along_p(int n, int p) const { return v / (double(p) * (a + n + p)); }
    cplx along_n(int n) const { return (a + n - 1) * u / ((a + n) * (2 * a + n - 1) * n); }
};

// Walks the double series one group at a time. visit(n, p, term) receives
// every term; after each group, done() decides whether to stop. Returns the
// number of groups visited, or -1 if max_terms was exhausted.
template <class Rule, class Visit, class Done>
int walk(const Rule& rule, DoubleOrder order, int max_terms, Visit&& visit, Done&& done)
{
    if (order == DoubleOrder::diagonal) {
        std::vector<cplx> last;  // last[n] = t(n, d - n)
        last.reserve(256);
        for (int d = 0; d < max_terms; ++d) {
            if (d == 0) {
                last.push_back(1.0);
            } else {
                last.push_back(last[d - 1] * rule.along_n(d));
                for (int n = 0; n < d; ++n) last[n] *= rule.along_p(n, d - n);
            }
            for (int n = 0; n <= d; ++n) visit(n, d - n, last[n]);
            if (done()) return d + 1;
        }
        return -1;
    }
    if (order == DoubleOrder::n_outer) {
        cplx head = 1.0;
        for (int n = 0; n < max_terms; ++n) {
            if (n > 0) head *= rule.along_n(n);
            cplx t = head;
            double lead = 0;
            for (int p = 0; p < max_terms; ++p) {
                if (p > 0) t *= rule.along_p(n, p);
                visit(n, p, t);
                lead = std::max(lead, std::abs(t));
                if (p > 4 && std::abs(t) <= kEps * 1e-3 * lead) break;
            }
            if (done()) return n + 1;
        }
        return -1;
    }
    // p outer: column heads t(0, p), then walk n at fixed p.
    cplx head = 1.0;
    for (int p = 0; p < max_terms; ++p) {
        if (p > 0) head *= rule.along_p(0, p);
        cplx t = head;
        double lead = 0;
        for (int n = 0; n < max_terms; ++n) {
            if (n > 0) {
                // t(n,p) = t(n-1,p) * t(n,0)/t(n-1,0) * prod over the p-steps;
                // expressed through the two ratios evaluated along the path.
                cplx r = rule.along_n(n);
                for (int j = 1; j <= p; ++j) r *= rule.along_p(n, j) / rule.along_p(n - 1, j);
                t *= r;
            }
            visit(n, p, t);
            lead = std::max(lead, std::abs(t));
            if (n > 8 && std::abs(t) <= kEps * 1e-3 * lead) break;
        }
        if (done()) return p + 1;
    }
    return -1;
}

template <class Rule>
MethodReport sum_double(const Rule& rule, Method method, const SeriesPolicy& policy, DoubleOrder order)
{
    policy.validate();
    detail::SeriesAccumulator<double> acc(policy.rel_tol, policy.stagnation_window);
    double group = 0;
    int groups = walk(
        rule, order, policy.max_terms,
        [&](int, int, const cplx& t) {
            acc.add(t);
            group += std::abs(t.real()) + std::abs(t.imag());
        },
        [&] {
            acc.step(group);
            group = 0;
            return acc.done();
        });
    MethodReport rep;
    rep.value = acc.value();
    rep.method = method;
    rep.terms_used = acc.terms_used();
    rep.est_error = acc.error_estimate(kEps);
    rep.converged = groups > 0 && rep.est_error <= policy.rel_tol * std::abs(rep.value);
    return rep;
}

void check_x(double x)
{
    if (!(x > 0 && x < 1)) throw domain_error("Horn H3 series needs 0 < x < 1");
}

double plus_prefactor(int m)
{
    // Gamma(m+1/2) / (2^{2m+1} m! sqrt(pi))
    double c = std::tgamma(m + 0.5) / (std::tgamma(m + 1.0) * std::sqrt(std::numbers::pi));
    return std::ldexp(c, -(2 * m + 1));
}

double factorial(int n) { return std::tgamma(n + 1.0); }

MethodReport scaled(MethodReport rep, cplx factor, Method method)
{
    rep.value *= factor;
    rep.est_error *= std::abs(factor);
    rep.method = method;
    return rep;
}

// Falling factorial e (e-1) ... (e-k+1).
double falling(double e, int k)
{
    double f = 1;
    for (int j = 0; j < k; ++j) f *= e - j;
    return f;
}

template <class Rule, class Exponent>
Jet jet_sum(const Rule& rule, const SeriesPolicy& policy, double x, JetVariable var, cplx prefactor,
            Exponent&& exponent)
{
    policy.validate();
    const double base = var == JetVariable::x ? x : 2.0 / x;  // x or omega + 1
    const double sign = var == JetVariable::x ? 1.0 : -1.0;
    std::vector<detail::SeriesAccumulator<double>> acc(
        5, detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window));
    std::array<double, 5> group{};
    int groups = walk(
        rule, DoubleOrder::diagonal, policy.max_terms,
        [&](int n, int p, const cplx& t) {
            const double e = sign * exponent(n, p);
            double scale = 1;
            for (int k = 0; k < 5; ++k) {
                cplx c = t * falling(e, k) * scale;
                acc[k].add(c);
                group[k] += std::abs(c.real()) + std::abs(c.imag());
                scale /= base;
            }
        },
        [&] {
            bool all = true;
            for (int k = 0; k < 5; ++k) {
                acc[k].step(group[k]);
                group[k] = 0;
                all = all && acc[k].done();
            }
            return all;
        });
    if (groups < 0) throw convergence_error("derivative series did not converge");
    Jet out;
    for (int k = 0; k < 5; ++k) out[k] = prefactor * acc[k].value();
    return out;
}

}  // namespace

MethodReport horn_h3(double alpha, double x, cplx y, const SeriesPolicy& policy, DoubleOrder order)
{
    check_x(x);
    return sum_double(H3Rule{alpha, x, y}, Method::horn_h3, policy, order);
}

MethodReport kdf(double alpha, cplx u, cplx v, const SeriesPolicy& policy, DoubleOrder order)
{
    return sum_double(KdfRule{alpha, u, v}, Method::kdf, policy, order);
}

MethodReport lambda_plus_closed(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    const int m = d.m;
    MethodReport h = horn_h3(d.alpha, d.x, d.y, policy);
    const double k = std::sqrt(d.k2);
    const double f = std::tgamma(d.alpha) / (factorial(m) * std::sqrt(std::numbers::pi * rR)) *
                     std::pow(k / 2, 2 * m + 1);
    return scaled(h, f, Method::horn_h3);
}

MethodReport lambda_minus_closed(const Dimensionless& d, double rR, const SeriesPolicy& policy)
{
    const int m = d.m;
    if (d.gamma == 0.0) {
        MethodReport rep;
        rep.method = Method::kdf;
        rep.converged = true;
        return rep;
    }
    const cplx u = d.gamma * d.gamma * d.k2 / 4.0;
    const cplx v = -d.gamma * d.gamma / 4.0;
    MethodReport s = kdf(d.alpha, u, v, policy);
    const cplx gk = d.gamma * std::sqrt(d.k2) / 2.0;
    const cplx f = cplx(0, 1) / (std::sqrt(rR) * factorial(2 * m + 1)) * std::pow(gk, 2 * m + 1);
    return scaled(s, f, Method::kdf);
}

MethodReport g_plus(int m, double x, cplx y, const SeriesPolicy& policy)
{
    const double a = m + 0.5;
    MethodReport h = horn_h3(a, x, y, policy);
    return scaled(h, plus_prefactor(m) * std::pow(x, a), Method::horn_h3);
}

MethodReport g_minus(int m, double x, cplx y, const SeriesPolicy& policy)
{
    check_x(x);
    const double a = m + 0.5;
    if (y == 0.0) {
        MethodReport rep;
        rep.method = Method::kdf;
        rep.converged = true;
        return rep;
    }
    MethodReport s = kdf(a, x * y, -y, policy);
    const cplx xy_alpha = std::pow(x, a) * std::pow(std::sqrt(y), 2 * m + 1);
    return scaled(s, cplx(0, 1) / factorial(2 * m + 1) * xy_alpha, Method::kdf);
}

Partials horn_h3_partials(double alpha, double x, cplx y, const SeriesPolicy& policy)
{
    check_x(x);
    if (y == 0.0) throw domain_error("partials need y != 0");
    policy.validate();
    Partials out;
    std::array<detail::SeriesAccumulator<double>, 6> acc{
        detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window),
        detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window),
        detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window),
        detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window),
        detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window),
        detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window)};
    std::array<double, 6> group{};
    auto visit = [&](int n, int p, const cplx& t) {
        const std::array<cplx, 6> c = {t,
                                       t * double(n) / x,
                                       t * double(p) / y,
                                       t * double(n * (n - 1)) / (x * x),
                                       t * double(n * p) / (x * y),
                                       t * double(p * (p - 1)) / (y * y)};
        for (int k = 0; k < 6; ++k) {
            acc[k].add(c[k]);
            group[k] += std::abs(c[k]);
        }
    };
    auto done = [&] {
        bool all = true;
        for (int k = 0; k < 6; ++k) {
            acc[k].step(group[k]);
            group[k] = 0;
            all = all && acc[k].done();
        }
        return all;
    };
    if (walk(H3Rule{alpha, x, y}, DoubleOrder::diagonal, policy.max_terms, visit, done) < 0)
        throw convergence_error("H3 partials did not converge");
    out = {acc[0].value(), acc[1].value(), acc[2].value(), acc[3].value(), acc[4].value(), acc[5].value()};
    return out;
}

Partials kdf_partials(double alpha, cplx u, cplx v, const SeriesPolicy& policy)
{
    if (u == 0.0 || v == 0.0) throw domain_error("partials need u, v != 0");
    policy.validate();
    std::vector<detail::SeriesAccumulator<double>> acc(
        6, detail::SeriesAccumulator<double>(policy.rel_tol, policy.stagnation_window));
    std::array<double, 6> group{};
    auto visit = [&](int n, int p, const cplx& t) {
        const std::array<cplx, 6> c = {t,
                                       t * double(n) / u,
                                       t * double(p) / v,
                                       t * double(n * (n - 1)) / (u * u),
                                       t * double(n * p) / (u * v),
                                       t * double(p * (p - 1)) / (v * v)};
        for (int k = 0; k < 6; ++k) {
            acc[k].add(c[k]);
            group[k] += std::abs(c[k]);
        }
    };
    auto done = [&] {
        bool all = true;
        for (int k = 0; k < 6; ++k) {
            acc[k].step(group[k]);
            group[k] = 0;
            all = all && acc[k].done();
        }
        return all;
    };
    if (walk(KdfRule{alpha, u, v}, DoubleOrder::diagonal, policy.max_terms, visit, done) < 0)
        throw convergence_error("KdF partials did not converge");
    return {acc[0].value(), acc[1].value(), acc[2].value(), acc[3].value(), acc[4].value(), acc[5].value()};
}

Jet g_plus_jet(int m, double x, cplx chi, JetVariable var, const SeriesPolicy& policy)
{
    check_x(x);
    const double a = m + 0.5;
    const cplx y = 2.0 * chi / x;
    // Each term is a power x^{a+n-p} at fixed chi.
    return jet_sum(H3Rule{a, x, y}, policy, x, var, plus_prefactor(m) * std::pow(x, a),
                   [a](int n, int p) { return a + n - p; });
}

Jet g_minus_jet(int m, double x, cplx chi, JetVariable var, const SeriesPolicy& policy)
{
    check_x(x);
    const double a = m + 0.5;
    const cplx y = 2.0 * chi / x;
    if (y == 0.0) return Jet{};
    // (xy)^a is constant along fixed chi; each term carries x^{-p} through v = -y.
    const cplx xy_alpha = std::pow(std::sqrt(2.0 * chi), 2 * m + 1);
    return jet_sum(KdfRule{a, x * y, -y}, policy, x, var, cplx(0, 1) / factorial(2 * m + 1) * xy_alpha,
                   [](int, int p) { return -double(p); });
}

}  // namespace ringhelm
