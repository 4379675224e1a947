#include "ringhelm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ringhelm/specfun.hpp"

namespace ringhelm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0, 1);

struct PanelSum {
    cplx value{};
    double error = 0;
    long evaluations = 0;
};

// Globally adaptive Gauss-Kronrod over the panels given by `breaks`: the panel
// with the largest error estimate is bisected until the summed estimate meets
// the target, hits the rounding floor, or the evaluation budget runs out.
// `noise` is the relative rounding level of one integrand evaluation in ulps.
template <class F>
PanelSum integrate_panels(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol,
                          double noise = 1)
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    constexpr long budget = 500'000;
    struct Panel {
        double a, b;
        cplx value;
        double error, l1;
        bool operator<(const Panel& o) const { return error < o.error; }
    };
    PanelSum out;
    auto counted = [&](double t) {
        ++out.evaluations;
        return f(t);
    };
    auto make = [&](double a, double b) {
        Panel p{a, b, {}, 0, 0};
        p.value = GK::integrate(counted, a, b, 0, 0.0, &p.error, &p.l1);
        // Boost reports the unrefined panel's error on the [-1, 1] scale.
        p.error *= 0.5 * (b - a);
        return p;
    };
    std::priority_queue<Panel> heap;
    cplx value{};
    double error = 0, l1 = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i + 1] > breaks[i])) continue;
        Panel p = make(breaks[i], breaks[i + 1]);
        value += p.value;
        error += p.error;
        l1 += p.l1;
        heap.push(p);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    while (!heap.empty() && out.evaluations < budget) {
        const double target = std::max({abs_tol, rel_tol * std::abs(value), 4 * noise * eps * l1});
        if (error <= target) break;
        Panel p = heap.top();
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) break;
        heap.pop();
        Panel left = make(p.a, mid), right = make(mid, p.b);
        value += left.value + right.value - p.value;
        error += left.error + right.error - p.error;
        l1 += left.l1 + right.l1 - p.l1;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    out.value = 0;
    out.error = 0;
    while (!heap.empty()) {
        out.value += heap.top().value;
        out.error += heap.top().error;
        heap.pop();
    }
    out.error += 4 * noise * eps * l1;
    return out;
}

MethodReport finish(const PanelSum& s, Method method, double abs_tol, double rel_tol)
{
    MethodReport rep;
    rep.method = method;
    rep.value = s.value;
    rep.est_error = s.error;
    rep.terms_used = int(std::min<long>(s.evaluations, 2147483647L));
    rep.converged = std::isfinite(s.value.real()) && std::isfinite(s.value.imag()) &&
                    s.error <= std::max(abs_tol, rel_tol * std::abs(s.value));
    return rep;
}

void append_uniform(std::vector<double>& b, double from, double to, int n)
{
    for (int i = 1; i <= n; ++i) b.push_back(from + (to - from) * i / n);
}

}  // namespace

MethodReport quad_angular(const RingConfig& c, double abs_tol, double rel_tol)
{
    c.validate();
    if (c.m > 64) throw domain_error("quad_angular supports m <= 64");
    const double h = c.z - c.Z;
    const double near2 = (c.r - c.R) * (c.r - c.R) + h * h;
    if (!(near2 > 0)) throw geometry_error("field point lies on the ring");
    const double rR4 = 4 * c.r * c.R;
    const cplx beta = c.beta;
    const int m = c.m;

    // rho^2 = near2 + 4 r R sin^2(psi/2); the integrand peaks at psi = 0 with width ~ delta.
    auto f = [&](double psi) -> cplx {
        const double sn = std::sin(psi / 2);
        const double rho = std::sqrt(near2 + rR4 * sn * sn);
        return std::exp(kI * beta * rho) / rho * std::cos(m * psi);
    };

    const double rho_max = std::sqrt(near2 + rR4);
    const int osc = int(std::ceil(std::abs(beta) * (rho_max - std::sqrt(near2)) / kPi));

    // High modes far from the ring cancel by ~exp(-m tau0), tau0 = acosh(omega), which
    // leaves only rounding. Moving the contour to Im psi = tau, within 1/m of the branch
    // point, turns the cancellation into the prefactor exp(-m tau), unless exp(i beta rho)
    // grows more than that.
    const double om1 = near2 / (2 * c.r * c.R);
    const double tau0 = std::log1p(om1 + std::sqrt(om1 * (om1 + 2)));
    if (m * tau0 >= 4) {
        // Deeper shifts shrink more but let exp(i beta rho) grow; keep the best trade.
        double tau = 0, ch = 1, sh = 0, growth = 0, shrink = 1;
        for (double t : {tau0 - 1.0 / m, 0.75 * tau0, 0.5 * tau0, 0.25 * tau0}) {
            const double cht = std::cosh(t), sht = std::sinh(t);
            double gr = 0;
            for (int i = 0; i <= 256; ++i) {
                const double psi = kPi * i / 128 - kPi;
                const cplx rho = std::sqrt(
                    cplx(near2 + 0.5 * rR4 * (1 - std::cos(psi) * cht), 0.5 * rR4 * std::sin(psi) * sht));
                gr = std::max(gr, std::abs(std::exp(kI * beta * rho)));
            }
            if (tau == 0 || std::exp(-m * t) * gr < shrink * growth)
                tau = t, ch = cht, sh = sht, growth = gr, shrink = std::exp(-m * t);
        }
        auto rho_at = [&](double psi) {
            return std::sqrt(cplx(near2 + 0.5 * rR4 * (1 - std::cos(psi) * ch), 0.5 * rR4 * std::sin(psi) * sh));
        };
        if (shrink * growth < 1e-2) {
            auto g = [&](double psi) -> cplx {
                const cplx rho = rho_at(psi);
                return std::exp(kI * beta * rho) / rho * std::exp(kI * double(m) * psi);
            };
            // |rho|^2 ~ 2 r R (omega - cosh tau) + r R cosh(tau) psi^2 near psi = 0.
            const double width = std::sqrt(2 * (om1 + 1 - ch) / ch);
            std::vector<double> half;
            if (width < 0.5)
                for (double t = width / 4; t < 0.5; t *= 2) half.push_back(t);
            append_uniform(half, half.empty() ? 0.0 : half.back(), kPi, std::max({8, 2 * m, osc + 4}));
            std::vector<double> breaks;
            for (auto it = half.rbegin(); it != half.rend(); ++it) breaks.push_back(-*it);
            breaks.push_back(0.0);
            breaks.insert(breaks.end(), half.begin(), half.end());
            // Phase rounding scales with |beta rho| at each point; weight it by |g| on the mesh.
            double mass = 0, weighted = 0;
            for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
                for (double t : {breaks[i], 0.5 * (breaks[i] + breaks[i + 1])}) {
                    const cplx rho = rho_at(t);
                    const double w = std::abs(std::exp(kI * beta * rho) / rho);
                    mass += w;
                    weighted += w * (1 + std::abs(beta) * std::abs(rho));
                }
            const double scale = shrink / (2 * kPi);
            PanelSum s = integrate_panels(g, breaks, abs_tol / scale, rel_tol, weighted / mass);
            s.value *= scale;
            s.error *= scale;
            return finish(s, Method::angular, abs_tol, rel_tol);
        }
    }

    const double delta = std::sqrt(near2 / (c.r * c.R));
    std::vector<double> breaks = {0.0};
    double edge = 0.5;
    if (delta < edge) {
        // Graded mesh: panels doubling from ~delta/4 out to `edge`.
        double t = delta / 4;
        while (t < edge) {
            breaks.push_back(t);
            t *= 2;
        }
    } else {
        edge = 0;
    }
    const int panels = std::max({8, 2 * m, osc + 4});
    append_uniform(breaks, edge, kPi, panels);

    PanelSum s = integrate_panels(f, breaks, abs_tol * kPi, rel_tol, 1 + std::abs(beta) * rho_max);
    s.value /= kPi;
    s.error /= kPi;
    return finish(s, Method::angular, abs_tol, rel_tol);
}

MethodReport quad_spectral(const RingConfig& c, double abs_tol, double rel_tol)
{
    c.validate();
    if (c.beta.imag() != 0) throw domain_error("quad_spectral supports real beta only");
    const double h = std::abs(c.z - c.Z);
    if (!(h > 0)) throw domain_error("quad_spectral needs z != Z");
    if (c.beta.real() < 0) {
        RingConfig mirrored = c;
        mirrored.beta = -c.beta;
        MethodReport rep = quad_spectral(mirrored, abs_tol, rel_tol);
        rep.value = std::conj(rep.value);
        return rep;
    }
    const double beta = c.beta.real();
    const int m = c.m;
    auto jj = [&](double s) { return std::cyl_bessel_j(double(m), s * c.r) * std::cyl_bessel_j(double(m), s * c.R); };
    // Bessel products oscillate with period ~ 2 pi / (r + R).
    const double period = kPi / (c.r + c.R);
    const double cut = 40.0 / h;  // exp(-h sqrt(s^2 - beta^2)) < e^-40 beyond beta-ish + cut

    PanelSum total;
    if (beta > 0) {
        // s = beta sin t on [0, beta].
        auto f1 = [&](double t) -> cplx {
            const double s = beta * std::sin(t);
            return kI * std::exp(kI * h * beta * std::cos(t)) * jj(s) * s;
        };
        std::vector<double> b1 = {0.0};
        append_uniform(b1, 0.0, kPi / 2, std::max(4, int(std::ceil(beta / period)) + 2));
        PanelSum p1 = integrate_panels(f1, b1, abs_tol / 3, rel_tol);
        // s = beta cosh t just above beta, where the 1/sqrt singularity sits.
        const double s_join = 2 * beta;
        auto f2 = [&](double t) -> cplx {
            const double s = beta * std::cosh(t);
            return std::exp(-h * beta * std::sinh(t)) * jj(s) * s;
        };
        std::vector<double> b2 = {0.0};
        const double t_join = std::acosh(2.0);
        append_uniform(b2, 0.0, t_join, std::max(4, int(std::ceil(beta / period)) + 2));
        PanelSum p2 = integrate_panels(f2, b2, abs_tol / 3, rel_tol);
        // Plain s beyond 2 beta.
        auto f3 = [&](double s) -> cplx {
            const double q = std::sqrt((s - beta) * (s + beta));
            return std::exp(-h * q) * jj(s) * s / q;
        };
        const double s_end = std::sqrt(cut * cut + beta * beta);
        std::vector<double> b3 = {s_join};
        if (s_end > s_join) append_uniform(b3, s_join, s_end, std::max(4, int(std::ceil((s_end - s_join) / period))));
        PanelSum p3 = integrate_panels(f3, b3, abs_tol / 3, rel_tol);
        total.value = p1.value + p2.value + p3.value;
        total.error = p1.error + p2.error + p3.error;
        total.evaluations = p1.evaluations + p2.evaluations + p3.evaluations;
    } else {
        auto f0 = [&](double s) -> cplx { return std::exp(-h * s) * jj(s); };
        std::vector<double> b = {0.0};
        append_uniform(b, 0.0, cut, std::max(8, int(std::ceil(cut / period))));
        total = integrate_panels(f0, b, abs_tol, rel_tol);
    }
    return finish(total, Method::spectral, abs_tol, rel_tol);
}

MethodReport quad_evanescent(double sigma, double omega, int m, double abs_tol, double rel_tol)
{
    return quad_evanescent_m1(sigma, omega - 1, m, abs_tol, rel_tol);
}

MethodReport quad_evanescent_m1(double sigma, double omega_m1, int m, double abs_tol, double rel_tol)
{
    if (!(sigma > 0)) throw domain_error("quad_evanescent needs sigma > 0");
    if (!(omega_m1 > 0)) throw domain_error("quad_evanescent needs omega > 1");
    // s = u^2 removes the s^{-1/2} endpoint behaviour:
    // yhat = 2 sqrt(pi) int_0^inf exp(-(omega-1) u^2 - sigma^2/(4u^2)) [e^{-s} I_m(s)] du.
    const double q = sigma * sigma / 4;
    auto f = [&](double u) -> cplx {
        if (u == 0) return 0.0;
        const double s = u * u;
        return std::exp(-omega_m1 * s - q / s) * bessel_i_scaled(m, s);
    };
    const double u_end = std::sqrt(40.0 / omega_m1) + 1.0;
    const double u_peak = std::sqrt(sigma / 2);  // where sigma^2/(4 u^2) ~ u^2 scale
    std::vector<double> breaks = {0.0};
    double t = std::min(u_peak, 1.0) / 8;
    while (t < u_end) {
        breaks.push_back(t);
        t *= 1.5;
    }
    breaks.push_back(u_end);
    const double scale = 2 * std::sqrt(kPi);
    PanelSum s = integrate_panels(f, breaks, abs_tol / scale, rel_tol);
    s.value *= scale;
    s.error *= scale;
    return finish(s, Method::evanescent, abs_tol, rel_tol);
}

cplx evanescent_to_coefficient(cplx yhat, double rR) { return yhat / (kPi * std::sqrt(2 * rR)); }

}  // namespace ringhelm
