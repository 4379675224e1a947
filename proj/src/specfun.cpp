#include "ringhelm/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>

#include "ringhelm/detail/toroidal.hpp"

namespace ringhelm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_gamma(cplx z)
{
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    cplx t = z + 7.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

void require_half(HalfInt nu, const char* what)
{
    if (nu.is_integer()) throw domain_error(std::string(what) + ": order must be n + 1/2");
}

}  // namespace

HalfInt HalfInt::from_double(double x)
{
    double t = 2 * x;
    if (!std::isfinite(t) || t != std::round(t) || std::abs(t) > 1e9)
        throw domain_error("not an integer or half-integer: " + std::to_string(x));
    return HalfInt{int(std::lround(t))};
}

double gamma(double x)
{
    if (is_nonpositive_integer(x)) throw pole_error("gamma pole at " + std::to_string(x));
    return std::tgamma(x);
}

cplx gamma(cplx z)
{
    if (z.imag() == 0) return gamma(z.real());
    return lanczos_gamma(z);
}

double rgamma(double x)
{
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

double pochhammer(double a, int n)
{
    if (n >= 0) {
        double p = 1;
        for (int k = 0; k < n; ++k) p *= a + k;
        return p;
    }
    double den = pochhammer(a + n, -n);
    if (den == 0) throw pole_error("pochhammer with negative index hits a pole");
    return 1.0 / den;
}

std::vector<cplx> spherical_y(cplx x, int nmax)
{
    if (x == 0.0) throw domain_error("spherical_y at zero");
    std::vector<cplx> y(std::max(nmax, 1) + 1);
    y[0] = -std::cos(x) / x;
    y[1] = (y[0] - std::sin(x)) / x;
    for (int l = 1; l < nmax; ++l) y[l + 1] = double(2 * l + 1) / x * y[l] - y[l - 1];
    y.resize(nmax + 1);
    return y;
}

std::vector<cplx> spherical_j(cplx x, int nmax)
{
    if (x == 0.0) {
        std::vector<cplx> j(nmax + 1, 0.0);
        j[0] = 1.0;
        return j;
    }
    const double ax = std::abs(x);
    const int top = std::max(nmax, int(ax)) + 30 + int(std::sqrt(40.0 * std::max(double(nmax), ax)));
    std::vector<cplx> j(nmax + 2, 0.0);
    cplx hi = 0.0, cur = 1e-300;
    for (int l = top; l >= 1; --l) {
        cplx lo = double(2 * l + 1) / x * cur - hi;
        hi = cur;
        cur = lo;
        if (l - 1 <= nmax) j[l - 1] = cur;
        if (l <= nmax + 1) j[l] = hi;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            hi *= 1e-250;
            for (int k = l - 1; k <= nmax + 1; ++k)
                if (k >= 0) j[k] *= 1e-250;
        }
    }
    const cplx j0 = std::sin(x) / x;
    const cplx j1 = (j0 - std::cos(x)) / x;
    const cplx scale = std::abs(j0) >= std::abs(j1) ? j0 / j[0] : j1 / j[1];
    for (auto& v : j) v *= scale;
    j.resize(nmax + 1);
    return j;
}

cplx bessel_half(BesselKind kind, HalfInt nu, double x)
{
    require_half(nu, "bessel_half");
    if (!(x > 0)) throw domain_error("bessel_half needs x > 0");
    if (nu.twice < 0) {
        // Order -(n+1/2): J = (-1)^(n+1) Y_{n+1/2}, Y = (-1)^n J_{n+1/2},
        // I = I_{n+1/2} + (2/pi) (-1)^n K_{n+1/2}.
        const HalfInt pos = HalfInt::from_twice(-nu.twice);
        const double sgn = ((-nu.twice - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        switch (kind) {
        case BesselKind::J: return -sgn * bessel_half(BesselKind::Y, pos, x);
        case BesselKind::Y: return sgn * bessel_half(BesselKind::J, pos, x);
        case BesselKind::I:
            return std::cyl_bessel_i(pos.value(), x) + 2 / kPi * sgn * std::cyl_bessel_k(pos.value(), x);
        default:
            return -sgn * bessel_half(BesselKind::Y, pos, x) + cplx(0, 1) * sgn * bessel_half(BesselKind::J, pos, x);
        }
    }
    const int n = (nu.twice - 1) / 2;
    const double f = std::sqrt(2 * x / kPi);
    if (kind == BesselKind::I) return std::cyl_bessel_i(nu.value(), x);
    cplx jv = 0.0, yv = 0.0;
    if (kind != BesselKind::Y) jv = f * spherical_j(x, n)[n];
    if (kind != BesselKind::J) {
        yv = f * spherical_y(x, n)[n];
        if (!std::isfinite(yv.real())) throw overflow_error("bessel_half: Y overflows");
    }
    switch (kind) {
    case BesselKind::J: return jv;
    case BesselKind::Y: return yv;
    default: return jv + cplx(0, 1) * yv;
    }
}

double bessel_i_scaled(int m, double s)
{
    if (s < 0) throw domain_error("bessel_i_scaled needs s >= 0");
    m = std::abs(m);
    if (s < 600.0) return std::cyl_bessel_i(double(m), s) * std::exp(-s);
    // Large-argument expansion; terms shrink until k ~ 2s.
    const double mu = 4.0 * m * m;
    double term = 1, sum = 1;
    for (int k = 1; k < 200; ++k) {
        double next = -term * (mu - (2 * k - 1) * (2 * k - 1)) / (k * 8.0 * s);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    return sum / std::sqrt(2 * kPi * s);
}

cplx legendre_q_toroidal(int m, HalfInt mu, double omega)
{
    return legendre_q_toroidal(m, mu, omega, omega - 1.0);
}

cplx legendre_q_toroidal(int m, HalfInt mu, double omega, double omega_m1)
{
    if (!(omega_m1 > 0)) throw domain_error("legendre_q_toroidal needs omega > 1");
    if (mu.twice < 0) throw domain_error("legendre_q_toroidal needs mu >= 0");
    const double s2 = omega_m1 * (omega_m1 + 2);
    const double s = std::sqrt(s2);

    if (mu.is_integer()) {
        const int order = mu.twice / 2;
        const double q0 = detail::toroidal_q0<double>(m, omega_m1);
        if (order == 0) return q0;
        double qm = q0;
        double q = detail::toroidal_xq1<double>(m, omega_m1, q0) / s;
        const double nu = m - 0.5;
        for (int k = 1; k < order; ++k) {
            double next = -2.0 * k * omega / s * q + (nu - k + 1) * (nu + k) * qm;
            qm = q;
            q = next;
        }
        return q;
    }

    // Half-integer order: Whipple reduces to P^{-m}_n at xi = omega/s, which is
    // a terminating hypergeometric polynomial.
    const int n = (mu.twice - 1) / 2;
    const double xi_m1 = 1.0 / (s * (omega + s));
    const double xi = 1.0 + xi_m1;
    double term = 1, sum = 1;
    const double arg = -0.5 * xi_m1;
    for (int k = 0; k < n; ++k) {
        term *= double(k - n) * (n + 1 + k) / ((m + 1.0 + k) * (k + 1)) * arg;
        sum += term;
    }
    const double pmn = std::pow(xi_m1 / (xi + 1.0), 0.5 * m) * sum / std::tgamma(m + 1.0);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return cplx(0, sign * std::sqrt(kPi / 2) * std::tgamma(m + n + 1.0) / std::sqrt(s) * pmn);
}

double toroidal_q(int n, double omega_m1) { return detail::toroidal_q0<double>(n, omega_m1); }

double whipple_p_from_q(int m, int p, double omega, double q_value)
{
    const double s = std::sqrt((omega - 1) * (omega + 1));
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * q_value * std::sqrt(s) / (std::sqrt(kPi / 2) * detail::gamma_twice<double>(2 * (p - m) + 1));
}

double whipple_q_from_p(int m, int p, double omega, double p_value)
{
    const double s = std::sqrt((omega - 1) * (omega + 1));
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sqrt(kPi / 2) * detail::gamma_twice<double>(2 * (p - m) + 1) * p_value / std::sqrt(s);
}

double legendre_p(HalfInt nu, int mu, double xi)
{
    if (!(xi > 1)) throw domain_error("legendre_p needs xi > 1");
    if (mu < 0) throw domain_error("legendre_p needs mu >= 0");
    if (nu.twice < -1) nu.twice = -nu.twice - 2;  // P_{-nu-1} = P_nu

    if (nu.is_integer()) {
        const int n = nu.twice / 2;
        if (n < mu) return 0.0;
        const double w = std::sqrt((xi - 1) * (xi + 1));
        double pm = 1;
        for (int k = 1; k <= mu; ++k) pm *= (2 * k - 1) * w;
        if (n == mu) return pm;
        double prev = pm, cur = (2 * mu + 1) * xi * pm;
        for (int l = mu + 1; l < n; ++l) {
            double next = ((2 * l + 1) * xi * cur - (l + mu) * prev) / (l - mu + 1);
            prev = cur;
            cur = next;
        }
        return cur;
    }

    const int p = (nu.twice + 1) / 2;
    const double w = std::sqrt((xi - 1) * (xi + 1));
    const double omega = xi / w;
    const double omega_m1 = 1.0 / (w * (xi + w));
    const double q = legendre_q_toroidal(mu, HalfInt::integer(p), omega, omega_m1).real();
    return whipple_p_from_q(mu, p, omega, q);
}

double gauss_2f1(double a, double b, double c, double z, int max_terms)
{
    if (is_nonpositive_integer(c)) throw pole_error("gauss_2f1: c is a non-positive integer");
    if (z == 0) return 1.0;
    if (z > 1) throw domain_error("gauss_2f1: z > 1 is on the branch cut");
    const double d = c - a - b;
    if (z == 1) {
        if (d <= 0) throw domain_error("gauss_2f1 diverges at z = 1");
        return std::tgamma(c) * std::tgamma(d) * rgamma(c - a) * rgamma(c - b);
    }
    if (z < -0.5) return std::pow(1 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1), max_terms);

    if (z > 0.9) {
        const double w = 1 - z;
        const bool integral = std::abs(d - std::round(d)) < 1e-12;
        if (!integral) {
            double t1 = std::tgamma(c) * std::tgamma(d) * rgamma(c - a) * rgamma(c - b);
            double t2 = std::tgamma(c) * std::tgamma(-d) * rgamma(a) * rgamma(b);
            double f1 = t1 == 0 ? 0 : gauss_2f1(a, b, a + b - c + 1, w, max_terms);
            double f2 = t2 == 0 ? 0 : gauss_2f1(c - a, c - b, d + 1, w, max_terms);
            return t1 * f1 + std::pow(w, d) * t2 * f2;
        }
        if (std::round(d) == 0) {
            using boost::math::digamma;
            const double lw = std::log(w);
            double da = digamma(a), db = digamma(b), d1 = digamma(1.0);
            double coef = 1, wk = 1, sum = 0;
            for (int k = 0; k < max_terms; ++k) {
                double term = coef * wk * (2 * d1 - da - db - lw);
                sum += term;
                if (k > 2 && std::abs(term) <= kEps * std::abs(sum)) break;
                coef *= (a + k) * (b + k) / double((k + 1) * (k + 1));
                wk *= w;
                d1 += 1.0 / (k + 1);
                da += 1.0 / (a + k);
                db += 1.0 / (b + k);
            }
            return std::tgamma(a + b) * rgamma(a) * rgamma(b) * sum;
        }
        // Other integer c-a-b: fall through to the slowly converging direct series.
    }

    double term = 1, sum = 1;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += term;
        if (term == 0 || std::abs(term) <= kEps * std::abs(sum)) return sum;
    }
    throw convergence_error("gauss_2f1: series did not converge");
}

cplx hyp1f2(double a, double b1, double b2, cplx z, int max_terms)
{
    if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2)) throw pole_error("hyp1f2: lower parameter is a pole");
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < max_terms; ++k) {
        term *= (a + k) / ((b1 + k) * (b2 + k) * (k + 1)) * z;
        sum += term;
        if (term == 0.0 || (double(k * k) > std::abs(z) && std::abs(term) <= kEps * std::abs(sum))) return sum;
    }
    throw convergence_error("hyp1f2: series did not converge");
}

}  // namespace ringhelm
