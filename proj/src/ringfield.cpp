#include "ringhelm/ringfield.hpp"

#include <cmath>
#include <numbers>

#include "ringhelm/coeffs.hpp"

namespace ringhelm {

namespace {

constexpr double kPi = std::numbers::pi;

RingConfig mode_config(const FieldPoint& p, int m) { return RingConfig{m, p.beta, p.r, p.R, p.z, p.Z}; }

// Adds mode m with weight w to the running sum and records the method.
void add_mode(FieldValue& out, const FieldPoint& p, int m, double w, Method method, const SeriesPolicy& policy,
              double& last, double& before_last)
{
    CoeffResult c = compute_coefficient(mode_config(p, m), method, policy);
    out.value += w * c.value.total;
    out.est_error += std::abs(w) * c.report.est_error;
    out.converged = out.converged && c.report.converged;
    out.methods.push_back(c.report.method);
    before_last = last;
    last = std::abs(w * c.value.total);
}

// Geometric tail bound from the last two mode magnitudes.
double tail_estimate(double last, double before_last)
{
    if (before_last <= 0) return last;
    const double q = last / before_last;
    return q < 1 ? last * q / (1 - q) : last;
}

}  // namespace

FourierSource analyze_source(const std::vector<double>& f, int M)
{
    const int N = int(f.size());
    if (M < 0) throw domain_error("M must be >= 0");
    if (N < 1 || M > N / 2 - 1) throw domain_error("too few samples for the requested modes (aliasing)");
    FourierSource src;
    src.M = M;
    src.aliasing_warning = N < 4 * M + 4;
    src.a.assign(M + 1, 0.0);
    src.b.assign(M + 1, 0.0);
    for (int m = 0; m <= M; ++m) {
        double sa = 0, sb = 0;
        for (int j = 0; j < N; ++j) {
            // Reduce the angle exactly before taking cos/sin.
            const double ang = 2 * kPi * double((long(m) * j) % N) / N;
            sa += f[j] * std::cos(ang);
            sb += f[j] * std::sin(ang);
        }
        src.a[m] = sa / N;
        src.b[m] = m == 0 ? 0.0 : sb / N;
    }
    return src;
}

std::vector<double> synthesize_source(const FourierSource& src, int N)
{
    std::vector<double> f(N, 0.0);
    for (int j = 0; j < N; ++j) {
        double s = src.a[0];
        for (int m = 1; m <= src.M; ++m) {
            const double ang = 2 * kPi * double((long(m) * j) % N) / N;
            s += 2 * (src.a[m] * std::cos(ang) + src.b[m] * std::sin(ang));
        }
        f[j] = s;
    }
    return f;
}

FieldValue ring_solution(const FourierSource& src, const FieldPoint& p, Method method, const SeriesPolicy& policy)
{
    FieldValue out;
    double last = 0, before_last = 0;
    for (int m = 0; m <= src.M; ++m) {
        const double eps_m = m == 0 ? 1.0 : 2.0;
        const double amp = src.a[m] * std::cos(m * p.phi) + src.b[m] * std::sin(m * p.phi);
        if (src.a[m] == 0 && src.b[m] == 0) {
            out.methods.push_back(Method::automatic);
            continue;
        }
        add_mode(out, p, m, -0.5 * eps_m * amp, method, policy, last, before_last);
    }
    out.est_error += tail_estimate(last, before_last);
    return out;
}

FieldValue greens_partial_sum(const FieldPoint& p, double phi_source, int M, Method method, const SeriesPolicy& policy)
{
    FieldValue out;
    double last = 0, before_last = 0;
    for (int m = 0; m <= M; ++m) {
        const double eps_m = m == 0 ? 1.0 : 2.0;
        add_mode(out, p, m, -eps_m * std::cos(m * (p.phi - phi_source)) / (4 * kPi), method, policy, last,
                 before_last);
    }
    out.est_error += tail_estimate(last, before_last);
    return out;
}

cplx greens_direct(const FieldPoint& p, double phi_source)
{
    const double h = p.z - p.Z;
    const double sn = std::sin((p.phi - phi_source) / 2);
    const double d = std::sqrt((p.r - p.R) * (p.r - p.R) + h * h + 4 * p.r * p.R * sn * sn);
    if (!(d > 0)) throw geometry_error("field point coincides with the source point");
    return -std::exp(cplx(0, 1) * p.beta * d) / (4 * kPi * d);
}

}  // namespace ringhelm
