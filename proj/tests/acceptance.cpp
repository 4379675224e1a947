// Acceptance checks. Usage: acceptance <1..8>. Prints one PASS/FAIL line.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ringhelm/coeffs.hpp"
#include "ringhelm/hyper2d.hpp"
#include "ringhelm/odecheck.hpp"
#include "ringhelm/ringfield.hpp"
#include "ringhelm/series.hpp"
#include "ringhelm/specfun.hpp"

using namespace ringhelm;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

struct Row {
    int m;
    double beta, r, z;
    cplx value;
};

Verdict table2()
{
    const Row rows[] = {
        {0, 2, 0.5, 0.5, {-0.4332208795, 0.6063507453}},      {0, 2, 0.5, 1.5, {-0.4324244083, -0.2593676946}},
        {0, 2, 0.5, 5, {-0.1320141290, -0.1413052175}},       {0, 2, 0.5, 10, {0.02892833221, 0.09482283693}},
        {0, 2, 0.5, 20, {-0.03552779935, 0.03502697525}},     {3, 5, 1.5, 0.5, {-0.2152817201, -0.2085849956}},
        {3, 5, 1.5, 1, {0.1382226177, -0.2010980843}},        {3, 5, 1.5, 5, {-0.009794158906, -0.000546039281}},
        {3, 5, 1.5, 10, {-0.0004846328044, 0.0006340532520}}, {3, 5, 1.5, 20, {0.00000356468968, 0.00005347913049}},
    };
    const SeriesPolicy policy{1e-11};
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    bool converged = true;
    for (const Row& row : rows)
        for (Method m : {Method::hankel, Method::legendre, Method::angular}) {
            const CoeffResult r = compute_coefficient({row.m, row.beta, row.r, 1.0, row.z, 0.0}, m, policy);
            converged = converged && r.report.converged;
            worst = std::max({worst, std::abs(r.value.total.real() - row.value.real()),
                              std::abs(r.value.total.imag() - row.value.imag())});
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {converged && worst <= 1e-9 && secs < 10,
            "max part error " + fmt("%.2e", worst) + " over hankel/legendre/angular, " + fmt("%.2f", secs) + " s" +
                (converged ? "" : ", some method not converged")};
}

Verdict table3()
{
    struct R3 {
        double z;
        int n1;
        cplx value;
    };
    const R3 rows[] = {{0.5, 227, {0.0785417676, -0.2281496125}},
                       {1, 99, {0.1318397799, 0.0959755332}},
                       {5, 20, {0.04717552085, -0.09819984770}},
                       {50, 7, {-0.001762722093, -0.000313668126}},
                       {100, 6, {-0.0000246835014, 0.0004487208692}},
                       {200, 5, {-4.36384289e-6, -0.00011237773355}},
                       {1000, 4, {-1.884281670e-6, -4.086433833e-6}},
                       {5000, 3, {-1.446923432e-7, 1.070704963e-7}},
                       {10000, 2, {4.307310056e-8, 1.302718185e-8}},
                       {1e7, 1, {-2.303180610e-14, 3.865922798e-14}}};
    const SeriesPolicy policy{1e-10};
    bool ok = true;
    double worst = 0;
    int prev = 1 << 30;
    std::string counts;
    for (const R3& row : rows) {
        const CoeffResult r = compute_coefficient({1, 6.0, 1.5, 1.0, row.z, 0.0}, Method::hankel, policy);
        const double err = std::abs(r.value.total - row.value);
        const double allowed = std::max(1e-9 * std::abs(row.value), 1e-15);
        worst = std::max(worst, err / allowed);
        const int n = r.report.terms_used;
        ok = ok && r.report.converged && err <= allowed && n <= prev;
        if (row.z >= 1000) ok = ok && n <= 5 && n <= row.n1 + 2;
        prev = n;
        counts += (counts.empty() ? "" : " ") + std::to_string(n);
    }
    return {ok, "worst error/allowance " + fmt("%.2f", worst) + ", N1 = " + counts};
}

Verdict table4()
{
    // Printed values are reproduced with m = 1 (the caption says m = 2).
    const cplx reference[] = {{0.1874175169, 0.1222388714}, {0.8955546890, 0.1360159497}, {1.628566013, 0.136158894},
                              {2.361506874, 0.136160324},   {3.094442571, 0.136160339},  {3.827378171, 0.136160339},
                              {4.560313770, 0.136160339},   {5.293249369, 0.136160339},  {6.026184968, 0.136160339},
                              {6.759120567, 0.136160339}};
    const SeriesPolicy policy{1e-10};
    bool ok = true;
    double worst = 0;
    std::vector<double> re;
    std::string counts;
    for (int e = 0; e <= 9; ++e) {
        const double z = std::pow(10.0, -e);
        const CoeffResult r = compute_coefficient({1, 1.0, 1.0, 1.0, z, 0.0}, Method::legendre, policy);
        const cplx v = r.value.total;
        worst = std::max({worst, std::abs(v.real() - reference[e].real()), std::abs(v.imag() - reference[e].imag())});
        ok = ok && r.report.converged && r.report.terms_used <= 10;
        if (e >= 4) ok = ok && std::abs(v.imag() - 0.136160339) <= 1e-9;
        re.push_back(v.real());
        counts += (counts.empty() ? "" : " ") + std::to_string(r.report.terms_used);
    }
    // Per-decade increments from z = 1e-2 on.
    double lo = 1e300, hi = -1e300;
    for (int e = 2; e < 9; ++e) {
        const double d = re[e + 1] - re[e];
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    ok = ok && worst <= 1e-8 && hi - lo <= 1e-5;
    return {ok, "max part error " + fmt("%.2e", worst) + ", decade step " + fmt("%.7f", hi) + " spread " +
                    fmt("%.1e", hi - lo) + ", N2 = " + counts};
}

Verdict seven_methods()
{
    std::ostringstream out, err;
    const int code = cli::run({"crosscheck", "--count", "20", "--imaginary", "5", "--seed", "1"}, out, err);
    // Pull the spread column out of the CSV.
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    std::vector<std::string> head;
    {
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) head.push_back(c);
    }
    const auto col = std::find(head.begin(), head.end(), "spread") - head.begin();
    const auto icol = std::find(head.begin(), head.end(), "beta_im") - head.begin();
    double real_worst = 0, imag_worst = 0;
    int cases = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
        const double s = std::stod(cells[col]);
        double& worst = std::stod(cells[icol]) != 0 ? imag_worst : real_worst;
        worst = std::max(worst, s);
        ++cases;
    }
    return {code == cli::kOk && cases == 25,
            "25 configs, max spread " + fmt("%.2e", real_worst) + " (real beta), " + fmt("%.2e", imag_worst) +
                " (imaginary beta)"};
}

Verdict static_limit()
{
    bool ok = true;
    double worst = 0;
    int checks = 0;
    for (int m = 0; m <= 5; ++m)
        for (double omega : {1.1, 1.5, 3.0, 10.0}) {
            const RingConfig c{m, 0.0, 1.0, 1.0, std::sqrt(2 * (omega - 1)), 0.0};
            const double expect = toroidal_q(m, omega - 1) / M_PI;
            for (Method method : coefficient_methods()) {
                if (!admits(method, c)) continue;
                const CoeffResult r = compute_coefficient(c, method, {});
                const double e = std::abs(r.value.total - expect) / expect;
                worst = std::max(worst, e);
                ok = ok && e <= 1e-11;
                ++checks;
            }
        }
    return {ok, std::to_string(checks) + " method/config pairs, max relative error " + fmt("%.2e", worst)};
}

Verdict ode_suite()
{
    double grid_worst = 0;
    for (int m : {0, 1, 3})
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double x = 0.05 + 0.9 * i / 9.0, y = 0.1 + 4.9 * j / 9.0;
                const cplx chi = x * y / 2;
                grid_worst = std::max({grid_worst, ode_residual_x(m, y, x, g_plus_jet(m, x, chi, JetVariable::x)),
                                       ode_residual_x(m, y, x, g_minus_jet(m, x, chi, JetVariable::x))});
            }

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> L(0.2, 4.0), W(1.1, 6.0), U(-1.0, 1.0);
    double omega_worst = 0, equiv_worst = 0;
    for (int k = 0; k < 20; ++k) {
        const int m = k % 4;
        const double lambda = L(rng), omega = W(rng);
        const double x = 2 / (omega + 1);
        const cplx chi = lambda * lambda / 4;
        const Jet p = g_plus_jet(m, x, chi, JetVariable::omega), q = g_minus_jet(m, x, chi, JetVariable::omega);
        Jet y;
        for (int i = 0; i < 5; ++i) y[i] = M_PI * std::sqrt(2.0) * (p[i] + q[i]);
        omega_worst = std::max(omega_worst, ode_residual_omega(m, lambda, omega, y));

        // The two operators coincide under x = 2 / (omega + 1) up to the factor -4 / x^2.
        const cplx yy = 2.0 * chi / x;
        Jet dx;
        for (cplx& v : dx) v = cplx(U(rng), U(rng));
        const cplx lx = apply_operator(ode_x_coefficients(m, yy, x), dx);
        const cplx lw = apply_operator(ode_omega_coefficients(m, lambda, omega), jet_x_to_omega(x, dx));
        equiv_worst = std::max(equiv_worst, std::abs(lx + 4.0 / (x * x) * lw) / std::abs(lx));
    }

    double sentinel_min = 1e300;
    for (int k = 0; k < 5; ++k) {
        double worst = 0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double x = 0.05 + 0.9 * i / 9.0, y = 0.1 + 4.9 * j / 9.0;
                OdeCoefficients c = ode_x_coefficients(1, y, x);
                c[k] *= 1.01;
                worst = std::max(worst, relative_residual(c, g_plus_jet(1, x, x * y / 2, JetVariable::x)));
            }
        sentinel_min = std::min(sentinel_min, worst);
    }
    const bool ok = grid_worst < 1e-7 && omega_worst < 1e-7 && equiv_worst < 1e-10 && sentinel_min > 1e-4;
    return {ok, "x grid " + fmt("%.1e", grid_worst) + ", omega points " + fmt("%.1e", omega_worst) +
                    ", equivalence " + fmt("%.1e", equiv_worst) + ", weakest perturbation " +
                    fmt("%.1e", sentinel_min)};
}

Verdict distinct_series()
{
    const Dimensionless d = derive({0, 2.0, 0.5, 1.0, 1.5, 0.0});
    std::vector<cplx> a, b;
    // The default 1e-13 sits on the rounding floor of the 1F2 rows.
    const SeriesPolicy policy{1e-12};
    const MethodReport f = eval_1f2_series(d, d.rR, policy, &a);
    const MethodReport l = eval_legendre_minus_series(d, d.rR, policy, MinusForm::q_form, &b);
    const double agree = std::abs(f.value - l.value) / std::abs(l.value);
    const double first = (a.empty() || b.empty()) ? 0.0 : std::abs(a[0] - b[0]) / std::abs(b[0]);
    return {f.converged && l.converged && agree <= 1e-10 && first > 1e-3,
            "limits differ by " + fmt("%.1e", agree) + ", first terms differ by " + fmt("%.2f", first)};
}

Verdict reconstruction()
{
    // r = R = 1, z = 1: omega = 1.5.
    const FieldPoint p{1.5, 1.0, 0.0, 1.0, 1.0, 0.0};
    double worst = 0;
    bool converged = true;
    for (int k = 0; k < 8; ++k) {
        const double phis = 2 * M_PI * k / 8;
        const FieldValue g = greens_partial_sum(p, phis, 40);
        converged = converged && g.converged;
        const cplx direct = greens_direct(p, phis);
        worst = std::max(worst, std::abs(g.value - direct) / std::abs(direct));
    }
    return {converged && worst <= 1e-8, "max relative error at M = 40: " + fmt("%.2e", worst)};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::function<Verdict()>> checks = {table2,       table3,   table4,          seven_methods,
                                                          static_limit, ode_suite, distinct_series, reconstruction};
    const int n = argc > 1 ? std::atoi(argv[1]) : 0;
    if (n < 1 || n > 8) {
        std::fprintf(stderr, "usage: acceptance <1..8>\n");
        return 2;
    }
    Verdict v{false, ""};
    try {
        v = checks[n - 1]();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", n, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    return v.pass ? 0 : 1;
}
