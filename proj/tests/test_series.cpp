#include <cmath>
#include <vector>

#include "doctest.h"
#include "ringhelm/hyper2d.hpp"
#include "ringhelm/series.hpp"
#include "ringhelm/specfun.hpp"

using namespace ringhelm;

namespace {

bool near_rel(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }
bool near_abs(cplx a, cplx b, double tol)
{
    return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

Dimensionless cfg(int m, cplx beta, double r, double z) { return derive(RingConfig{m, beta, r, 1.0, z, 0.0}); }

struct TableRow {
    int m;
    double beta, r, z;
    cplx value;
};

const TableRow table2[] = {
    {0, 2, 0.5, 0.5, {-0.4332208795, 0.6063507453}},      {0, 2, 0.5, 1.5, {-0.4324244083, -0.2593676946}},
    {0, 2, 0.5, 5, {-0.1320141290, -0.1413052175}},       {0, 2, 0.5, 10, {0.02892833221, 0.09482283693}},
    {0, 2, 0.5, 20, {-0.03552779935, 0.03502697525}},     {3, 5, 1.5, 0.5, {-0.2152817201, -0.2085849956}},
    {3, 5, 1.5, 1, {0.1382226177, -0.2010980843}},        {3, 5, 1.5, 5, {-0.009794158906, -0.000546039281}},
    {3, 5, 1.5, 10, {-0.0004846328044, 0.0006340532520}}, {3, 5, 1.5, 20, {0.00000356468968, 0.00005347913049}},
};

const SeriesPolicy tight{1e-13};

}  // namespace

TEST_CASE("Hankel series reproduces the first table")
{
    for (const TableRow& row : table2) {
        CAPTURE(row.z);
        // Summation rounding near the ring sits just above 1e-13.
        const MethodReport h = eval_hankel_series(cfg(row.m, row.beta, row.r, row.z), row.r, {1e-11});
        CHECK(h.converged);
        CHECK(near_abs(h.value, row.value, 1e-9));
    }
}

TEST_CASE("Legendre plus and minus series reproduce the first table")
{
    for (const TableRow& row : table2) {
        CAPTURE(row.z);
        const Dimensionless d = cfg(row.m, row.beta, row.r, row.z);
        const MethodReport p = eval_legendre_plus_series(d, row.r, tight);
        const MethodReport q = eval_legendre_minus_series(d, row.r, tight);
        CHECK(p.converged);
        CHECK(q.converged);
        CHECK(near_abs(p.value + q.value, row.value, 1e-9));
    }
    const MethodReport p = eval_legendre_plus_series(cfg(0, 2, 0.5, 0.5), 0.5, {1e-10});
    // Reference count 10; term counting conventions differ by one or two.
    CHECK(p.terms_used <= 12);
}

TEST_CASE("Hankel series at the far end of the second table")
{
    const MethodReport h = eval_hankel_series(cfg(1, 6, 1.5, 1e7), 1.5, {1e-10});
    CHECK(h.converged);
    CHECK(h.terms_used <= 2);
    CHECK(std::abs(h.value.real() - -2.303180610e-14) <= 1e-15);
    CHECK(std::abs(h.value.imag() - 3.865922798e-14) <= 1e-15);
}

TEST_CASE("Hankel term counts fall as the field point recedes")
{
    int prev = 1 << 30;
    for (double z : {0.5, 1.0, 5.0, 50.0, 100.0, 200.0, 1000.0, 5000.0, 10000.0, 1e7}) {
        const MethodReport h = eval_hankel_series(cfg(1, 6, 1.5, z), 1.5, {1e-10});
        CAPTURE(z);
        CHECK(h.converged);
        CHECK(h.terms_used <= prev);
        prev = h.terms_used;
    }
    CHECK(prev <= 2);
}

TEST_CASE("Bessel J and Y parts add up to the Hankel series")
{
    for (const TableRow& row : table2) {
        const Dimensionless d = cfg(row.m, row.beta, row.r, row.z);
        const cplx h = eval_hankel_series(d, row.r, tight).value;
        const cplx y = eval_bessely_series(d, row.r, tight).value;
        const cplx j = eval_besselj_series(d, row.r, tight).value;
        CHECK(near_rel(y + j, h, 1e-12));
        const SplitReport s = eval_hankel_split(d, row.r, tight);
        CHECK(near_rel(s.plus.value + s.minus.value, s.total.value, 1e-12));
        CHECK(near_rel(s.plus.value, y, 1e-12));
    }
    const Dimensionless d = cfg(0, 2, 0.5, 0.5);
    CHECK(std::abs(eval_bessely_series(d, 0.5, tight).value - cplx(-0.4332208795, 0)) < 1e-10);
    CHECK(std::abs(eval_besselj_series(d, 0.5, tight).value - cplx(0, 0.6063507453)) < 1e-10);
}

TEST_CASE("Bessel series against the closed forms")
{
    const Dimensionless d = cfg(3, 5, 1.5, 1);
    CHECK(near_rel(eval_bessely_series(d, 1.5, tight).value, lambda_plus_closed(d, 1.5, tight).value, 1e-10));
    CHECK(near_rel(eval_besselj_series(d, 1.5, tight).value, lambda_minus_closed(d, 1.5, tight).value, 1e-10));
}

TEST_CASE("minus parts vanish as the wavenumber goes to zero")
{
    for (int m : {0, 2}) {
        const Dimensionless d = cfg(m, 1e-9, 0.8, 0.4);
        CHECK(std::abs(eval_besselj_series(d, 0.8, tight).value) < 1e-8);
        CHECK(std::abs(eval_1f2_series(d, 0.8, tight).value) < 1e-8);
    }
    const Dimensionless s = cfg(2, 0.0, 1.0, 0.3);
    CHECK(eval_legendre_minus_series(s, 1.0, tight).value == cplx(0));
}

TEST_CASE("Legendre series static limit")
{
    for (int m : {0, 1, 4}) {
        const Dimensionless d = cfg(m, 0.0, 0.7, 0.6);
        const double expect = toroidal_q(m, d.omega_m1) / (M_PI * std::sqrt(0.7));
        CHECK(near_rel(eval_legendre_plus_series(d, 0.7, tight).value, expect, 1e-11));
        CHECK(near_rel(eval_p_series(d, 0.7, tight).value, expect, 1e-11));
    }
}

TEST_CASE("near-ring Legendre series")
{
    // The third table's printed values follow from m = 1.
    const Dimensionless d1 = cfg(1, 1, 1, 1);
    CHECK(near_abs(eval_p_series(d1, 1, tight).value, {0.1874175169, 0.1222388714}, 1e-9));
    const Dimensionless d9 = cfg(1, 1, 1, 1e-9);
    const MethodReport p = eval_legendre_plus_series(d9, 1, {1e-10});
    CHECK(p.converged);
    CHECK(std::abs(p.value.real() - 6.759120567) < 1e-8);
    CHECK(p.terms_used <= 10);
    CHECK(std::abs(eval_legendre_minus_series(d9, 1, tight).value.imag() - 0.136160339) < 1e-9);
}

TEST_CASE("Q-form and P-form of the minus series agree")
{
    const Dimensionless d = cfg(2, 1, 1, 0.1);
    const MethodReport p = eval_legendre_minus_series(d, 1, tight, MinusForm::p_form);
    const MethodReport q = eval_legendre_minus_series(d, 1, tight, MinusForm::q_form);
    CHECK(p.converged);
    CHECK(q.converged);
    CHECK(near_rel(q.value, p.value, 1e-11));
    for (const TableRow& row : table2) {
        const Dimensionless e = cfg(row.m, row.beta, row.r, row.z);
        CHECK(near_rel(eval_legendre_minus_series(e, row.r, tight, MinusForm::q_form).value,
                       eval_legendre_minus_series(e, row.r, tight).value, 1e-10));
    }
}

TEST_CASE("P series is the sum of the two Legendre series")
{
    for (const TableRow& row : table2) {
        const Dimensionless d = cfg(row.m, row.beta, row.r, row.z);
        const cplx sum = eval_legendre_plus_series(d, row.r, tight).value + eval_legendre_minus_series(d, row.r, tight).value;
        CHECK(near_rel(eval_p_series(d, row.r, tight).value, sum, 1e-11));
        const SplitReport s = eval_p_series_split(d, row.r, tight);
        CHECK(near_rel(s.plus.value + s.minus.value, s.total.value, 1e-12));
    }
}

TEST_CASE("1F2 rows agree with the Kampe de Feriet closed form")
{
    // m = 1, x = 1/2, y = 1 at r = R = 1: h = 2, beta = 1/sqrt(2).
    const Dimensionless d = cfg(1, 1 / std::sqrt(2.0), 1, 2);
    CHECK(d.x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(d.y - 1.0) < 1e-15);
    CHECK(near_rel(eval_1f2_series(d, 1, tight).value, lambda_minus_closed(d, 1, tight).value, 1e-11));
}

TEST_CASE("1F2 and Legendre minus series are distinct series with one limit")
{
    const Dimensionless d = cfg(0, 2, 0.5, 1.5);
    std::vector<cplx> a, b;
    const MethodReport f = eval_1f2_series(d, 0.5, tight, &a);
    const MethodReport l = eval_legendre_minus_series(d, 0.5, tight, MinusForm::q_form, &b);
    CHECK(near_rel(f.value, l.value, 1e-10));
    REQUIRE(!a.empty());
    REQUIRE(!b.empty());
    CHECK(std::abs(a[0] - b[0]) > 1e-3 * std::abs(b[0]));
}

TEST_CASE("real wavenumber gives a real plus part and an imaginary minus part")
{
    for (const TableRow& row : table2) {
        const Dimensionless d = cfg(row.m, row.beta, row.r, row.z);
        for (const SplitReport& s : {eval_hankel_split(d, row.r, tight), eval_p_series_split(d, row.r, tight)}) {
            CHECK(std::abs(s.plus.value.imag()) <= 1e-11 * std::abs(s.plus.value));
            CHECK(std::abs(s.minus.value.real()) <= 1e-11 * std::abs(s.minus.value));
        }
        const cplx p = eval_legendre_plus_series(d, row.r, tight).value;
        const cplx q = eval_legendre_minus_series(d, row.r, tight).value;
        CHECK(std::abs(p.imag()) <= 1e-11 * std::abs(p));
        CHECK(std::abs(q.real()) <= 1e-11 * std::abs(q));
    }
}

TEST_CASE("term vectors add up to the value")
{
    const Dimensionless d = cfg(3, 5, 1.5, 1);
    std::vector<cplx> terms;
    const MethodReport h = eval_hankel_series(d, 1.5, tight, &terms);
    cplx s = 0;
    for (cplx t : terms) s += t;
    CHECK(near_rel(s, h.value, 1e-12));
}

TEST_CASE("exhausted term budget reports non-convergence")
{
    SeriesPolicy p;
    p.max_terms = 20;
    const MethodReport h = eval_hankel_series(cfg(3, 5, 1.5, 0.5), 1.5, p);
    CHECK_FALSE(h.converged);
}
