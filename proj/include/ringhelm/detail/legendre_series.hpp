#pragma once

// Associated-Legendre series for Lambda_pm, generic in the real type so that
// heavily cancelling configurations can be rerun in extended precision.

#include <complex>
#include <vector>

#include <boost/math/special_functions/fpclassify.hpp>

#include "ringhelm/detail/accumulator.hpp"
#include "ringhelm/detail/toroidal.hpp"
#include "ringhelm/types.hpp"

namespace ringhelm::detail {

template <class T>
struct PartSum {
    std::complex<T> sum{};
    T abs_sum{0};
    T tail{0};
    int terms_used = 0;
    int count = 0;
    bool done = false;
    bool finite = true;
};

template <class T>
PartSum<T> finish(const SeriesAccumulator<T>& acc, bool finite)
{
    PartSum<T> out;
    out.sum = acc.value();
    out.abs_sum = acc.abs_sum();
    out.tail = acc.tail();
    out.terms_used = acc.terms_used();
    out.count = acc.count();
    out.done = acc.done();
    out.finite = finite;
    return out;
}

template <class T>
bool finite_c(const std::complex<T>& v)
{
    return boost::math::isfinite(v.real()) && boost::math::isfinite(v.imag());
}

template <class T>
std::complex<T> widen(cplx v)
{
    return {T(v.real()), T(v.imag())};
}

template <class T>
cplx narrow(const std::complex<T>& v)
{
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Sum of U_p = X^p Q^p_{m-1/2}(omega) / (p! sqrt(pi/2) Gamma(p-m+1/2) Gamma(p+m+1/2)),
// X = lambda^2 sqrt(omega^2-1) / 4, by the order recurrence of Q.
template <class T>
PartSum<T> legendre_u_sum(int m, cplx lambda, double omega_m1, double tol, int window, int max_terms,
                          std::vector<std::complex<T>>* terms)
{
    using C = std::complex<T>;
    using std::sqrt;
    using boost::math::constants::pi;
    const T om1(omega_m1);
    const T omega = 1 + om1;
    const T s2 = om1 * (om1 + 2);
    const C lam = widen<T>(lambda);
    const C chi = lam * lam / T(4);
    const C wchi = chi * omega;
    const C x2 = chi * chi * s2;
    const T half(0.5);
    const T rhp = sqrt(pi<T>() / 2);

    const T q = toroidal_q0<T>(m, om1);
    const T xq1 = toroidal_xq1<T>(m, om1, q);
    C prev = C(q / (pi<T>() * rhp) * (m % 2 == 0 ? 1 : -1));
    C cur = chi * (xq1 / (rhp * gamma_twice<T>(3 - 2 * m) * gamma_twice<T>(2 * m + 3)));

    SeriesAccumulator<T> acc(tol, window);
    bool finite = true;
    for (int p = 0; p < max_terms; ++p) {
        const C& t = p == 0 ? prev : cur;
        if (!finite_c(t)) {
            finite = false;
            break;
        }
        if (terms) terms->push_back(t);
        acc.push(t);
        if (acc.done()) break;
        if (p >= 1) {
            C next = (T(-2 * p) * wchi * cur - x2 * prev / T(p)) /
                     (T(p + 1) * (T(p + m) + half) * (T(p - m) + half));
            prev = cur;
            cur = next;
        }
    }
    return finish(acc, finite);
}

// Sum of V_p = (-1)^p chi^{p+m} s^{p+m} P^m_{p+m}(xi) / (Gamma(p+m+3/2) (p+2m)!),
// the P-form of the half-integer-order series.
template <class T>
PartSum<T> legendre_v_sum(int m, cplx lambda, double omega_m1, double tol, int window, int max_terms,
                          std::vector<std::complex<T>>* terms)
{
    using C = std::complex<T>;
    const T om1(omega_m1);
    const T omega = 1 + om1;
    const T s2 = om1 * (om1 + 2);
    const C lam = widen<T>(lambda);
    const C chi = lam * lam / T(4);
    const C wchi = chi * omega;
    const C x2 = chi * chi * s2;
    const T half(0.5);

    T dfact = 1;  // (2m-1)!!
    for (int k = 1; k < 2 * m; k += 2) dfact *= k;
    C chim(T(1));
    for (int k = 0; k < m; ++k) chim *= chi;
    C prev(T(0));
    C cur = chim * (dfact / (gamma_twice<T>(2 * m + 3) * gamma_twice<T>(4 * m + 2)));

    SeriesAccumulator<T> acc(tol, window);
    bool finite = true;
    for (int p = 0; p < max_terms; ++p) {
        if (!finite_c(cur)) {
            finite = false;
            break;
        }
        if (terms) terms->push_back(cur);
        acc.push(cur);
        if (acc.done()) break;
        C next = (-T(2 * p + 2 * m + 1) * wchi * cur - x2 * prev / (T(p + m) + half)) /
                 (T(p + 1) * (T(p + m + 1) + half) * T(p + 2 * m + 1));
        prev = cur;
        cur = next;
    }
    return finish(acc, finite);
}

// Same sum as legendre_v_sum written through the half-odd order functions
// Q^{n+1/2}_{m-1/2}(omega), which reduce to P^{-m}_n(xi) of integer degree:
// sum_p (-1)^p X^n P^{-m}_n(xi) / (p! Gamma(n+3/2)), n = p+m, X = chi s.
// P^{-m}_n comes from its terminating hypergeometric sum (all terms positive).
template <class T>
PartSum<T> legendre_w_sum(int m, cplx lambda, double omega_m1, double tol, int window, int max_terms,
                          std::vector<std::complex<T>>* terms)
{
    using C = std::complex<T>;
    using std::sqrt;
    const T om1(omega_m1);
    const T omega = 1 + om1;
    const T s = sqrt(om1 * (om1 + 2));
    const C lam = widen<T>(lambda);
    const C X = lam * lam / T(4) * s;
    const T e = 1 / (s * (omega + s));  // xi - 1
    T front = 1;                        // ((xi-1)/(xi+1))^{m/2} / m!
    const T ratio = sqrt(e / (2 + e));
    for (int k = 1; k <= m; ++k) front *= ratio / k;

    auto p_minus = [&](int n) {
        T term = 1, sum = 1;
        for (int k = 0; k < n; ++k) {
            term *= T(n - k) * T(n + k + 1) / (T(m + k + 1) * T(k + 1)) * (e / 2);
            sum += term;
        }
        return front * sum;
    };

    C xn(T(1));
    for (int k = 0; k < m; ++k) xn *= X;
    T pfact = 1;
    SeriesAccumulator<T> acc(tol, window);
    bool finite = true;
    for (int p = 0; p < max_terms; ++p) {
        const int n = p + m;
        C cur = xn * (p_minus(n) / (pfact * gamma_twice<T>(2 * n + 3)));
        if (p % 2) cur = -cur;
        if (!finite_c(cur)) {
            finite = false;
            break;
        }
        if (terms) terms->push_back(cur);
        acc.push(cur);
        if (acc.done()) break;
        xn *= X;
        pfact *= T(p + 1);
    }
    return finish(acc, finite);
}

// Unified series sum_n (i lambda)^n / n! * Gamma((n+1)/2)/Gamma(m+(n+1)/2) * phat_{(n-1)/2},
// phat_nu = s^nu P^m_nu(xi), from upward degree ladders in nu. Even n feed `even`,
// odd n feed `odd`; the stopping rule runs on pairs.
template <class T>
struct PSeriesSums {
    PartSum<T> total, even, odd;
};

template <class T>
PSeriesSums<T> legendre_p_sum(int m, cplx lambda, double omega_m1, double tol, int window, int max_terms)
{
    using C = std::complex<T>;
    using std::sqrt;
    using boost::math::constants::pi;
    const T om1(omega_m1);
    const T omega = 1 + om1;
    const T s2 = om1 * (om1 + 2);
    const T half(0.5);
    const T rhp = sqrt(pi<T>() / 2);
    const C il = widen<T>(cplx(0, 1) * lambda);

    // Half-integer degrees j - 1/2, j = 0, 1, ...
    const T q = toroidal_q0<T>(m, om1);
    const T xq1 = toroidal_xq1<T>(m, om1, q);
    T h_prev = q / (rhp * gamma_twice<T>(1 - 2 * m));
    T h_cur = -xq1 / (rhp * gamma_twice<T>(3 - 2 * m));
    // Integer degrees j; zero below m.
    T dfact = 1;
    for (int k = 1; k < 2 * m; k += 2) dfact *= k;
    T i_prev = 0, i_cur = 0;

    SeriesAccumulator<T> tot(tol, window), ev(tol, window), od(tol, window);
    C pw(T(1));  // (i lambda)^n / n!
    bool finite = true;
    for (int j = 0; j < max_terms; ++j) {
        // n = 2j uses degree j - 1/2.
        const int ne = 2 * j;
        T ge = 1;
        for (int i = 0; i < m; ++i) ge *= T(ne + 1) / 2 + i;
        const T he = j == 0 ? h_prev : h_cur;
        C te = pw * (he / ge);
        pw *= il / T(ne + 1);
        // n = 2j + 1 uses degree j.
        T ij = 0;
        if (j == m) {
            i_cur = dfact;
            ij = i_cur;
        } else if (j > m) {
            T next = (T(2 * j - 1) * omega * i_cur - T(j - 1 + m) * s2 * i_prev) / T(j - m);
            i_prev = i_cur;
            i_cur = next;
            ij = i_cur;
        }
        T go = 1;
        for (int i = 0; i < m; ++i) go *= T(ne + 2) / 2 + i;
        C to = pw * (ij / go);
        pw *= il / T(ne + 2);

        if (!finite_c(te) || !finite_c(to)) {
            finite = false;
            break;
        }
        tot.add(te);
        tot.add(to);
        ev.push(te);
        od.push(to);
        using std::abs;
        tot.step(abs(te.real()) + abs(te.imag()) + abs(to.real()) + abs(to.imag()));
        if (tot.done()) break;

        if (j >= 1) {
            // (j + 1/2 - m) h_{j+1} = 2 j omega h_j - (j - 1/2 + m) s^2 h_{j-1}
            T next = (T(2 * j) * omega * h_cur - (T(j + m) - half) * s2 * h_prev) / (T(j - m) + half);
            h_prev = h_cur;
            h_cur = next;
        }
    }
    return {finish(tot, finite), finish(ev, finite), finish(od, finite)};
}

}  // namespace ringhelm::detail
