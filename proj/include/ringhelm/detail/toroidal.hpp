#pragma once

// Scalar-generic pieces of the toroidal-harmonic machinery. Instantiated with
// double and with boost::multiprecision floats by the Legendre series.

#include <cmath>
#include <cstdlib>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "ringhelm/types.hpp"

namespace ringhelm::detail {

// Gamma(t/2) for t odd (any sign) or t even and positive.
template <class T>
T gamma_twice(int t)
{
    using boost::math::constants::root_pi;
    if (t % 2 == 0) {
        if (t <= 0) throw pole_error("gamma pole at non-positive integer");
        T g = 1;
        for (int k = 2; k < t / 2; ++k) g *= k;
        return g;
    }
    T g = root_pi<T>();
    if (t > 0) {
        for (int k = 1; k < t; k += 2) g *= T(k) / 2;
    } else {
        for (int k = t; k < 1; k += 2) g /= T(k) / 2;
    }
    return g;
}

// Q_{n-1/2}(1 + om1), om1 > 0.
template <class T>
T toroidal_q0(int n, const T& om1)
{
    using std::abs;
    using std::exp;
    using std::log;
    using std::sqrt;
    using boost::math::expm1;
    using boost::math::log1p;
    using boost::math::constants::ln_two;
    using boost::math::constants::pi;

    n = std::abs(n);
    if (!(om1 > 0)) throw domain_error("toroidal Q needs omega > 1");
    const T eps = std::numeric_limits<T>::epsilon();
    const T eta = log1p(om1 + sqrt(om1 * (om1 + 2)));
    const T pref = exp(-(T(n) + T(0.5)) * eta);
    const T z = exp(-2 * eta);
    const T half(0.5);

    if (z <= half) {
        T c = pi<T>();
        for (int j = 1; j <= n; ++j) c *= (T(j) - half) / j;
        T term = 1, sum = 1;
        for (int k = 0; k < 100000; ++k) {
            term *= (half + k) * (T(n) + half + k) / ((T(n) + 1 + k) * (k + 1)) * z;
            sum += term;
            if (abs(term) <= eps * abs(sum)) break;
        }
        return c * pref * sum;
    }

    // Logarithmic connection formula about z = 1 (c = a + b).
    const T w = -expm1(-2 * eta);
    const T lw = log(w);
    T s_n = 0;
    for (int j = 1; j <= n; ++j) s_n += T(1) / (2 * j - 1);
    T d = 4 * ln_two<T>() - 2 * s_n;
    T c = 1, wk = 1, sum = 0;
    for (int k = 0; k < 100000; ++k) {
        T term = c * wk * (d - lw);
        sum += term;
        if (k > 0 && abs(term) <= eps * abs(sum)) break;
        c *= (half + k) * (T(n) + half + k) / (T(k + 1) * T(k + 1));
        wk *= w;
        d += T(2) / (k + 1) - T(1) / (half + k) - T(1) / (T(n) + half + k);
    }
    return pref * sum;
}

// (omega^2 - 1) dQ_{m-1/2}/domega = nu (omega Q_nu - Q_{nu-1}), nu = m - 1/2.
// This equals sqrt(omega^2-1) Q^1_{m-1/2}(omega).
template <class T>
T toroidal_xq1(int m, const T& om1, const T& q_nu)
{
    const T nu = T(m) - T(0.5);
    const T q_prev = toroidal_q0<T>(std::abs(m - 1), om1);
    return nu * ((1 + om1) * q_nu - q_prev);
}

}  // namespace ringhelm::detail
