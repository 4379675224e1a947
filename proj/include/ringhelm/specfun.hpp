#pragma once

#include <vector>

#include "ringhelm/types.hpp"

namespace ringhelm {

// Integer or half-integer, stored exactly as twice its value.
struct HalfInt {
    int twice = 0;

    static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
    static constexpr HalfInt integer(int n) { return HalfInt{2 * n}; }
    static constexpr HalfInt half(int n) { return HalfInt{2 * n + 1}; }  // n + 1/2
    // Throws domain_error unless x is an exact multiple of 1/2.
    static HalfInt from_double(double x);

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool operator==(const HalfInt&) const = default;
};

struct OrderDegree {
    HalfInt degree;
    HalfInt order;
};

// Gamma function. Throws pole_error at non-positive integers.
double gamma(double x);
cplx gamma(cplx z);
// 1/Gamma, exactly zero at the poles.
double rgamma(double x);
// (a)_n; negative n through (a)_{-k} = 1/(a-k)_k. Throws pole_error on division by zero.
double pochhammer(double a, int n);

enum class BesselKind { J, Y, H1, I };

// Half-integer order (either sign) Bessel functions of positive real argument.
cplx bessel_half(BesselKind kind, HalfInt nu, double x);

// Spherical Bessel ladders j_0..j_nmax (Miller, downward) and y_0..y_nmax (upward).
std::vector<cplx> spherical_j(cplx x, int nmax);
std::vector<cplx> spherical_y(cplx x, int nmax);

// exp(-s) I_m(s) for s >= 0 without overflow.
double bessel_i_scaled(int m, double s);

// Associated Legendre function of the first kind on xi > 1 (no Condon-Shortley phase).
double legendre_p(HalfInt nu, int mu, double xi);

// Toroidal harmonic Q^mu_{m-1/2}(omega). Integer mu gives a real value,
// half-integer mu a purely imaginary one. omega_m1 = omega - 1 may be passed
// separately when it is known more accurately than omega itself.
cplx legendre_q_toroidal(int m, HalfInt mu, double omega);
cplx legendre_q_toroidal(int m, HalfInt mu, double omega, double omega_m1);

// Q_{n-1/2}(1 + omega_m1) through the hypergeometric representation in exp(-2 eta).
double toroidal_q(int n, double omega_m1);

// Whipple map between Q^p_{m-1/2}(omega) and P^m_{p-1/2}(xi), xi = omega/sqrt(omega^2-1).
double whipple_p_from_q(int m, int p, double omega, double q_value);
double whipple_q_from_p(int m, int p, double omega, double p_value);

// Gauss hypergeometric 2F1 for real arguments, z < 1.
double gauss_2f1(double a, double b, double c, double z, int max_terms = 200000);

// 1F2(a; b1, b2; z), entire in z.
cplx hyp1f2(double a, double b1, double b2, cplx z, int max_terms = 5000);

}  // namespace ringhelm
