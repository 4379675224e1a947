#pragma once

#include <vector>

#include "ringhelm/types.hpp"

namespace ringhelm {

// Fourier coefficients of the ring's angular source profile,
// f(phi) = sum_m eps_m (a_m cos(m phi) + b_m sin(m phi)).
struct FourierSource {
    std::vector<double> a;
    std::vector<double> b;  // b[0] == 0
    int M = 0;
    bool aliasing_warning = false;  // fewer than 4M + 4 samples
};

// Trapezoidal analysis of f sampled at phi_j = 2 pi j / N.
// Throws domain_error when M > N/2 - 1.
FourierSource analyze_source(const std::vector<double>& samples, int M);

// f on the same uniform grid of N points.
std::vector<double> synthesize_source(const FourierSource& src, int N);

struct FieldPoint {
    cplx beta{};
    double r = 0;
    double phi = 0;
    double z = 0;
    double R = 1;
    double Z = 0;
};

struct FieldValue {
    cplx value{};
    double est_error = 0;
    bool converged = true;
    std::vector<Method> methods;  // method used for each mode 0..M
};

// Field of a thin ring source with profile `src`.
FieldValue ring_solution(const FourierSource& src, const FieldPoint& p, Method method = Method::automatic,
                         const SeriesPolicy& policy = {});

// M-mode partial sum of the free-space Green function for a source at
// angle phi_source on the ring.
FieldValue greens_partial_sum(const FieldPoint& p, double phi_source, int M, Method method = Method::automatic,
                              const SeriesPolicy& policy = {});

// Closed form -exp(i beta d) / (4 pi d).
cplx greens_direct(const FieldPoint& p, double phi_source);

}  // namespace ringhelm
