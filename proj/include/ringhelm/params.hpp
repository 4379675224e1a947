#pragma once

#include "ringhelm/types.hpp"

namespace ringhelm {

struct RingConfig {
    int m = 0;
    cplx beta{};
    double r = 0;
    double R = 0;
    double z = 0;
    double Z = 0;

    // Throws domain_error for r, R <= 0, m < 0, Im(beta) < 0 or non-finite input.
    void validate() const;
};

struct Dimensionless {
    double k2 = 0;      // 4rR / ((r+R)^2 + h^2)
    double one_minus_k2 = 0;
    cplx gamma{};       // beta sqrt((r+R)^2 + h^2)
    double omega = 0;   // (r^2 + R^2 + h^2) / (2rR)
    double omega_m1 = 0;
    cplx lambda{};      // beta sqrt(2rR)
    cplx chi{};         // lambda^2 / 4
    double x = 0;       // k2
    cplx y{};           // gamma^2 / 4
    int m = 0;
    double alpha = 0.5; // m + 1/2
    double rR = 0;
};

// Throws geometry_error when the field point lies on the ring.
Dimensionless derive(const RingConfig& config);

}  // namespace ringhelm
