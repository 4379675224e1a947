#include "ringhelm/params.hpp"

#include <cmath>

namespace ringhelm {

void RingConfig::validate() const
{
    if (m < 0) throw domain_error("mode m must be >= 0");
    if (!(r > 0) || !(R > 0)) throw domain_error("r and R must be positive");
    if (!std::isfinite(r) || !std::isfinite(R) || !std::isfinite(z) || !std::isfinite(Z) ||
        !std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
        throw domain_error("non-finite ring configuration");
    if (beta.imag() < 0) throw domain_error("Im(beta) must be >= 0");
}

Dimensionless derive(const RingConfig& c)
{
    c.validate();
    const double h = c.z - c.Z;
    const double dr = c.r - c.R;
    const double near2 = dr * dr + h * h;  // squared distance to the ring cross-section
    if (!(near2 > 0)) throw geometry_error("field point lies on the ring");
    const double far2 = (c.r + c.R) * (c.r + c.R) + h * h;
    const double rR = c.r * c.R;

    Dimensionless d;
    d.m = c.m;
    d.alpha = c.m + 0.5;
    d.rR = rR;
    d.k2 = 4 * rR / far2;
    d.one_minus_k2 = near2 / far2;
    d.omega_m1 = near2 / (2 * rR);
    d.omega = 1 + d.omega_m1;
    d.gamma = c.beta * std::sqrt(far2);
    d.lambda = c.beta * std::sqrt(2 * rR);
    d.chi = d.lambda * d.lambda / 4.0;
    d.x = d.k2;
    d.y = d.gamma * d.gamma / 4.0;
    return d;
}

}  // namespace ringhelm
