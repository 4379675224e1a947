#pragma once

#include <vector>

#include "ringhelm/params.hpp"
#include "ringhelm/types.hpp"

namespace ringhelm {

struct CoeffResult {
    CoeffValue value;
    MethodReport report;  // report.value == value.total
};

// Methods that produce the full coefficient G_H^m.
const std::vector<Method>& coefficient_methods();

// Whether `method` can evaluate this configuration (beta = 0, complex beta,
// z = Z and similar restrictions).
bool admits(Method method, const RingConfig& config);

// G_H^m with its Lambda_pm split. Method::automatic picks the Legendre series
// for omega < 2 and the Hankel series otherwise, falling back to angular
// quadrature when the chosen series does not converge.
CoeffResult compute_coefficient(const RingConfig& config, Method method, const SeriesPolicy& policy = {});

// Static value Q_{m-1/2}(omega) / (pi sqrt(rR)).
cplx static_coefficient(const RingConfig& config);

}  // namespace ringhelm
