#pragma once

#include <vector>

#include "ringhelm/params.hpp"
#include "ringhelm/types.hpp"

namespace ringhelm {

// All series take the derived parameters and rR = r R. When `terms` is given it
// receives each term's contribution to the returned value, in summation order.

// Full coefficient from the Hankel series; Lambda_+ and Lambda_- from its
// Bessel-Y and Bessel-J parts. Requires gamma != 0.
MethodReport eval_hankel_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {},
                                std::vector<cplx>* terms = nullptr);
MethodReport eval_bessely_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});
MethodReport eval_besselj_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});

struct SplitReport {
    MethodReport total;
    MethodReport plus;
    MethodReport minus;
};

// One pass producing all three Hankel-family results; total = plus + minus termwise.
SplitReport eval_hankel_split(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});

MethodReport eval_legendre_plus_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {},
                                       std::vector<cplx>* terms = nullptr);

enum class MinusForm { p_form, q_form };

MethodReport eval_legendre_minus_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {},
                                        MinusForm form = MinusForm::p_form, std::vector<cplx>* terms = nullptr);

// Unified associated-Legendre P series; plus/minus are its even/odd parts.
SplitReport eval_p_series_split(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});
MethodReport eval_p_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {});

// Lambda_- by rows of 1F2 functions.
MethodReport eval_1f2_series(const Dimensionless& d, double rR, const SeriesPolicy& policy = {},
                             std::vector<cplx>* terms = nullptr);

}  // namespace ringhelm
