#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ringhelm {

using cplx = std::complex<double>;

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Field point on (or numerically indistinguishable from) the ring.
class geometry_error : public domain_error {
public:
    using domain_error::domain_error;
};

// Gamma function or Pochhammer symbol evaluated at a pole.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Method {
    closed_form,     // Horn H3 + Kampe de Feriet
    horn_h3,
    kdf,
    hankel,
    bessel_y,
    bessel_j,
    bessel_jy,       // Y-series + J-series
    legendre_plus,
    legendre_minus,
    legendre,        // U/V recurrences, P-form minus part
    legendre_q,      // plus series + Q-form minus part
    p_series,
    f12,
    angular,
    spectral,
    evanescent,
    static_q,
    automatic,
};

std::string_view to_string(Method m);
// Throws std::invalid_argument on an unknown name.
Method method_from_string(std::string_view name);

struct SeriesPolicy {
    double rel_tol = 1e-13;
    int max_terms = 5000;
    int stagnation_window = 8;

    void validate() const;
};

struct MethodReport {
    cplx value{};
    Method method = Method::automatic;
    int terms_used = 0;
    double est_error = 0.0;
    bool converged = false;
    int working_digits = 16;  // decimal digits of the arithmetic actually used
};

struct CoeffValue {
    cplx total{};
    cplx plus{};
    cplx minus{};
    bool has_split = true;
};

}  // namespace ringhelm
