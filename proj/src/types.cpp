#include "ringhelm/types.hpp"

#include <array>
#include <utility>

namespace ringhelm {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 18> kNames = {{
    {Method::closed_form, "closed_form"},
    {Method::horn_h3, "horn_h3"},
    {Method::kdf, "kdf"},
    {Method::hankel, "hankel"},
    {Method::bessel_y, "bessel_y"},
    {Method::bessel_j, "bessel_j"},
    {Method::bessel_jy, "bessel_jy"},
    {Method::legendre_plus, "legendre_plus"},
    {Method::legendre_minus, "legendre_minus"},
    {Method::legendre, "legendre"},
    {Method::legendre_q, "legendre_q"},
    {Method::p_series, "p_series"},
    {Method::f12, "f12"},
    {Method::angular, "angular"},
    {Method::spectral, "spectral"},
    {Method::evanescent, "evanescent"},
    {Method::static_q, "static"},
    {Method::automatic, "auto"},
}};

}  // namespace

std::string_view to_string(Method m)
{
    for (const auto& [id, name] : kNames)
        if (id == m) return name;
    return "unknown";
}

Method method_from_string(std::string_view name)
{
    for (const auto& [id, n] : kNames)
        if (n == name) return id;
    throw std::invalid_argument("unknown method: " + std::string(name));
}

void SeriesPolicy::validate() const
{
    if (!(rel_tol > 0)) throw std::invalid_argument("rel_tol must be positive");
    if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");
    if (stagnation_window < 2) throw std::invalid_argument("stagnation_window must be >= 2");
}

}  // namespace ringhelm
