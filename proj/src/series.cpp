#include "valentkit/series.hpp"

#include <cmath>

#include "valentkit/error.hpp"

namespace valentkit {

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs, double working_radius,
                           std::optional<double> tail_bound)
    : coeffs_(std::move(coeffs)), radius_(working_radius), tail_(tail_bound)
{
    if (coeffs_.size() < 2)
        throw DomainError("TaylorSeries: need at least two coefficients (K >= 1)");
    if (!(radius_ > 0.0) || !std::isfinite(radius_))
        throw DomainError("TaylorSeries: working radius must be positive and finite");
    if (tail_ && (!(*tail_ >= 0.0) || !std::isfinite(*tail_)))
        throw DomainError("TaylorSeries: tail bound must be finite and >= 0");
    for (const Complex &a : coeffs_)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw DomainError("TaylorSeries: non-finite coefficient");
}

} // namespace valentkit
