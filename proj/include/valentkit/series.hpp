#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace valentkit {

using Complex = std::complex<double>;

/// Truncated power series a_0 + a_1 z + ... + a_K z^K of an analytic
/// function, valid on |z| <= working_radius. When present, `tail_bound`
/// bounds |sum_{k>K} a_k z^k| on that disk.
class TaylorSeries {
public:
    TaylorSeries(std::vector<Complex> coeffs, double working_radius,
                 std::optional<double> tail_bound = std::nullopt);

    const std::vector<Complex> &coeffs() const { return coeffs_; }
    /// Truncation order K (index of the last stored coefficient).
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double working_radius() const { return radius_; }
    std::optional<double> tail_bound() const { return tail_; }

    Complex operator[](int k) const { return k >= 0 && k <= order() ? coeffs_[k] : Complex{}; }

private:
    std::vector<Complex> coeffs_;
    double radius_;
    std::optional<double> tail_;
};

} // namespace valentkit
