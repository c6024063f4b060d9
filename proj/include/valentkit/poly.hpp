#pragma once

#include <complex>
#include <span>
#include <vector>

#include "valentkit/geom.hpp"
#include "valentkit/series.hpp"

namespace valentkit {

/// Complex polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs) : Polynomial(std::vector<Complex>(coeffs)) {}

    static Polynomial monomial(int k, Complex c = 1.0);

    const std::vector<Complex> &coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; 0 for constants and for the zero polynomial.
    int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
    Complex operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Complex{}; }
    /// Lowest index with a nonzero coefficient (order of vanishing at 0).
    int valuation() const;

    Complex operator()(Complex z) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Complex s, const Polynomial &a);

private:
    std::vector<Complex> c_;
};

/// Leading coefficient and root list: A * prod (z - x_j).
struct RootForm {
    Complex leading = 1.0;
    std::vector<Complex> roots;
};

/// Horner evaluation.
Complex eval(const Polynomial &p, Complex z);
Polynomial from_roots(const RootForm &rf);

/// sum_k |a_k| r^k, a bound for max_{|z|<=r} |P(z)|.
double majorant(const Polynomial &p, double r);
/// sum_k k |a_k| r^(k-1), a bound for max_{|z|<=r} |P'(z)|.
double derivative_bound(const Polynomial &p, double r);

struct MaxModulus {
    double value = 0.0;   ///< best sampled |P| on the circle (a lower bound)
    double upper = 0.0;   ///< certified upper bound on the true maximum
    Complex argmax{};
    bool certified = false; ///< upper - value <= tol
};

/// Maximum of |P| over |z| = r, which by the maximum-modulus principle is
/// also the maximum over the closed disk. Arcs are refined best-first; each
/// arc's bound is a first- or second-order expansion about the midpoint m
/// (whichever is smaller) plus M2 h^2 / 2, with h the half arc length and M2
/// the coefficient bound on |P''|.
MaxModulus max_modulus_circle(const Polynomial &p, double r, double tol,
                              std::size_t max_evaluations = 4'000'000);

/// Exact max of |P| over the distinct points of Z.
double max_on_set(const Polynomial &p, const PointSet &z);

/// Synthetic division by prod (z - x_j), top-down per root.
struct Deflation {
    Polynomial quotient;
    Polynomial remainder;
};
Deflation deflate(const Polynomial &p, std::span<const Complex> roots);

/// First K+1 Taylor coefficients of f / P by power-series long division.
/// Coefficients of f beyond its truncation order are taken as zero. The
/// quotient must be regular at 0: P's valuation may not exceed f's.
TaylorSeries series_divide(const TaylorSeries &f, const Polynomial &p, int K);

/// Coefficients of a TaylorSeries as a polynomial (truncation).
Polynomial truncate(const TaylorSeries &f);

} // namespace valentkit
