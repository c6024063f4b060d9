#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "valentkit/poly.hpp"
#include "valentkit/series.hpp"

namespace valentkit {

/// An analytic function given exactly (polynomial) or as a truncated series
/// with a tail bound on its working radius.
class AnalyticFn {
public:
    AnalyticFn(Polynomial p) : rep_(std::move(p)) {}
    AnalyticFn(TaylorSeries f) : rep_(std::move(f)) {}

    bool is_polynomial() const { return std::holds_alternative<Polynomial>(rep_); }
    const Polynomial *polynomial() const { return std::get_if<Polynomial>(&rep_); }
    const TaylorSeries *series() const { return std::get_if<TaylorSeries>(&rep_); }

    /// The polynomial itself, or the series truncated at its order.
    Polynomial truncated() const;
    /// 0 for polynomials; the series tail bound (throws if absent).
    double tail_bound() const;
    /// Largest circle radius on which counting/max evaluation is allowed:
    /// unbounded for polynomials, 0.95 * working radius for series.
    std::optional<double> max_radius() const;
    Complex coeff(int k) const;

    /// f - P, keeping the representation (and tail bound) of f.
    AnalyticFn minus(const Polynomial &p) const;

private:
    std::variant<Polynomial, TaylorSeries> rep_;
};

struct ZeroCount {
    int count = 0;
    double circle_radius = 0.0;
    double min_modulus = 0.0; ///< min |f| over the samples (truncated part)
    double winding = 0.0;     ///< unrounded argument increment / 2 pi
    std::size_t samples = 0;
    bool certified = false;
};

/// Zeros of f inside |z| < r by continuous argument tracking along the
/// circle. A step [z_a, z_b] of length len is accepted only if the drift
/// bound on |f(z) - f(z_a)| along it (global Lipschitz bound, or the cubic
/// Taylor bound |f'(z_a)| len + |f''(z_a)| len^2 / 2 + M3 len^3 / 6) stays
/// below |f(z_a)| - tail - eval_err, which keeps the image of the arc inside
/// a disk missing 0, and if the argument change is below pi/4; failing steps
/// are bisected. Throws CertificationError when a step cannot be certified
/// before the arc shrinks to ~1e-13 of the circle or the sample budget runs out.
ZeroCount count_zeros(const AnalyticFn &f, double r);

struct ProbeRecord {
    std::string kind;  ///< taylor | taylor+cz^s | taylor+c | random
    int index = 0;     ///< trial index (random) or grid index (structured)
    Complex c{};       ///< structured shift, 0 otherwise
    int count = -1;    ///< -1 when the counting circle failed certification
};

struct ValencyProbe {
    int s = 0;
    double R = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double coeff_bound = 1.0;
    int max_count = 0;
    Polynomial witness;
    std::string witness_kind;
    int probes = 0;  ///< certified probes
    int skipped = 0; ///< probes whose circle failed certification
    std::vector<ProbeRecord> detail;
};

/// Empirical lower bound on p for (s,p)-valency on D_R: the largest zero
/// count of f - P over
///   - the Taylor polynomial T_s of f,
///   - T_s + c z^s and T_s + c over a log-spaced grid of |c| (phases 1, i),
///   - `trials` random P of degree <= s, coefficients uniform in the disk of
///     radius coeff_bound, trial i seeded by derive_seed(seed, i).
/// The witness is the first probe (structured first, then by trial index)
/// attaining the maximum.
ValencyProbe valency_probe(const AnalyticFn &f, int s, double R, int trials, double coeff_bound,
                           std::uint64_t seed);

struct ExaRow {
    int s = 0;
    int max_count = 0;
    int expected = 0;   ///< bound p for s < p, exact N for s = p
    int probes = 0;
    int skipped = 0;
    int structured_count = -1; ///< s = p only: count for P = x^p + c
    bool pass = false;
};

struct ExaReport {
    int p = 0;
    int N = 0;
    double R = 1.0 / 3.0;
    std::vector<ExaRow> rows;
    bool pass = false;
};

/// f = x^p + x^N on D_{1/3}: (s,p)-valent for s < p, and the structured
/// probe P = x^p + c gives N zeros. Requires N >= 10p + 1, p <= 5, N <= 63.
ExaReport example_exa_report(int p, int N, int trials = 200, std::uint64_t seed = 42);

/// Radial sampling grid: the origin plus `angles` x `radii` points on
/// circles of radius rmax * i / radii, i = 1..radii.
struct RadialGrid {
    int angles = 24;
    int radii = 12;
    double rmax = 0.9;
};
/// "radial:24x12" or "radial:24x12:0.9".
RadialGrid parse_grid(const std::string &spec);

struct DistortionPoint {
    Complex x{};
    double g_abs = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct DistortionReport {
    int s = 0;
    int p = 0;
    Complex leading{};        ///< A with (f / (A prod (x - x_j)))(0) = 1
    double cert_radius = 0.0;
    int cert_count = 0;
    Complex g0{};             ///< g(0), 1 up to rounding
    double deflation_residual = 0.0;
    double min_margin = 0.0;  ///< min over the grid of min(|g|/lower, upper/|g|)
    DistortionPoint worst;
    std::size_t points = 0;
    std::vector<DistortionPoint> violations;
    bool holds = false;
};

/// Checks ((1-|x|)/(1+|x|))^{2p} <= |g(x)| <= ((1+|x|)/(1-|x|))^{2p} for
/// g = f / P, P = A prod (x - x_j), normalised so g(0) = 1. The claimed zeros
/// are cross-checked against a certified zero count first.
DistortionReport distortion_check(const AnalyticFn &f, std::span<const Complex> zeros, int p,
                                  const RadialGrid &grid = {});

struct CounterexampleReport {
    int p = 0;
    int N = 0;
    double c = 0.0;
    int count = 0; ///< solutions of 1 + x^{N-p} = c in D_{1/3}
    bool not_p_valent = false;
};

/// g = (x^p + x^N) / x^p = 1 + x^{N-p}; the equation g = c with c = 1 - delta
/// has N - p solutions in D_{1/3}. delta <= 0 picks 0.1 * 3^{-(N-p)}.
CounterexampleReport distortion_counterexample(int p, int N, double delta = 0.0);

} // namespace valentkit
