#include "valentkit/remez.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "valentkit/error.hpp"

namespace valentkit {

double remez_constant(double cartan, int d, double alpha)
{
    if (!(cartan > 0.0))
        throw DomainError("remez constant: Cartan measure is zero (|Z| <= d), the bound is infinite");
    // log form keeps large d / small alpha from overflowing prematurely
    return std::exp(d * (std::log(6.0) + 1.0 / alpha - std::log(cartan)));
}

double fixed_alpha_bound(const PointSet &z, int d, double alpha, const CartanOptions &opts)
{
    if (z.distinct().size() <= static_cast<std::size_t>(d))
        throw DomainError("fixed_alpha_bound: need more than d distinct points (otherwise c = 0 and the bound is infinite)");
    return remez_constant(cartan_measure(z, d, alpha, opts).value, d, alpha);
}

KdResult k_d(const PointSet &z, int d, const KdOptions &opts)
{
    if (d < 1)
        throw DomainError("k_d: d must be >= 1");
    if (z.distinct().size() <= static_cast<std::size_t>(d))
        throw DomainError("k_d: need more than d distinct points");
    if (!(opts.alpha_min > 0.0) || !(opts.alpha_max > opts.alpha_min) || opts.grid_per_octave < 1)
        throw DomainError("k_d: invalid alpha range");

    std::optional<CartanCatalog> catalog;
    if (z.distinct().size() <= opts.cartan.exact_limit)
        catalog.emplace(z, d, opts.cartan);
    KdResult out;
    out.value = std::numeric_limits<double>::infinity();
    auto bound = [&](double alpha) {
        const double c = catalog ? catalog->measure(alpha).value : cartan_measure(z, d, alpha, CartanMode::bnb, opts.cartan).value;
        const double b = remez_constant(c, d, alpha);
        out.samples.emplace_back(alpha, b);
        if (b < out.value) {
            out.value = b;
            out.alpha_star = alpha;
        }
        return b;
    };

    const double lo = std::log2(opts.alpha_min);
    const double hi = std::log2(opts.alpha_max);
    const int steps = static_cast<int>(std::ceil((hi - lo) * opts.grid_per_octave));
    std::vector<double> grid;
    for (int i = 0; i <= steps; ++i)
        grid.push_back(std::exp2(std::min(hi, lo + static_cast<double>(i) / opts.grid_per_octave)));
    std::vector<double> vals;
    for (double a : grid)
        vals.push_back(bound(a));
    const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());

    // golden-section in log alpha over the neighbouring grid cells
    double a = std::log(grid[best == 0 ? 0 : best - 1]);
    double b = std::log(grid[std::min(best + 1, grid.size() - 1)]);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = bound(std::exp(x1));
    double f2 = bound(std::exp(x2));
    for (int it = 0; it < opts.golden_iterations; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = bound(std::exp(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = bound(std::exp(x2));
        }
    }
    return out;
}

double k_d_hausdorff(double h_alpha, double alpha, int d)
{
    if (!(h_alpha > 0.0) || !(alpha > 0.0) || d < 0)
        throw DomainError("k_d_hausdorff: need H > 0, alpha > 0, d >= 0");
    return std::pow(6.0 * std::numbers::e / h_alpha, d / alpha);
}

RemezReport remez_check_polynomial(const Polynomial &p, const PointSet &z, double alpha, const CartanOptions &opts)
{
    if (z.empty())
        throw DomainError("remez: empty point set");
    if (!(alpha > 0.0))
        throw DomainError("remez: alpha must be positive");
    for (const Point &x : z.distinct())
        if (std::abs(x) > 1.0 + 1e-12)
            throw DomainError("remez: Z must lie in the closed unit disk");
    RemezReport rep;
    rep.alpha = alpha;
    rep.degree = p.degree();
    if (z.distinct().size() <= static_cast<std::size_t>(rep.degree))
        throw DomainError("remez: need |Z| > deg P");

    const double tol = 1e-10 * std::max(majorant(p, 1.0), std::numeric_limits<double>::min());
    rep.lhs = max_modulus_circle(p, 1.0, tol).upper;
    rep.max_on_z = max_on_set(p, z);
    if (rep.degree > 0) {
        rep.cartan = cartan_measure(z, rep.degree, alpha, opts).value;
        rep.constant_used = remez_constant(rep.cartan, rep.degree, alpha);
    }
    rep.rhs = rep.constant_used * rep.max_on_z;
    rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9);
    rep.margin = rep.lhs > 0.0 ? rep.rhs / rep.lhs : std::numeric_limits<double>::infinity();
    return rep;
}

double sigma_p(double R, double rho, int p)
{
    if (!(R >= 0.0 && R < 1.0) || !(rho >= 0.0 && rho < 1.0))
        throw DomainError("sigma_p: need R, rho in [0, 1)");
    if (p < 1)
        throw DomainError("sigma_p: p must be >= 1");
    return std::pow((1.0 + R) / (1.0 - R) * (1.0 + rho) / (1.0 - rho), 2 * p);
}

AnalyticRemezReport remez_analytic_check(const AnalyticFn &f, int s, int p, const PointSet &z, double R,
                                         const KdOptions &opts)
{
    if (s < 0 || p < 1)
        throw DomainError("remez analytic: need s >= 0 and p >= 1");
    if (z.empty())
        throw DomainError("remez analytic: empty point set");
    for (const Point &x : z.distinct())
        if (!(std::abs(x) < 1.0))
            throw DomainError("remez analytic: Z must lie strictly inside the unit disk");
    if (z.distinct().size() <= static_cast<std::size_t>(s))
        throw DomainError("remez analytic: need |Z| > s");

    AnalyticRemezReport rep;
    rep.s = s;
    rep.p = p;
    rep.R = R;
    rep.rho = z.max_modulus();
    rep.sigma = sigma_p(R, rep.rho, p);
    rep.zero_count = count_zeros(f, 1.0).count;
    if (rep.zero_count != s)
        throw DomainError("remez analytic: f has " + std::to_string(rep.zero_count) + " zeros in the unit disk, not s = " +
                          std::to_string(s));
    if (s > 0) {
        const auto kd = k_d(z, s, opts);
        rep.K_s = kd.value;
        rep.K_alpha_star = kd.alpha_star;
    }

    const Polynomial T = f.truncated();
    const double tail = f.tail_bound();
    const double tol = 1e-10 * std::max(majorant(T, R), std::numeric_limits<double>::min());
    RemezReport &b = rep.base;
    b.degree = s;
    b.lhs = (R > 0.0 ? max_modulus_circle(T, R, tol).upper : std::abs(T(0.0))) + tail;
    b.max_on_z = std::max(0.0, max_on_set(T, z) - tail);
    b.constant_used = rep.sigma * rep.K_s;
    b.alpha = rep.K_alpha_star;
    b.rhs = b.constant_used * b.max_on_z;
    b.holds = b.lhs <= b.rhs * (1.0 + 1e-9);
    b.margin = b.lhs > 0.0 ? b.rhs / b.lhs : std::numeric_limits<double>::infinity();
    return rep;
}

} // namespace valentkit
