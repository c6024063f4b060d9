#include "valentkit/paired.hpp"

#include <cmath>
#include <numbers>

#include "valentkit/error.hpp"
#include "valentkit/remez.hpp"

namespace valentkit {

PairedGeometry paired_couples(int d, double h, double eta, double D_target)
{
    if (d < 2)
        throw DomainError("paired example: need d >= 2");
    if (!(h > 0.0) || !(eta > 0.0))
        throw DomainError("paired example: need h > 0 and eta > 0");
    if (eta < 10.0 * h)
        throw DomainError("paired example: need eta >= 10 h");
    const double s = std::sin(std::numbers::pi / d);
    const double minimal = eta / s + 2.0 * h;
    const double D = D_target > 0.0 ? D_target : minimal;
    if (D < minimal * (1.0 - 1e-12))
        throw DomainError("paired example: D_target too small for 2 eta separated couples (minimum " +
                          std::to_string(minimal) + ")");
    if (D > 1.0)
        throw DomainError("paired example: D_target must be <= 1 so that Z lies in the unit disk");

    PairedGeometry g{d, h, eta, D, {}};
    const double center_radius = D - h;
    std::vector<Point> pts;
    for (int i = 0; i < d; ++i) {
        const Point u = std::polar(1.0, 2.0 * std::numbers::pi * i / d);
        pts.push_back((center_radius - h) * u);
        pts.push_back((center_radius + h) * u);
    }
    g.points = PointSet(std::move(pts));
    g.D = min_enclosing_disk(g.points).radius;
    return g;
}

namespace {

struct ClosedBounds {
    double alpha1, kappa, log_form;
};

ClosedBounds closed_bounds(int d, double h, double eta, double D)
{
    const double kappa = std::log(d) / std::log(D / h);
    const double ln_d = std::log(static_cast<double>(d));
    return {std::pow(6.0 * std::numbers::e / (d * h), d), std::pow(6.0 * std::exp(1.0 / kappa) / eta, d),
            std::pow(6.0 * D / (std::pow(eta, ln_d) * h), d / ln_d)};
}

} // namespace

PairedReport paired_example_report(int d, double h, double eta, double D_target)
{
    PairedReport rep;
    rep.geometry = paired_couples(d, h, eta, D_target);
    const PairedGeometry &g = rep.geometry;
    const double tol = 1e-9;

    rep.kappa = std::log(static_cast<double>(d)) / std::log(g.D / h);
    const auto curve = covering_curve(g.points);
    rep.omega_d = omega_d(curve, d);
    rep.omega_cd = omega_cd(curve, d);
    rep.omega_d_closed = d * h;
    rep.omega_cd_closed = std::sqrt(static_cast<double>(d)) * h;
    rep.omega_ok = std::abs(rep.omega_d - rep.omega_d_closed) <= tol && std::abs(rep.omega_cd - rep.omega_cd_closed) <= tol;

    const CartanCatalog catalog(g.points, d);
    rep.upper_ok = true;
    for (double alpha : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, rep.kappa}) {
        PairedAlphaRow row;
        row.alpha = alpha;
        row.cartan = catalog.measure(alpha).value;
        row.closed_upper = std::pow(static_cast<double>(d), 1.0 / alpha) * h;
        row.within_upper = row.cartan <= row.closed_upper + tol;
        rep.upper_ok = rep.upper_ok && row.within_upper;
        rep.rows.push_back(row);
    }
    rep.equality_error = std::abs(catalog.measure(rep.equality_alpha).value -
                                  std::pow(static_cast<double>(d), 1.0 / rep.equality_alpha) * h);
    rep.equality_ok = rep.equality_error <= tol;
    rep.cartan_kappa = catalog.measure(rep.kappa).value;
    rep.kappa_ok = rep.cartan_kappa >= eta;

    const auto b = closed_bounds(d, h, eta, g.D);
    rep.bound_alpha1 = b.alpha1;
    rep.bound_kappa = b.kappa;
    rep.bound_kappa_log_form = b.log_form;
    const auto kd = k_d(g.points, d);
    rep.k_d = kd.value;
    rep.k_d_alpha_star = kd.alpha_star;
    rep.k_d_ok = rep.k_d <= std::min(rep.bound_alpha1, rep.bound_kappa) * (1.0 + 1e-12);

    rep.pass = rep.omega_ok && rep.upper_ok && rep.equality_ok && rep.kappa_ok && rep.k_d_ok;
    return rep;
}

std::vector<PairedSweepRow> paired_bound_sweep(int d, double eta, const std::vector<double> &hs, double D_target)
{
    std::vector<PairedSweepRow> rows;
    for (double h : hs) {
        const auto g = paired_couples(d, h, eta, D_target);
        const auto b = closed_bounds(d, h, eta, g.D);
        rows.push_back({h, b.alpha1, b.kappa, b.log_form});
    }
    return rows;
}

} // namespace valentkit
