#pragma once

#include <vector>

#include "valentkit/cartan.hpp"

namespace valentkit {

/// d couples of points 2h apart, couples at least 2 eta apart. Couple
/// centers sit on a circle of radius D - h with each couple oriented
/// radially, so the smallest enclosing disk has radius D. `D_target <= 0`
/// selects the smallest D for which adjacent couples are exactly 2 eta apart.
struct PairedGeometry {
    int d = 3;
    double h = 0.01;
    double eta = 0.2;
    double D = 0.0; ///< radius of the smallest enclosing disk
    PointSet points;
};

PairedGeometry paired_couples(int d, double h, double eta, double D_target = 0.0);

struct PairedAlphaRow {
    double alpha = 1.0;
    double cartan = 0.0;
    double closed_upper = 0.0; ///< d^{1/alpha} h
    bool within_upper = false;
};

struct PairedReport {
    PairedGeometry geometry;
    double kappa = 0.0;           ///< 1 / log_d(D / h)
    double omega_d = 0.0;
    double omega_d_closed = 0.0;  ///< d h
    double omega_cd = 0.0;
    double omega_cd_closed = 0.0; ///< sqrt(d) h
    std::vector<PairedAlphaRow> rows;
    double cartan_kappa = 0.0;
    double equality_alpha = 8.0;
    double equality_error = 0.0;  ///< |c_{d,8} - d^{1/8} h|
    double bound_alpha1 = 0.0;    ///< (6e / (d h))^d
    double bound_kappa = 0.0;     ///< (6 e^{1/kappa} / eta)^d
    double bound_kappa_log_form = 0.0; ///< (6 D / (eta^{ln d} h))^{d / ln d}
    double k_d = 0.0;
    double k_d_alpha_star = 0.0;
    bool omega_ok = false;
    bool upper_ok = false;
    bool equality_ok = false;
    bool kappa_ok = false;
    bool k_d_ok = false;
    bool pass = false;
};

/// Builds Z(d, h) and compares omega_d, omega_cd, c_{d,alpha} (alpha grid
/// plus kappa) and K_d against their closed forms. Tolerance 1e-9 absolute.
PairedReport paired_example_report(int d, double h, double eta, double D_target = 0.0);

struct PairedSweepRow {
    double h = 0.0;
    double bound_alpha1 = 0.0;
    double bound_kappa = 0.0;
    double bound_kappa_log_form = 0.0;
};

/// The two closed-form K_d bounds as h shrinks (geometry rebuilt per h).
std::vector<PairedSweepRow> paired_bound_sweep(int d, double eta, const std::vector<double> &hs, double D_target = 0.0);

} // namespace valentkit
