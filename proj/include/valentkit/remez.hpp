#pragma once

#include <utility>
#include <vector>

#include "valentkit/cartan.hpp"
#include "valentkit/poly.hpp"
#include "valentkit/valency.hpp"

namespace valentkit {

/// (6 e^{1/alpha} / c)^d for a given Cartan measure c > 0.
double remez_constant(double cartan, int d, double alpha);

/// (6 e^{1/alpha} / c_{d,alpha}(Z))^d; requires |Z| > d so that c > 0.
double fixed_alpha_bound(const PointSet &z, int d, double alpha, const CartanOptions &opts = {});

struct KdOptions {
    double alpha_min = 1.0 / 64.0;
    double alpha_max = 64.0;
    int grid_per_octave = 4;
    int golden_iterations = 40;
    CartanOptions cartan{};
};

struct KdResult {
    double value = 0.0;
    double alpha_star = 1.0;
    std::vector<std::pair<double, double>> samples; ///< (alpha, bound) in evaluation order
};

/// inf_alpha (6 e^{1/alpha} / c_{d,alpha}(Z))^d over a log-spaced alpha grid,
/// refined by golden-section search (in log alpha) around the grid minimum.
/// c_{d,alpha} is re-solved per alpha; small sets reuse one partition catalog.
KdResult k_d(const PointSet &z, int d, const KdOptions &opts = {});

/// (6e / H_alpha)^{d/alpha} for a caller-supplied Hausdorff content.
double k_d_hausdorff(double h_alpha, double alpha, int d);

struct RemezReport {
    double lhs = 0.0;            ///< max over the disk (certified upper bound)
    double rhs = 0.0;            ///< constant_used * max over Z
    double constant_used = 1.0;
    double alpha = 1.0;
    double max_on_z = 0.0;
    double cartan = 0.0;         ///< c_{d,alpha}(Z) (polynomial check)
    int degree = 0;
    bool holds = false;
    double margin = 0.0;         ///< rhs / lhs
};

/// max_{|z|<=1} |P| <= (6 e^{1/alpha} / c_{d,alpha}(Z))^d max_Z |P|, d = deg P.
RemezReport remez_check_polynomial(const Polynomial &p, const PointSet &z, double alpha,
                                   const CartanOptions &opts = {});

/// ((1+R)/(1-R) * (1+rho)/(1-rho))^{2p}
double sigma_p(double R, double rho, int p);

struct AnalyticRemezReport {
    RemezReport base;            ///< lhs/rhs/holds/margin; constant_used = sigma * K_s
    int s = 0;
    int p = 0;
    double R = 0.0;
    double rho = 0.0;
    double sigma = 0.0;
    double K_s = 1.0;
    double K_alpha_star = 1.0;
    int zero_count = 0;
};

/// max_{D_R} |f| <= sigma_p(R, rho) K_s(Z) max_Z |f| with rho = max |z| over Z.
/// f must have exactly s zeros in the unit disk (certified on |z| = 1).
AnalyticRemezReport remez_analytic_check(const AnalyticFn &f, int s, int p, const PointSet &z, double R,
                                         const KdOptions &opts = {});

} // namespace valentkit
