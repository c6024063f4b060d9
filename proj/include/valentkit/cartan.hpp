#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "valentkit/geom.hpp"

namespace valentkit {

enum class CartanMode { exact, bnb, heuristic };

const char *to_string(CartanMode m);
CartanMode parse_cartan_mode(const std::string &s);

/// At most d disks covering a point set; `assignment[i]` is the disk holding
/// the i-th point of `PointSet::points()`.
struct Covering {
    std::vector<Disk> disks;
    std::vector<std::size_t> assignment;
};

struct CartanResult {
    double value = 0.0;
    double alpha = 1.0;
    int d = 1;
    Covering covering;
    CartanMode mode = CartanMode::exact;
    bool exact = true; ///< false only for the heuristic upper bound
};

struct CartanOptions {
    /// Largest number of distinct points accepted in exact (exhaustive) mode.
    std::size_t exact_limit = 10;
    std::uint64_t seed = 0x5eed'ca27'a11dULL;
    int heuristic_restarts = 8;
};

/// (sum_j r_j^alpha)^(1/alpha), summed in ascending order of r.
double lp_norm(std::vector<double> radii, double alpha);

/// (d, alpha)-Cartan measure: the minimum of (sum r_j^alpha)^(1/alpha) over
/// coverings of Z by at most d disks.
///
/// Every cover by <= d disks induces a partition of Z (assign each point to
/// one disk containing it), and replacing each disk by the minimum
/// enclosing disk of its assigned points can only shrink its radius. All
/// solvers therefore search over partitions of the distinct points into at
/// most d clusters with cluster radius = MEB radius.
///
/// exact: exhaustive partition enumeration (|Z| <= exact_limit).
/// bnb: branch-and-bound; branches on the unassigned point farthest from all
///      current cluster centers (ties -> lowest index), pruned by the partial
///      sum of r^alpha.
/// heuristic: Lloyd-style assignment / MEB refit from seeded farthest-point
///      sampling; an upper bound flagged exact = false.
CartanResult cartan_measure(const PointSet &z, int d, double alpha, CartanMode mode,
                            const CartanOptions &opts = {});

/// exact mode when |Z| fits the exhaustive limit, bnb otherwise.
CartanResult cartan_measure(const PointSet &z, int d, double alpha, const CartanOptions &opts = {});

/// All partitions of a small point set into at most d clusters, stored as
/// radius profiles, so c_{d,alpha} can be re-minimised cheaply over many
/// alpha values. Optimum over the catalog equals exact mode.
class CartanCatalog {
public:
    CartanCatalog(const PointSet &z, int d, const CartanOptions &opts = {});

    CartanResult measure(double alpha) const;
    std::size_t partitions() const { return offsets_.size() - 1; }

private:
    PointSet z_;
    int d_;
    std::vector<double> radii_;          // concatenated, each profile sorted ascending
    std::vector<std::size_t> offsets_;   // profile i = radii_[offsets_[i], offsets_[i+1])
    std::vector<std::vector<std::uint8_t>> labels_; // cluster label per distinct point
};

/// Rebuild the covering and value for a labelling of the distinct points.
CartanResult cartan_from_labels(const PointSet &z, int d, double alpha,
                                std::span<const std::uint8_t> labels);

/// One step of M(eps, Z): from `eps` on (until the next step), M = count.
struct CoveringStep {
    double eps;
    int count;
};

/// Right-continuous step function eps -> M(eps, Z).
struct CoveringNumberCurve {
    int initial = 1;                       ///< M for eps below the first breakpoint
    std::vector<CoveringStep> breakpoints; ///< strictly increasing eps, strictly decreasing count

    int at(double eps) const;
    /// M just below breakpoint i.
    int left_limit(std::size_t i) const { return i == 0 ? initial : breakpoints[i - 1].count; }
};

/// Minimal number of radius-eps disks covering Z. Candidate centers are the
/// MEB centers of all 1-, 2- and 3-point subsets with MEB radius <= eps;
/// the resulting set cover is solved exactly by branch-and-bound.
int covering_number(const PointSet &z, double eps);

/// Complete step function of M(eps, Z); candidate breakpoints are the MEB
/// radii of 2- and 3-point subsets.
CoveringNumberCurve covering_curve(const PointSet &z);

/// sup_eps eps * (M(eps,Z) - d), clamped at 0. Evaluated with left limits at
/// the breakpoints.
double omega_d(const PointSet &z, int d);
double omega_d(const CoveringNumberCurve &curve, int d);
/// sup_eps eps * (M(eps,Z) - d)^(1/2), clamped at 0.
double omega_cd(const PointSet &z, int d);
double omega_cd(const CoveringNumberCurve &curve, int d);
/// Smallest eps with M(eps, Z) <= d (the optimal d-center radius).
double d_center_radius(const CoveringNumberCurve &curve, int d);
/// d * d_center_radius.
double rho_d(const PointSet &z, int d);

} // namespace valentkit
