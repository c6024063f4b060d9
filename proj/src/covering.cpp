#include <algorithm>
#include <bit>
#include <cmath>

#include "valentkit/cartan.hpp"
#include "valentkit/error.hpp"

namespace valentkit {

namespace {

using Mask = std::uint64_t;

// Covering test at a fixed radius. The relative slack makes M(eps)
// right-continuous at breakpoints computed in floating point.
bool covers(Point center, Point p, double eps)
{
    return std::abs(p - center) <= eps * (1.0 + 1e-12) + 1e-300;
}

// Maximal coverable subsets for radius eps: masks of the points within eps of
// each canonical candidate center, with masks dominated by another removed.
std::vector<Mask> candidate_masks(std::span<const Point> pts, double eps)
{
    const std::size_t n = pts.size();
    std::vector<Point> centers(pts.begin(), pts.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Disk dij = disk_from(pts[i], pts[j]);
            if (dij.radius <= eps * (1.0 + 1e-12))
                centers.push_back(dij.center);
            for (std::size_t k = j + 1; k < n; ++k) {
                const Point tri[3] = {pts[i], pts[j], pts[k]};
                const Disk dijk = min_enclosing_disk(tri);
                if (dijk.radius <= eps * (1.0 + 1e-12))
                    centers.push_back(dijk.center);
            }
        }
    std::vector<Mask> masks;
    masks.reserve(centers.size());
    for (const Point &c : centers) {
        Mask m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (covers(c, pts[i], eps))
                m |= Mask{1} << i;
        if (m != 0)
            masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    // drop masks strictly contained in another
    std::vector<Mask> maximal;
    for (Mask m : masks) {
        const bool dominated = std::any_of(masks.begin(), masks.end(), [m](Mask o) { return o != m && (m & o) == m; });
        if (!dominated)
            maximal.push_back(m);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b; });
    return maximal;
}

class SetCover {
public:
    SetCover(std::vector<Mask> sets, Mask universe) : sets_(std::move(sets)), universe_(universe)
    {
        for (Mask s : sets_)
            largest_ = std::max(largest_, std::popcount(s));
    }

    int solve()
    {
        best_ = greedy();
        recurse(0, 0);
        return best_;
    }

private:
    int greedy() const
    {
        Mask covered = 0;
        int count = 0;
        while (covered != universe_) {
            Mask pick = 0;
            int gain = -1;
            for (Mask s : sets_) {
                const int g = std::popcount(s & ~covered);
                if (g > gain) {
                    gain = g;
                    pick = s;
                }
            }
            covered |= pick;
            ++count;
        }
        return count;
    }

    void recurse(Mask covered, int used)
    {
        if (covered == universe_) {
            best_ = std::min(best_, used);
            return;
        }
        const int left = std::popcount(universe_ & ~covered);
        if (used + (left + largest_ - 1) / largest_ >= best_)
            return;
        // Branch on the lowest uncovered point: some chosen set must contain it.
        const Mask low = (universe_ & ~covered) & (~(universe_ & ~covered) + 1);
        for (Mask s : sets_)
            if (s & low)
                recurse(covered | s, used + 1);
    }

    std::vector<Mask> sets_;
    Mask universe_;
    int largest_ = 1;
    int best_ = 0;
};

int cover_count(std::span<const Point> pts, double eps)
{
    const std::size_t n = pts.size();
    const Mask universe = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    return SetCover(candidate_masks(pts, eps), universe).solve();
}

void check_points(const PointSet &z)
{
    if (z.empty())
        throw DomainError("covering: empty point set");
    if (z.distinct().size() > 64)
        throw DomainError("covering: at most 64 distinct points are supported");
}

} // namespace

int CoveringNumberCurve::at(double eps) const
{
    int m = initial;
    for (const CoveringStep &b : breakpoints) {
        if (b.eps > eps)
            break;
        m = b.count;
    }
    return m;
}

int covering_number(const PointSet &z, double eps)
{
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw DomainError("covering_number: eps must be positive and finite");
    check_points(z);
    return cover_count(z.distinct(), eps);
}

CoveringNumberCurve covering_curve(const PointSet &z)
{
    check_points(z);
    const auto pts = z.distinct();
    const std::size_t n = pts.size();
    CoveringNumberCurve curve;
    curve.initial = static_cast<int>(n);
    if (n == 1)
        return curve;

    std::vector<double> cand;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            cand.push_back(disk_from(pts[i], pts[j]).radius);
            for (std::size_t k = j + 1; k < n; ++k) {
                const Point tri[3] = {pts[i], pts[j], pts[k]};
                cand.push_back(min_enclosing_disk(tri).radius);
            }
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    const double whole = min_enclosing_disk(pts).radius;
    int current = curve.initial;
    for (double eps : cand) {
        if (eps <= 0.0)
            continue;
        const int m = cover_count(pts, eps);
        if (m < current) {
            curve.breakpoints.push_back({eps, m});
            current = m;
        }
        if (current == 1 || eps >= whole)
            break;
    }
    return curve;
}

namespace {

template <typename Gain>
double omega_sup(const CoveringNumberCurve &curve, int d, Gain gain)
{
    if (d <= 0)
        throw DomainError("omega: d must be positive");
    double best = 0.0;
    for (std::size_t i = 0; i < curve.breakpoints.size(); ++i) {
        const int excess = curve.left_limit(i) - d;
        if (excess > 0)
            best = std::max(best, curve.breakpoints[i].eps * gain(excess));
    }
    return best;
}

} // namespace

double omega_d(const CoveringNumberCurve &curve, int d)
{
    return omega_sup(curve, d, [](int x) { return static_cast<double>(x); });
}

double omega_cd(const CoveringNumberCurve &curve, int d)
{
    return omega_sup(curve, d, [](int x) { return std::sqrt(static_cast<double>(x)); });
}

double omega_d(const PointSet &z, int d) { return omega_d(covering_curve(z), d); }

double omega_cd(const PointSet &z, int d) { return omega_cd(covering_curve(z), d); }

double d_center_radius(const CoveringNumberCurve &curve, int d)
{
    if (d <= 0)
        throw DomainError("rho_d: d must be positive");
    if (curve.initial <= d)
        return 0.0;
    for (const CoveringStep &b : curve.breakpoints)
        if (b.count <= d)
            return b.eps;
    throw DomainError("rho_d: covering curve never reaches d disks");
}

double rho_d(const PointSet &z, int d) { return d * d_center_radius(covering_curve(z), d); }

} // namespace valentkit
