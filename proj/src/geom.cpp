#include "valentkit/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "valentkit/error.hpp"

namespace valentkit {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points))
{
    for (const Point &p : points_) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
            throw DomainError("point set contains a non-finite coordinate");
        // Quadratic dedup keeps first-occurrence order; sets here are small.
        if (std::find(distinct_.begin(), distinct_.end(), p) == distinct_.end())
            distinct_.push_back(p);
    }
}

double PointSet::max_modulus() const
{
    double m = 0.0;
    for (const Point &p : distinct_)
        m = std::max(m, std::abs(p));
    return m;
}

Disk disk_from(Point a, Point b)
{
    const Point c = 0.5 * (a + b);
    return {c, std::max(std::abs(a - c), std::abs(b - c))};
}

Disk disk_from(Point a, Point b, Point c)
{
    const Point ab = b - a;
    const Point ac = c - a;
    const double cross = ab.real() * ac.imag() - ab.imag() * ac.real();
    const double scale = std::max({std::norm(ab), std::norm(ac), std::norm(c - b)});
    if (std::abs(cross) <= 1e-14 * scale) {
        Disk best = disk_from(a, b);
        for (const Disk &cand : {disk_from(a, c), disk_from(b, c)})
            if (cand.radius > best.radius)
                best = cand;
        return best;
    }
    const double nab = std::norm(ab);
    const double nac = std::norm(ac);
    const double ux = (ac.imag() * nab - ab.imag() * nac) / (2.0 * cross);
    const double uy = (ab.real() * nac - ac.real() * nab) / (2.0 * cross);
    const Point center = a + Point(ux, uy);
    const double r = std::max({std::abs(a - center), std::abs(b - center), std::abs(c - center)});
    return {center, r};
}

namespace {

// Relative slack used for the incremental containment test; large enough to
// absorb rounding in circumcenter computation, far below any tolerance the
// callers care about.
bool inside(const Disk &d, Point p)
{
    const double slack = 1e-13 * std::max(1.0, d.radius + std::abs(d.center));
    return std::abs(p - d.center) <= d.radius + slack;
}

} // namespace

Disk min_enclosing_disk(std::span<const Point> pts)
{
    if (pts.empty())
        throw DomainError("min_enclosing_disk: empty point set");
    Disk d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (inside(d, pts[i]))
            continue;
        d = Disk{pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(d, pts[j]))
                continue;
            d = disk_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (inside(d, pts[k]))
                    continue;
                d = disk_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return d;
}

Disk min_enclosing_disk(const PointSet &pts)
{
    return min_enclosing_disk(pts.distinct());
}

double min_pairwise_distance(const PointSet &pts)
{
    const auto v = pts.distinct();
    if (v.size() < 2)
        throw DomainError("min_pairwise_distance: fewer than 2 distinct points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            best = std::min(best, std::abs(v[i] - v[j]));
    return best;
}

} // namespace valentkit
