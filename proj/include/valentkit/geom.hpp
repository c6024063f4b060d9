#pragma once

#include <complex>
#include <span>
#include <vector>

namespace valentkit {

/// A point of the complex plane. Coordinates are always finite.
using Point = std::complex<double>;

struct Disk {
    Point center{};
    double radius = 0.0;

    /// Membership with an absolute slack (default 1e-9).
    bool contains(Point p, double tol = 1e-9) const { return std::abs(p - center) <= radius + tol; }
};

/// Finite multiset of planar points. Construction rejects non-finite
/// coordinates; `distinct()` is the deduplicated view in first-occurrence
/// order (exact coordinate equality).
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);
    PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

    std::span<const Point> points() const { return points_; }
    std::span<const Point> distinct() const { return distinct_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// max |z| over the set; the radius of the smallest disk about 0 containing it.
    double max_modulus() const;

private:
    std::vector<Point> points_;
    std::vector<Point> distinct_;
};

/// Smallest disk containing all points. Incremental (Welzl-style, iterative)
/// in the given input order, so the result is reproducible bit-for-bit.
Disk min_enclosing_disk(std::span<const Point> pts);
Disk min_enclosing_disk(const PointSet &pts);

/// Smallest disk with both points on its boundary.
Disk disk_from(Point a, Point b);
/// Circumscribed disk of three points; collinear triples fall back to the
/// diameter disk of the farthest pair.
Disk disk_from(Point a, Point b, Point c);

/// Minimum Euclidean distance between distinct points of the set.
double min_pairwise_distance(const PointSet &pts);

} // namespace valentkit
