#pragma once

// Brute-force references for the test suites. Nothing here calls into the
// library's solvers; only value types and the RNG are shared.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "valentkit/geom.hpp"
#include "valentkit/rng.hpp"

namespace oracle {

using valentkit::Point;
using C = std::complex<double>;

struct Circle {
    Point c;
    double r;
};

inline bool covers(const Circle &k, const std::vector<Point> &pts)
{
    for (Point p : pts)
        if (std::abs(p - k.c) > k.r * (1 + 1e-10) + 1e-12)
            return false;
    return true;
}

// Circumcircle by the determinant formula; nullopt-like radius < 0 if collinear.
inline Circle circumcircle(Point a, Point b, Point c)
{
    const double bx = b.real() - a.real(), by = b.imag() - a.imag();
    const double cx = c.real() - a.real(), cy = c.imag() - a.imag();
    const double den = 2 * (bx * cy - by * cx);
    if (std::abs(den) < 1e-300)
        return {a, -1.0};
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const Point u{(cy * b2 - by * c2) / den, (bx * c2 - cx * b2) / den};
    return {a + u, std::abs(u)};
}

// Smallest disk among all 1-, 2- and 3-point supports that contains everything.
inline Circle meb(const std::vector<Point> &pts)
{
    const std::size_t n = pts.size();
    if (n == 1)
        return {pts[0], 0.0};
    Circle best{{}, std::numeric_limits<double>::infinity()};
    auto consider = [&](Circle k) {
        if (k.r >= 0 && k.r < best.r && covers(k, pts))
            best = k;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            consider({(pts[i] + pts[j]) / 2.0, std::abs(pts[i] - pts[j]) / 2});
            for (std::size_t k = j + 1; k < n; ++k)
                consider(circumcircle(pts[i], pts[j], pts[k]));
        }
    return best;
}

inline std::vector<Point> dedup(const std::vector<Point> &pts)
{
    std::vector<Point> out;
    for (Point p : pts)
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    return out;
}

// c_{d,alpha} by enumerating every labelling in {0..d-1}^n (no symmetry reduction).
inline double cartan(const std::vector<Point> &input, int d, double alpha)
{
    const auto pts = dedup(input);
    const int n = static_cast<int>(pts.size());
    if (n <= d)
        return 0.0;
    std::map<std::uint32_t, double> radius;
    auto r_of = [&](std::uint32_t mask) {
        auto it = radius.find(mask);
        if (it != radius.end())
            return it->second;
        std::vector<Point> sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u)
                sub.push_back(pts[i]);
        return radius[mask] = meb(sub).r;
    };
    std::vector<int> lab(n, 0);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        std::vector<std::uint32_t> masks(d, 0);
        for (int i = 0; i < n; ++i)
            masks[lab[i]] |= 1u << i;
        std::vector<double> rs;
        for (auto m : masks)
            if (m)
                rs.push_back(r_of(m));
        double s = 0;
        for (double r : rs)
            s += std::pow(r, alpha);
        best = std::min(best, std::pow(s, 1 / alpha));
        int i = 0;
        while (i < n && ++lab[i] == d)
            lab[i++] = 0;
        if (i == n)
            break;
    }
    return best;
}

// All MEB radii over nonempty subsets: the only places M(eps, Z) can jump.
inline std::vector<double> subset_radii(const std::vector<Point> &input)
{
    const auto pts = dedup(input);
    const int n = static_cast<int>(pts.size());
    std::vector<double> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Point> sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u)
                sub.push_back(pts[i]);
        out.push_back(meb(sub).r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Covering number with centers restricted to a square grid of spacing h.
// Exact when eps - h/sqrt(2) still lies in the same flat piece of M.
inline int grid_covering(const std::vector<Point> &input, double eps, double h)
{
    const auto pts = dedup(input);
    const int n = static_cast<int>(pts.size());
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (Point p : pts) {
        x0 = std::min(x0, p.real()), x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag()), y1 = std::max(y1, p.imag());
    }
    std::vector<char> seen(1u << n, 0);
    for (double x = x0 - eps; x <= x1 + eps; x += h)
        for (double y = y0 - eps; y <= y1 + eps; y += h) {
            std::uint32_t m = 0;
            for (int i = 0; i < n; ++i)
                if (std::abs(pts[i] - Point{x, y}) <= eps)
                    m |= 1u << i;
            seen[m] = 1;
        }
    // min number of grid disks whose masks union to everything (BFS over masks)
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> sets;
    for (std::uint32_t m = 1; m <= full; ++m)
        if (seen[m])
            sets.push_back(m);
    std::vector<int> dist(full + 1, -1);
    dist[0] = 0;
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto u : frontier)
            for (auto s : sets)
                if (dist[u | s] < 0) {
                    dist[u | s] = dist[u] + 1;
                    next.push_back(u | s);
                }
        if (dist[full] >= 0)
            return dist[full];
        frontier.swap(next);
    }
    return -1;
}

inline C naive_eval(const std::vector<C> &a, C z)
{
    C s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += a[k] * std::pow(z, static_cast<int>(k));
    return s;
}

inline std::vector<C> convolve(const std::vector<C> &a, const std::vector<C> &b)
{
    std::vector<C> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

inline double dense_circle_max(const std::vector<C> &a, double r, int samples)
{
    double m = 0;
    for (int i = 0; i < samples; ++i) {
        const C z = std::polar(r, 2 * M_PI * i / samples);
        m = std::max(m, std::abs(naive_eval(a, z)));
    }
    return m;
}

inline std::vector<Point> random_points(valentkit::SplitMix64 &g, int n, double radius = 1.0)
{
    std::vector<Point> z;
    for (int i = 0; i < n; ++i)
        z.push_back(g.in_disk(radius));
    return z;
}

} // namespace oracle
