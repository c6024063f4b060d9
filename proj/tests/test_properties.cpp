#include <doctest.h>

#include "oracles.hpp"
#include "valentkit/cartan.hpp"
#include "valentkit/io.hpp"
#include "valentkit/remez.hpp"
#include "valentkit/taylor.hpp"

using namespace valentkit;

TEST_CASE("alpha sandwich")
{
    SplitMix64 g(81);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(g.below(7));
        const int d = 1 + static_cast<int>(g.below(3));
        const PointSet z(oracle::random_points(g, n));
        const CartanCatalog cat(z, d);
        double b = std::exp(g.uniform(-2.5, 1.5));
        double a = b * std::exp(g.uniform(0.01, 2.0));
        const double ca = cat.measure(a).value, cb = cat.measure(b).value;
        CHECK(ca <= cb + 1e-9);
        CHECK(cb <= std::pow(d, 1 / b - 1 / a) * ca + 1e-9);
    }
}

TEST_CASE("omega_cd / 2 <= c_2 <= c_1 <= rho_d")
{
    SplitMix64 g(82);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(g.below(7));
        const int d = 1 + static_cast<int>(g.below(3));
        const PointSet z(oracle::random_points(g, n));
        const auto curve = covering_curve(z);
        const double c2 = cartan_measure(z, d, 2.0).value, c1 = cartan_measure(z, d, 1.0).value;
        CHECK(omega_cd(curve, d) / 2 <= c2 + 1e-9);
        CHECK(c2 <= c1 + 1e-9);
        CHECK(c1 <= d * d_center_radius(curve, d) + 1e-9);
    }
}

TEST_CASE("d-points threshold and half the minimal distance")
{
    SplitMix64 g(83);
    for (int t = 0; t < 100; ++t) {
        const int n = 1 + static_cast<int>(g.below(8));
        const int d = 1 + static_cast<int>(g.below(4));
        const PointSet z(oracle::random_points(g, n));
        const double alpha = std::exp(g.uniform(-2, 2));
        const double c = cartan_measure(z, d, alpha).value;
        CHECK((c > 0) == (n > d));
        if (n > d)
            CHECK(c >= min_pairwise_distance(z) / 2 - 1e-9);
    }
}

TEST_CASE("monotone in Z")
{
    SplitMix64 g(84);
    for (int t = 0; t < 100; ++t) {
        auto pts = oracle::random_points(g, 2 + static_cast<int>(g.below(6)));
        const int d = 1 + static_cast<int>(g.below(3));
        const double alpha = std::exp(g.uniform(-1.5, 1.5));
        const double small = cartan_measure(PointSet(pts), d, alpha).value;
        pts.push_back(g.in_disk(1.0));
        CHECK(small <= cartan_measure(PointSet(pts), d, alpha).value + 1e-9);
    }
}

TEST_CASE("measure bound on a discretised disk")
{
    for (double r : {0.3, 0.8})
        for (int d : {1, 2}) {
            const double h = r / 3;
            std::vector<Point> pts;
            for (int i = -3; i <= 3; ++i)
                for (int j = -3; j <= 3; ++j)
                    if (std::hypot(i * h, j * h) <= r + 1e-12)
                        pts.emplace_back(i * h, j * h);
            const double area = pts.size() * h * h; // union of grid cells
            // each disk grown by h/sqrt(2) covers its cells
            const double c2 = cartan_measure(PointSet(pts), d, 2.0, CartanMode::bnb).value;
            CHECK(c2 + std::sqrt(d / 2.0) * h >= std::sqrt(area / M_PI) * (1 - 1e-9));
        }
}

TEST_CASE("interval formula on refining samplings")
{
    // Splitting [a,b] into d equal pieces gives d^{1/alpha-1}(b-a)/2, which wins
    // for alpha >= 1; for alpha <= 1 a single disk of radius (b-a)/2 is optimal.
    const double a = -0.4, b = 0.7, L = b - a;
    for (int d : {2, 3})
        for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
            const double limit = alpha >= 1 ? std::pow(d, 1 / alpha - 1) * L / 2 : L / 2;
            double prev_err = 1e300;
            for (int n : {4, 7, 10}) {
                std::vector<Point> pts;
                for (int i = 0; i < n; ++i)
                    pts.emplace_back(a + L * i / (n - 1), 0.0);
                const double c = cartan_measure(PointSet(pts), d, alpha).value;
                const double err = std::abs(c - limit);
                CHECK(err <= L / (n - 1) * d);
                CHECK(err <= prev_err + 1e-12);
                prev_err = err;
            }
        }
}

TEST_CASE("Remez inequality on random instances")
{
    SplitMix64 g(85);
    for (int t = 0; t < 40; ++t) {
        const int deg = static_cast<int>(g.below(4));
        std::vector<Complex> c;
        for (int k = 0; k <= deg; ++k)
            c.push_back(g.in_disk(1.0));
        c.back() += 0.5;
        const PointSet z(oracle::random_points(g, 8));
        const auto rep = remez_check_polynomial(Polynomial(c), z, std::exp(g.uniform(-1, 1)));
        CHECK(rep.holds);
        CHECK(rep.margin >= 1.0);
    }
}

TEST_CASE("truncation and f - P share the high profile")
{
    SplitMix64 g(86);
    for (int t = 0; t < 20; ++t) {
        std::vector<Complex> c;
        for (int k = 0; k <= 25; ++k)
            c.push_back(g.in_disk(1.0));
        const TaylorSeries f(c, 1.0);
        const int s = static_cast<int>(g.below(5));
        std::vector<Complex> pc;
        for (int k = 0; k <= s; ++k)
            pc.push_back(g.in_disk(1.0));
        std::vector<Complex> diff = c;
        for (int k = 0; k <= s; ++k)
            diff[k] -= pc[k];
        const TaylorSeries fm(diff, 1.0);
        const auto hat = lower_truncation(f, s);
        for (int k = s + 1; k <= 25; ++k)
            CHECK(fm[k] == hat[k - s]);
    }
}

TEST_CASE("json round trips")
{
    SplitMix64 g(87);
    const PointSet z(oracle::random_points(g, 9));
    const PointSet back = points_from_json(json{{"points", to_json(z)["points"]}});
    CHECK(std::equal(z.points().begin(), z.points().end(), back.points().begin()));

    std::vector<Complex> c;
    for (int k = 0; k < 7; ++k)
        c.push_back(g.in_disk(1.0));
    CHECK(polynomial_from_json(to_json(Polynomial(c))).coeffs() == Polynomial(c).coeffs());
    const TaylorSeries f(c, 0.7, 1e-3);
    const auto f2 = series_from_json(to_json(f));
    CHECK(f2.coeffs() == f.coeffs());
    CHECK(f2.working_radius() == 0.7);
    CHECK(*f2.tail_bound() == 1e-3);
}
