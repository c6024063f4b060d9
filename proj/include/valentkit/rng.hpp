#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace valentkit {

/// SplitMix64. Used directly (not through <random> distributions) so that
/// seeded streams are identical across standard library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in the closed disk of the given radius about 0.
    std::complex<double> in_disk(double radius)
    {
        const double r = radius * std::sqrt(uniform());
        return std::polar(r, 2.0 * std::numbers::pi * uniform());
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Independent stream for item `index` of a run seeded with `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    SplitMix64 g(master ^ (0x632be59bd9b4e019ULL * (index + 1)));
    g.next();
    return g.next();
}

} // namespace valentkit
