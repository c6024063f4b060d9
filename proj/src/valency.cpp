#include "valentkit/valency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "valentkit/error.hpp"
#include "valentkit/parallel.hpp"
#include "valentkit/rng.hpp"

namespace valentkit {

Polynomial AnalyticFn::truncated() const
{
    if (const auto *p = polynomial())
        return *p;
    return truncate(*series());
}

double AnalyticFn::tail_bound() const
{
    if (is_polynomial())
        return 0.0;
    const auto t = series()->tail_bound();
    if (!t)
        throw DomainError("series-form function needs a tail_bound for certified evaluation");
    return *t;
}

std::optional<double> AnalyticFn::max_radius() const
{
    if (is_polynomial())
        return std::nullopt;
    return 0.95 * series()->working_radius();
}

Complex AnalyticFn::coeff(int k) const
{
    if (const auto *p = polynomial())
        return (*p)[k];
    return (*series())[k];
}

AnalyticFn AnalyticFn::minus(const Polynomial &p) const
{
    if (const auto *q = polynomial())
        return AnalyticFn(*q - p);
    const TaylorSeries &f = *series();
    if (p.degree() > f.order())
        throw DomainError("cannot subtract a polynomial of degree above the series order");
    std::vector<Complex> c = f.coeffs();
    for (int k = 0; k <= p.degree(); ++k)
        c[k] -= p[k];
    return AnalyticFn(TaylorSeries(std::move(c), f.working_radius(), f.tail_bound()));
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class ArgumentTracker {
public:
    ArgumentTracker(const Polynomial &f, double r, double tail)
        : f_(f), d1_(f.derivative()), d2_(d1_.derivative()), r_(r), tail_(tail),
          lipschitz_(derivative_bound(f, r)), m3_(derivative_bound(d2_, r)),
          eval_err_(rounding(f, r)), d1_err_(rounding(d1_, r)), d2_err_(rounding(d2_, r))
    {
    }

    ZeroCount run()
    {
        const int n0 = std::max(64, 8 * (f_.degree() + 1));
        const double w = kTwoPi / n0;
        Complex first = sample(0.0);
        Complex fa = first;
        for (int i = 0; i < n0; ++i) {
            const double tb = (i + 1) * w;
            const Complex fb = i + 1 == n0 ? first : sample(tb);
            step(i * w, fa, tb, fb, 0);
            fa = fb;
        }
        ZeroCount out;
        out.circle_radius = r_;
        out.winding = total_ / kTwoPi;
        out.count = static_cast<int>(std::lround(out.winding));
        out.min_modulus = min_mod_;
        out.samples = samples_;
        out.certified = std::abs(out.winding - out.count) <= 0.25;
        return out;
    }

private:
    Complex sample(double theta)
    {
        const Complex v = f_(std::polar(r_, theta));
        min_mod_ = std::min(min_mod_, std::abs(v));
        ++samples_;
        return v;
    }

    static double rounding(const Polynomial &p, double r)
    {
        return 4.0 * (p.degree() + 2) * std::numeric_limits<double>::epsilon() * majorant(p, r);
    }

    // Bound on |f(z) - f(z_a)| over the arc of length len starting at z_a:
    // the global Lipschitz bound, or the local cubic Taylor bound about z_a.
    double drift(double ta, double len) const
    {
        const Complex za = std::polar(r_, ta);
        const double b1 = std::abs(d1_(za)) + d1_err_, b2 = std::abs(d2_(za)) + d2_err_;
        const double local = b1 * len + 0.5 * b2 * len * len + m3_ * len * len * len / 6.0;
        return std::min(lipschitz_ * len, local);
    }

    void step(double ta, Complex fa, double tb, Complex fb, int depth)
    {
        const double len = r_ * (tb - ta);
        const double darg = std::arg(fb / fa);
        const double margin = std::abs(fa) - tail_ - 2.0 * eval_err_;
        const bool ok = margin > 0.0 && std::abs(darg) < 0.25 * std::numbers::pi && drift(ta, len) < margin;
        if (ok) {
            total_ += darg;
            return;
        }
        if (depth > 60 || tb - ta < 1e-13 || samples_ > kSampleBudget) {
            const Complex z = std::polar(r_, ta);
            std::ostringstream os;
            os.precision(17);
            os << "circle too close to a zero: |z| = " << r_ << ", sample z = " << z.real()
               << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i, |f| = " << std::abs(fa)
               << ", margin needed " << tail_ + 2.0 * eval_err_;
            throw CertificationError(os.str(), z.real(), z.imag());
        }
        const double tm = 0.5 * (ta + tb);
        const Complex fm = sample(tm);
        step(ta, fa, tm, fm, depth + 1);
        step(tm, fm, tb, fb, depth + 1);
    }

    static constexpr std::size_t kSampleBudget = 2'000'000;

    const Polynomial &f_;
    Polynomial d1_, d2_;
    double r_;
    double tail_;
    double lipschitz_;
    double m3_;
    double eval_err_, d1_err_, d2_err_;
    double total_ = 0.0;
    double min_mod_ = std::numeric_limits<double>::infinity();
    std::size_t samples_ = 0;
};

} // namespace

ZeroCount count_zeros(const AnalyticFn &f, double r)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw DomainError("count_zeros: radius must be positive");
    if (const auto cap = f.max_radius(); cap && r > *cap * (1.0 + 1e-12))
        throw DomainError("count_zeros: series-form circles must satisfy r <= 0.95 * working radius");
    const Polynomial p = f.truncated();
    const double tail = f.tail_bound();
    if (p.is_zero())
        throw CertificationError("circle too close to a zero: function vanishes identically", r, 0.0);
    return ArgumentTracker(p, r, tail).run();
}

ValencyProbe valency_probe(const AnalyticFn &f, int s, double R, int trials, double coeff_bound, std::uint64_t seed)
{
    if (s < 0)
        throw DomainError("valency_probe: s must be >= 0");
    if (trials < 0 || !(coeff_bound >= 0.0))
        throw DomainError("valency_probe: need trials >= 0 and coeff_bound >= 0");
    if (!(R > 0.0))
        throw DomainError("valency_probe: R must be positive");

    ValencyProbe out;
    out.s = s;
    out.R = R;
    out.trials = trials;
    out.seed = seed;
    out.coeff_bound = coeff_bound;

    std::vector<Complex> taylor(static_cast<std::size_t>(s) + 1);
    for (int k = 0; k <= s; ++k)
        taylor[k] = f.coeff(k);
    const Polynomial ts(taylor);

    std::vector<std::pair<ProbeRecord, Polynomial>> probes;
    probes.push_back({ProbeRecord{"taylor", 0, {}, -1}, ts});
    int grid = 0;
    for (int j = 0; j <= 40; ++j) {
        for (const Complex phase : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
            const Complex c = std::pow(10.0, -j) * phase;
            probes.push_back({ProbeRecord{"taylor+cz^s", grid, c, -1}, ts + Polynomial::monomial(s, c)});
            if (s > 0)
                probes.push_back({ProbeRecord{"taylor+c", grid, c, -1}, ts + Polynomial{c}});
            ++grid;
        }
    }
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<Complex> c(static_cast<std::size_t>(s) + 1);
        for (auto &a : c)
            a = rng.in_disk(coeff_bound);
        probes.push_back({ProbeRecord{"random", t, {}, -1}, Polynomial(std::move(c))});
    }

    parallel_for(probes.size(), [&](std::size_t i) {
        try {
            probes[i].first.count = count_zeros(f.minus(probes[i].second), R).count;
        } catch (const CertificationError &) {
            probes[i].first.count = -1;
        }
    });

    out.max_count = -1;
    for (auto &[rec, poly] : probes) {
        if (rec.count < 0) {
            ++out.skipped;
        } else {
            ++out.probes;
            if (rec.count > out.max_count) {
                out.max_count = rec.count;
                out.witness = poly;
                out.witness_kind = rec.kind;
            }
        }
        out.detail.push_back(rec);
    }
    out.max_count = std::max(out.max_count, 0);
    return out;
}

ExaReport example_exa_report(int p, int N, int trials, std::uint64_t seed)
{
    if (p < 1 || p > 5 || N > 63)
        throw DomainError("exa: desk-scale caps are 1 <= p <= 5 and N <= 63");
    if (N < 10 * p + 1)
        throw DomainError("exa: need N >= 10p + 1");
    ExaReport rep;
    rep.p = p;
    rep.N = N;
    const AnalyticFn f(Polynomial::monomial(p) + Polynomial::monomial(N));
    const double coeff_bound = 2.0 * std::pow(rep.R, p);
    rep.pass = true;
    for (int s = 0; s <= p; ++s) {
        const auto probe = valency_probe(f, s, rep.R, trials, coeff_bound, derive_seed(seed, static_cast<std::uint64_t>(s)));
        ExaRow row;
        row.s = s;
        row.max_count = probe.max_count;
        row.probes = probe.probes;
        row.skipped = probe.skipped;
        if (s < p) {
            row.expected = p;
            row.pass = probe.max_count <= p;
        } else {
            // x^N = c with |c| below 3^{-N} has all N roots inside D_{1/3}
            const double c = 0.1 * std::pow(3.0, -N);
            row.expected = N;
            row.structured_count = count_zeros(f.minus(Polynomial::monomial(p) + Polynomial{c}), rep.R).count;
            row.pass = row.structured_count == N && probe.max_count == N;
        }
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

RadialGrid parse_grid(const std::string &spec)
{
    RadialGrid g;
    const std::string prefix = "radial:";
    if (spec.rfind(prefix, 0) != 0)
        throw DomainError("grid spec must look like radial:AxB[:rmax]");
    std::string rest = spec.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
        try {
            g.rmax = std::stod(rest.substr(colon + 1));
        } catch (const std::exception &) {
            throw DomainError("bad rmax in grid spec '" + spec + "'");
        }
        rest = rest.substr(0, colon);
    }
    const auto x = rest.find('x');
    try {
        if (x == std::string::npos)
            throw DomainError("");
        g.angles = std::stoi(rest.substr(0, x));
        g.radii = std::stoi(rest.substr(x + 1));
    } catch (const std::exception &) {
        throw DomainError("bad grid spec '" + spec + "'");
    }
    if (g.angles < 1 || g.radii < 1 || !(g.rmax > 0.0) || g.rmax >= 1.0)
        throw DomainError("grid needs positive counts and 0 < rmax < 1");
    return g;
}

DistortionReport distortion_check(const AnalyticFn &f, std::span<const Complex> zeros, int p, const RadialGrid &grid)
{
    if (p < 1)
        throw DomainError("distortion_check: p must be >= 1");
    if (grid.angles < 1 || grid.radii < 1 || !(grid.rmax > 0.0) || grid.rmax >= 1.0)
        throw DomainError("distortion_check: invalid grid");
    DistortionReport rep;
    rep.s = static_cast<int>(zeros.size());
    rep.p = p;
    double zmax = 0.0;
    for (const Complex &x : zeros) {
        if (!(std::abs(x) < 1.0))
            throw DomainError("distortion_check: claimed zeros must lie in the open unit disk");
        zmax = std::max(zmax, std::abs(x));
    }

    // Certified count on the outermost usable circle must match the claim.
    double cap = 0.999;
    if (const auto m = f.max_radius())
        cap = std::min(cap, *m);
    bool counted = false;
    for (double r : {0.999, 0.995, 0.99, 0.98, 0.97, 0.96, 0.95, 0.93, 0.91}) {
        if (r > cap || r <= std::max(zmax, grid.rmax))
            continue;
        try {
            const ZeroCount zc = count_zeros(f, r);
            if (!zc.certified)
                continue;
            rep.cert_radius = r;
            rep.cert_count = zc.count;
            counted = true;
            break;
        } catch (const CertificationError &) {
        }
    }
    if (!counted)
        throw DomainError("distortion_check: no certifiable circle between the zeros and the unit circle");
    if (rep.cert_count != rep.s)
        throw DomainError("distortion_check: claimed " + std::to_string(rep.s) + " zeros but certified count is " +
                          std::to_string(rep.cert_count) + " on |z| = " + std::to_string(rep.cert_radius));

    const Polynomial T = f.truncated();
    const Polynomial monic = from_roots(RootForm{1.0, {zeros.begin(), zeros.end()}});
    const double radius = f.series() ? f.series()->working_radius() : 1.0;
    std::vector<Complex> tc = T.coeffs();
    tc.resize(std::max<std::size_t>(tc.size(), 2));
    const TaylorSeries quotient = series_divide(TaylorSeries(tc, radius), monic, 0);
    rep.leading = quotient[0];
    if (rep.leading == Complex{})
        throw DomainError("distortion_check: f vanishes to higher order than claimed at a zero");

    const Deflation defl = deflate(T, zeros);
    rep.deflation_residual = majorant(defl.remainder, 1.0);
    auto g = [&](Complex x) { return defl.quotient(x) / rep.leading; };
    rep.g0 = g(0.0);

    auto check = [&](Complex x) {
        const double ax = std::abs(x);
        const double ratio = (1.0 - ax) / (1.0 + ax);
        DistortionPoint pt{x, std::abs(g(x)), std::pow(ratio, 2 * p), std::pow(1.0 / ratio, 2 * p)};
        const double margin = std::min(pt.g_abs / pt.lower, pt.upper / pt.g_abs);
        if (rep.points == 0 || margin < rep.min_margin) {
            rep.min_margin = margin;
            rep.worst = pt;
        }
        ++rep.points;
        if (pt.g_abs < pt.lower * (1.0 - 1e-12) || pt.g_abs > pt.upper * (1.0 + 1e-12))
            rep.violations.push_back(pt);
    };
    check(0.0);
    for (int i = 1; i <= grid.radii; ++i)
        for (int a = 0; a < grid.angles; ++a)
            check(std::polar(grid.rmax * i / grid.radii, kTwoPi * a / grid.angles));
    rep.holds = rep.violations.empty();
    return rep;
}

CounterexampleReport distortion_counterexample(int p, int N, double delta)
{
    if (p < 1 || N <= p || N - p > 63)
        throw DomainError("counterexample: need 1 <= p < N and N - p <= 63");
    CounterexampleReport rep;
    rep.p = p;
    rep.N = N;
    if (!(delta > 0.0))
        delta = 0.1 * std::pow(3.0, -(N - p));
    rep.c = 1.0 - delta;
    // g - c = x^{N-p} + delta, formed directly so delta survives rounding
    rep.count = count_zeros(AnalyticFn(Polynomial::monomial(N - p) + Polynomial{delta}), 1.0 / 3.0).count;
    rep.not_p_valent = rep.count > p;
    return rep;
}

} // namespace valentkit
