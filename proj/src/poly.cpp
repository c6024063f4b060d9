#include "valentkit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "valentkit/error.hpp"

namespace valentkit {

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs))
{
    for (const Complex &a : c_)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw DomainError("Polynomial: non-finite coefficient");
    while (!c_.empty() && c_.back() == Complex{})
        c_.pop_back();
}

Polynomial Polynomial::monomial(int k, Complex c)
{
    std::vector<Complex> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

int Polynomial::valuation() const
{
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != Complex{})
            return static_cast<int>(k);
    return 0;
}

Complex Polynomial::operator()(Complex z) const
{
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
    std::vector<Complex> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b)
{
    std::vector<Complex> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a[static_cast<int>(k)] - b[static_cast<int>(k)];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Complex> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(Complex s, const Polynomial &a)
{
    std::vector<Complex> v(a.c_);
    for (Complex &x : v)
        x *= s;
    return Polynomial(std::move(v));
}

Complex eval(const Polynomial &p, Complex z) { return p(z); }

Polynomial from_roots(const RootForm &rf)
{
    std::vector<Complex> c{rf.leading};
    for (const Complex &x : rf.roots) {
        // multiply by (z - x)
        c.push_back(Complex{});
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k - 1] - x * c[k];
        c[0] = -x * c[0];
    }
    return Polynomial(std::move(c));
}

double majorant(const Polynomial &p, double r)
{
    double acc = 0.0;
    const auto &c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * r + std::abs(*it);
    return acc;
}

double derivative_bound(const Polynomial &p, double r)
{
    return majorant(p.derivative(), r);
}

namespace {

struct Arc {
    double theta0;
    double width;
    double modulus; // |P| at the arc midpoint
    double upper;

    bool operator<(const Arc &o) const { return upper < o.upper; }
};

} // namespace

MaxModulus max_modulus_circle(const Polynomial &p, double r, double tol, std::size_t max_evaluations)
{
    if (!(r > 0.0) || !(tol > 0.0))
        throw DomainError("max_modulus_circle: radius and tolerance must be positive");
    MaxModulus out;
    if (p.is_zero()) {
        out.certified = true;
        return out;
    }
    const Polynomial dp = p.derivative();
    const double m2 = derivative_bound(dp, r);

    std::size_t evaluations = 0;
    auto make_arc = [&](double theta0, double width) {
        const double mid = theta0 + 0.5 * width;
        const Complex z = std::polar(r, mid);
        const Complex pz = p(z), dz = dp(z);
        const double mod = std::abs(pz);
        const double h = 0.5 * width * r;
        ++evaluations;
        if (mod > out.value) {
            out.value = mod;
            out.argmax = z;
        }
        // With z - m = m(e^{i t} - 1), |t| <= s: |P(m) + P'(m)(z - m)|^2 is at most
        // A^2 + 2|g|s + A B r s^2 + B^2 h^2, where g = Re(conj(P) P' i m) is the
        // tangential slope of |P|^2 / 2. It vanishes at interior maxima, so
        // flat stretches refine to h ~ sqrt(tol) rather than h ~ tol.
        const double s = 0.5 * width, B = std::abs(dz);
        const double g = std::abs(std::real(std::conj(pz) * dz * Complex(0.0, 1.0) * z));
        const double quad = std::sqrt(mod * mod + 2.0 * g * s + mod * B * r * s * s + B * B * h * h);
        const double rem = 0.5 * m2 * h * h;
        return Arc{theta0, width, mod, std::min(mod + B * h, quad) + rem};
    };

    std::priority_queue<Arc> heap;
    const int n0 = std::max(64, 16 * p.degree());
    const double w0 = 2.0 * std::numbers::pi / n0;
    for (int i = 0; i < n0; ++i)
        heap.push(make_arc(i * w0, w0));

    while (true) {
        const Arc top = heap.top();
        out.upper = std::max(out.value, top.upper);
        if (out.upper - out.value <= tol) {
            out.certified = true;
            break;
        }
        if (evaluations >= max_evaluations)
            break;
        heap.pop();
        const double half = 0.5 * top.width;
        heap.push(make_arc(top.theta0, half));
        heap.push(make_arc(top.theta0 + half, half));
    }
    return out;
}

double max_on_set(const Polynomial &p, const PointSet &z)
{
    if (z.empty())
        throw DomainError("max_on_set: empty point set");
    double m = 0.0;
    for (const Point &x : z.distinct())
        m = std::max(m, std::abs(p(x)));
    return m;
}

Deflation deflate(const Polynomial &p, std::span<const Complex> roots)
{
    Polynomial q = p;
    Polynomial rem;
    Polynomial done{1.0}; // product of the factors divided out so far
    for (const Complex &x : roots) {
        const auto &a = q.coeffs();
        if (a.size() <= 1) {
            rem = rem + done * q;
            q = Polynomial{};
            done = done * Polynomial{-x, 1.0};
            continue;
        }
        std::vector<Complex> b(a.size() - 1);
        b.back() = a.back();
        for (std::size_t k = b.size() - 1; k > 0; --k)
            b[k - 1] = a[k] + x * b[k];
        const Complex r0 = a[0] + x * b[0];
        rem = rem + r0 * done;
        done = done * Polynomial{-x, 1.0};
        q = Polynomial(std::move(b));
    }
    return {std::move(q), std::move(rem)};
}

TaylorSeries series_divide(const TaylorSeries &f, const Polynomial &p, int K)
{
    if (K < 0)
        throw DomainError("series_divide: K must be >= 0");
    if (p.is_zero())
        throw DomainError("series_divide: division by the zero polynomial");
    const int n = std::max(K, 1) + 1;
    std::vector<Complex> q(n);

    int vf = -1;
    for (int k = 0; k <= f.order(); ++k)
        if (f[k] != Complex{}) {
            vf = k;
            break;
        }
    const int vp = p.valuation();
    if (vf < 0)
        return TaylorSeries(std::move(q), f.working_radius());
    if (vp > vf)
        throw DomainError("series_divide: quotient is not regular at 0");

    const Complex lead = p[vp];
    const int dp = p.degree() - vp;
    for (int k = 0; k < n; ++k) {
        Complex acc = f[k + vp];
        for (int i = 1; i <= std::min(k, dp); ++i)
            acc -= p[vp + i] * q[k - i];
        q[k] = acc / lead;
    }
    return TaylorSeries(std::move(q), f.working_radius());
}

Polynomial truncate(const TaylorSeries &f)
{
    return Polynomial(f.coeffs());
}

} // namespace valentkit
