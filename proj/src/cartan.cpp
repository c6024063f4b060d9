#include "valentkit/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "valentkit/error.hpp"
#include "valentkit/rng.hpp"

namespace valentkit {

const char *to_string(CartanMode m)
{
    switch (m) {
    case CartanMode::exact:
        return "exact";
    case CartanMode::bnb:
        return "bnb";
    case CartanMode::heuristic:
        return "heuristic";
    }
    return "?";
}

CartanMode parse_cartan_mode(const std::string &s)
{
    if (s == "exact")
        return CartanMode::exact;
    if (s == "bnb")
        return CartanMode::bnb;
    if (s == "heuristic")
        return CartanMode::heuristic;
    throw DomainError("unknown cartan mode '" + s + "' (expected exact|bnb|heuristic)");
}

double lp_norm(std::vector<double> radii, double alpha)
{
    std::sort(radii.begin(), radii.end());
    double s = 0.0;
    for (double r : radii)
        if (r > 0.0)
            s += std::pow(r, alpha);
    return s > 0.0 ? std::pow(s, 1.0 / alpha) : 0.0;
}

namespace {

void validate(const PointSet &z, int d, double alpha)
{
    if (z.empty())
        throw DomainError("cartan_measure: empty point set");
    if (d <= 0)
        throw DomainError("cartan_measure: d must be positive");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("cartan_measure: alpha must be positive and finite");
}

using Labels = std::vector<std::uint8_t>;

Disk cluster_disk(std::span<const Point> pts, std::uint64_t mask)
{
    std::vector<Point> members;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1U)
            members.push_back(pts[i]);
    return min_enclosing_disk(members);
}

// Calls visit(labels, blocks) for every restricted growth string over n
// points with at most d blocks.
template <typename Visit>
void for_each_partition(std::size_t n, int d, Visit &&visit)
{
    Labels labels(n, 0);
    std::vector<int> maxlab(n, 0); // max label among labels[0..i]
    const auto limit = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(d), n));
    // Iterative odometer over restricted growth strings.
    std::size_t i = n - 1;
    while (true) {
        visit(labels, maxlab[n - 1] + 1);
        // advance
        while (i > 0) {
            const int cap = std::min(maxlab[i - 1] + 1, limit - 1);
            if (labels[i] < cap)
                break;
            --i;
        }
        if (i == 0)
            return;
        ++labels[i];
        maxlab[i] = std::max(maxlab[i - 1], static_cast<int>(labels[i]));
        for (std::size_t j = i + 1; j < n; ++j) {
            labels[j] = 0;
            maxlab[j] = maxlab[j - 1];
        }
        i = n - 1;
    }
}

class MaskRadii {
public:
    explicit MaskRadii(std::span<const Point> pts)
        : pts_(pts), r_(std::size_t{1} << pts.size(), -1.0) {}

    double operator()(std::uint64_t mask)
    {
        double &r = r_[mask];
        if (r < 0.0)
            r = cluster_disk(pts_, mask).radius;
        return r;
    }

private:
    std::span<const Point> pts_;
    std::vector<double> r_;
};

std::vector<std::uint64_t> block_masks(const Labels &labels, int blocks)
{
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(blocks), 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        masks[labels[i]] |= std::uint64_t{1} << i;
    return masks;
}

std::size_t distinct_index(std::span<const Point> distinct, Point p)
{
    return static_cast<std::size_t>(std::find(distinct.begin(), distinct.end(), p) - distinct.begin());
}

CartanResult solve_exact(const PointSet &z, int d, double alpha, const CartanOptions &opts)
{
    const auto pts = z.distinct();
    if (pts.size() > opts.exact_limit)
        throw DomainError("cartan_measure: exact mode supports at most " + std::to_string(opts.exact_limit) +
                          " distinct points (got " + std::to_string(pts.size()) + "); use bnb");
    MaskRadii radius(pts);
    double best = std::numeric_limits<double>::infinity();
    Labels best_labels;
    std::vector<double> radii;
    for_each_partition(pts.size(), d, [&](const Labels &labels, int blocks) {
        radii.clear();
        for (std::uint64_t m : block_masks(labels, blocks))
            radii.push_back(radius(m));
        const double v = lp_norm(radii, alpha);
        if (v < best) {
            best = v;
            best_labels = labels;
        }
    });
    auto res = cartan_from_labels(z, d, alpha, best_labels);
    res.mode = CartanMode::exact;
    return res;
}

// Lloyd-style alternation from seeded farthest-point / D^2 seeding.
Labels heuristic_labels(std::span<const Point> pts, int d, double alpha, const CartanOptions &opts)
{
    const std::size_t n = pts.size();
    Labels best(n, 0);
    double best_v = min_enclosing_disk(pts).radius;

    for (int restart = 0; restart < std::max(1, opts.heuristic_restarts); ++restart) {
        SplitMix64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(restart)));
        std::vector<Point> centers{pts[restart == 0 ? 0 : rng.below(n)]};
        while (centers.size() < static_cast<std::size_t>(d)) {
            std::vector<double> w(n);
            double total = 0.0;
            std::size_t far = 0;
            for (std::size_t i = 0; i < n; ++i) {
                double m = std::numeric_limits<double>::infinity();
                for (const Point &c : centers)
                    m = std::min(m, std::norm(pts[i] - c));
                w[i] = m;
                total += m;
                if (m > w[far])
                    far = i;
            }
            if (total <= 0.0)
                break;
            if (restart == 0) {
                centers.push_back(pts[far]);
                continue;
            }
            double u = rng.uniform() * total;
            std::size_t pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (u < w[i]) {
                    pick = i;
                    break;
                }
                u -= w[i];
            }
            centers.push_back(pts[pick]);
        }

        Labels labels(n, 0);
        for (int iter = 0; iter < 100; ++iter) {
            Labels next(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                double m = std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < centers.size(); ++c) {
                    const double dist = std::abs(pts[i] - centers[c]);
                    if (dist < m) {
                        m = dist;
                        next[i] = static_cast<std::uint8_t>(c);
                    }
                }
            }
            const bool stable = iter > 0 && next == labels;
            labels = std::move(next);
            if (stable)
                break;
            for (std::size_t c = 0; c < centers.size(); ++c) {
                std::vector<Point> members;
                for (std::size_t i = 0; i < n; ++i)
                    if (labels[i] == c)
                        members.push_back(pts[i]);
                if (!members.empty())
                    centers[c] = min_enclosing_disk(members).center;
            }
        }
        std::vector<double> radii;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            std::vector<Point> members;
            for (std::size_t i = 0; i < n; ++i)
                if (labels[i] == c)
                    members.push_back(pts[i]);
            if (!members.empty())
                radii.push_back(min_enclosing_disk(members).radius);
        }
        const double v = lp_norm(radii, alpha);
        if (v < best_v) {
            best_v = v;
            best = labels;
        }
    }
    return best;
}

class BranchAndBound {
public:
    BranchAndBound(std::span<const Point> pts, int d, double alpha)
        : pts_(pts), n_(pts.size()), d_(d), alpha_(alpha), label_(n_, -1) {}

    Labels solve(const Labels &incumbent, double incumbent_sum)
    {
        // Slight inflation so that the search re-derives its own optimum
        // rather than returning the seed labelling on ties.
        best_ = incumbent_sum * (1.0 + 1e-9) + std::numeric_limits<double>::min();
        best_labels_ = incumbent;
        recurse(0, 0.0);
        return best_labels_;
    }

private:
    struct Cluster {
        std::uint64_t mask;
        Disk disk;
        double weight; // r^alpha
    };

    Disk disk_of(std::uint64_t mask)
    {
        auto it = cache_.find(mask);
        if (it != cache_.end())
            return it->second;
        const Disk disk = cluster_disk(pts_, mask);
        cache_.emplace(mask, disk);
        return disk;
    }

    double weight(double r) const { return r > 0.0 ? std::pow(r, alpha_) : 0.0; }

    void record(double sum)
    {
        best_ = sum;
        best_labels_.assign(n_, 0);
        int next = static_cast<int>(clusters_.size());
        for (std::size_t i = 0; i < n_; ++i)
            best_labels_[i] = static_cast<std::uint8_t>(label_[i] >= 0 ? label_[i] : next++);
    }

    std::size_t pick_point() const
    {
        std::size_t pick = n_;
        double far = -1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (label_[i] >= 0)
                continue;
            if (clusters_.empty())
                return i;
            double m = std::numeric_limits<double>::infinity();
            for (const Cluster &c : clusters_)
                m = std::min(m, std::abs(pts_[i] - c.disk.center));
            if (m > far) {
                far = m;
                pick = i;
            }
        }
        return pick;
    }

    void recurse(std::size_t assigned, double sum)
    {
        if (sum >= best_)
            return;
        const std::size_t remaining = n_ - assigned;
        const std::size_t free = static_cast<std::size_t>(d_) - clusters_.size();
        if (remaining <= free) {
            // Remaining points each take their own zero-radius disk.
            record(sum);
            return;
        }
        const std::size_t q = pick_point();
        const std::uint64_t bit = std::uint64_t{1} << q;

        std::vector<std::size_t> order(clusters_.size());
        for (std::size_t c = 0; c < order.size(); ++c)
            order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(pts_[q] - clusters_[a].disk.center) < std::abs(pts_[q] - clusters_[b].disk.center);
        });

        for (std::size_t c : order) {
            Cluster saved = clusters_[c];
            const Disk grown = disk_of(saved.mask | bit);
            const double w = weight(grown.radius);
            const double next = sum - saved.weight + w;
            if (next >= best_)
                continue;
            clusters_[c] = Cluster{saved.mask | bit, grown, w};
            label_[q] = static_cast<int>(c);
            recurse(assigned + 1, next);
            label_[q] = -1;
            clusters_[c] = saved;
        }
        if (clusters_.size() < static_cast<std::size_t>(d_)) {
            clusters_.push_back(Cluster{bit, Disk{pts_[q], 0.0}, 0.0});
            label_[q] = static_cast<int>(clusters_.size() - 1);
            recurse(assigned + 1, sum);
            label_[q] = -1;
            clusters_.pop_back();
        }
    }

    std::span<const Point> pts_;
    std::size_t n_;
    int d_;
    double alpha_;
    std::vector<int> label_;
    std::vector<Cluster> clusters_;
    std::unordered_map<std::uint64_t, Disk> cache_;
    double best_ = 0.0;
    Labels best_labels_;
};

double power_sum(const CartanResult &r)
{
    return r.value > 0.0 ? std::pow(r.value, r.alpha) : 0.0;
}

} // namespace

CartanResult cartan_from_labels(const PointSet &z, int d, double alpha, std::span<const std::uint8_t> labels)
{
    const auto pts = z.distinct();
    if (labels.size() != pts.size())
        throw DomainError("cartan_from_labels: label count does not match the distinct points");
    int blocks = 0;
    for (std::uint8_t l : labels)
        blocks = std::max(blocks, l + 1);
    CartanResult res;
    res.alpha = alpha;
    res.d = d;
    std::vector<double> radii;
    std::vector<int> remap(static_cast<std::size_t>(blocks), -1);
    for (int b = 0; b < blocks; ++b) {
        std::vector<Point> members;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (labels[i] == b)
                members.push_back(pts[i]);
        if (members.empty())
            continue;
        remap[b] = static_cast<int>(res.covering.disks.size());
        res.covering.disks.push_back(min_enclosing_disk(members));
        radii.push_back(res.covering.disks.back().radius);
    }
    if (res.covering.disks.size() > static_cast<std::size_t>(d))
        throw DomainError("cartan_from_labels: more than d clusters");
    for (const Point &p : z.points())
        res.covering.assignment.push_back(static_cast<std::size_t>(remap[labels[distinct_index(pts, p)]]));
    res.value = lp_norm(std::move(radii), alpha);
    return res;
}

CartanResult cartan_measure(const PointSet &z, int d, double alpha, CartanMode mode, const CartanOptions &opts)
{
    validate(z, d, alpha);
    const auto pts = z.distinct();
    if (pts.size() <= static_cast<std::size_t>(d)) {
        Labels labels(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            labels[i] = static_cast<std::uint8_t>(i);
        auto res = cartan_from_labels(z, d, alpha, labels);
        res.mode = mode;
        res.exact = true;
        return res;
    }
    if (d > 255)
        throw DomainError("cartan_measure: d > 255 with more than d points is not supported");

    switch (mode) {
    case CartanMode::exact:
        return solve_exact(z, d, alpha, opts);
    case CartanMode::heuristic: {
        auto res = cartan_from_labels(z, d, alpha, heuristic_labels(pts, d, alpha, opts));
        res.mode = mode;
        res.exact = false;
        return res;
    }
    case CartanMode::bnb: {
        if (pts.size() > 64)
            throw DomainError("cartan_measure: bnb mode supports at most 64 distinct points");
        const Labels seed = heuristic_labels(pts, d, alpha, opts);
        const auto seed_res = cartan_from_labels(z, d, alpha, seed);
        BranchAndBound bnb(pts, d, alpha);
        auto res = cartan_from_labels(z, d, alpha, bnb.solve(seed, power_sum(seed_res)));
        res.mode = mode;
        return res;
    }
    }
    throw DomainError("cartan_measure: unknown mode");
}

CartanResult cartan_measure(const PointSet &z, int d, double alpha, const CartanOptions &opts)
{
    validate(z, d, alpha);
    const bool small = z.distinct().size() <= opts.exact_limit;
    return cartan_measure(z, d, alpha, small ? CartanMode::exact : CartanMode::bnb, opts);
}

CartanCatalog::CartanCatalog(const PointSet &z, int d, const CartanOptions &opts) : z_(z), d_(d)
{
    validate(z, d, 1.0);
    const auto pts = z.distinct();
    if (pts.size() > opts.exact_limit)
        throw DomainError("CartanCatalog: too many distinct points for exhaustive enumeration");
    MaskRadii radius(pts);
    offsets_.push_back(0);
    for_each_partition(pts.size(), d, [&](const Labels &labels, int blocks) {
        const std::size_t start = radii_.size();
        for (std::uint64_t m : block_masks(labels, blocks))
            radii_.push_back(radius(m));
        std::sort(radii_.begin() + static_cast<std::ptrdiff_t>(start), radii_.end());
        offsets_.push_back(radii_.size());
        labels_.push_back(labels);
    });
}

CartanResult CartanCatalog::measure(double alpha) const
{
    validate(z_, d_, alpha);
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t p = 0; p + 1 < offsets_.size(); ++p) {
        double s = 0.0;
        for (std::size_t i = offsets_[p]; i < offsets_[p + 1]; ++i)
            if (radii_[i] > 0.0)
                s += std::pow(radii_[i], alpha);
        if (s < best) {
            best = s;
            arg = p;
        }
    }
    auto res = cartan_from_labels(z_, d_, alpha, labels_[arg]);
    res.mode = CartanMode::exact;
    return res;
}

} // namespace valentkit
