#include "valentkit/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "valentkit/error.hpp"

namespace valentkit {

TaylorSeries lower_truncation(const TaylorSeries &f, int s)
{
    if (s < 0 || s >= f.order())
        throw DomainError("lower_truncation: need 0 <= s < K");
    std::vector<Complex> b(static_cast<std::size_t>(f.order() - s) + 1);
    for (int k = 1; k < static_cast<int>(b.size()); ++k)
        b[k] = f[s + k];
    std::optional<double> tail;
    if (f.tail_bound())
        tail = *f.tail_bound() / std::pow(f.working_radius(), s);
    return TaylorSeries(std::move(b), f.working_radius(), tail);
}

DominationProfile domination_profile(const TaylorSeries &f, int N, double R, int first_index)
{
    if (N < 0 || first_index < 0 || first_index > N)
        throw DomainError("domination_profile: need 0 <= first_index <= N");
    if (!(R > 0.0) || R > f.working_radius())
        throw DomainError("domination_profile: need 0 < R <= working radius");
    DominationProfile p;
    p.N = N;
    p.R = R;
    p.first_index = first_index;
    for (int i = first_index; i <= N; ++i)
        p.base = std::max(p.base, std::abs(f[i]) * std::pow(R, i));
    if (!(p.base > 0.0))
        throw DomainError("domination_profile: base max_{i<=N} |a_i| R^i is zero");
    for (int k = N + 1; k <= f.order(); ++k)
        p.required.push_back(std::abs(f[k]) * std::pow(R, k) / p.base);
    return p;
}

double evaluate(const Sequence &s, int k)
{
    return std::visit(
        [k](const auto &seq) -> double {
            using T = std::decay_t<decltype(seq)>;
            if constexpr (std::is_same_v<T, ConstantSeq>)
                return seq.c;
            else if constexpr (std::is_same_v<T, PowerSeq>)
                return seq.c * std::pow(static_cast<double>(k), seq.e);
            else
                return std::pow(seq.A * k / seq.m, 2.0 * seq.m);
        },
        s);
}

namespace {

double parse_number(const std::string &v, const std::string &text)
{
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size() || !std::isfinite(x))
            throw DomainError("");
        return x;
    } catch (const std::exception &) {
        throw DomainError("bad number '" + v + "' in sequence '" + text + "'");
    }
}

} // namespace

Sequence parse_sequence(const std::string &text)
{
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    std::vector<std::pair<std::string, std::string>> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                kv.emplace_back("", item);
            else
                kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
    }
    auto get = [&](const std::string &key, std::optional<double> fallback) {
        for (const auto &[k, v] : kv)
            if (k == key || (k.empty() && key == "c"))
                return parse_number(v, text);
        if (fallback)
            return *fallback;
        throw DomainError("sequence '" + text + "' is missing parameter '" + key + "'");
    };
    if (kind == "const" || kind == "constant")
        return ConstantSeq{get("c", std::nullopt)};
    if (kind == "power")
        return PowerSeq{get("c", 1.0), get("e", std::nullopt)};
    if (kind == "biernacki") {
        const double m = get("m", std::nullopt);
        if (m < 1 || m != std::floor(m))
            throw DomainError("biernacki sequence needs an integer m >= 1");
        return BiernackiSeq{static_cast<int>(m), get("A", std::nullopt)};
    }
    throw DomainError("unknown sequence family '" + kind + "' (const|power|biernacki)");
}

std::string to_string(const Sequence &s)
{
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto &seq) {
            using T = std::decay_t<decltype(seq)>;
            if constexpr (std::is_same_v<T, ConstantSeq>)
                os << "const:c=" << seq.c;
            else if constexpr (std::is_same_v<T, PowerSeq>)
                os << "power:c=" << seq.c << ",e=" << seq.e;
            else
                os << "biernacki:m=" << seq.m << ",A=" << seq.A;
        },
        s);
    return os.str();
}

DominationCheck check_domination(const DominationProfile &p, const Sequence &s)
{
    DominationCheck out;
    for (int k = p.N + 1; k <= p.last_k(); ++k) {
        const double req = p.at(k);
        const double bound = evaluate(s, k);
        if (req > bound * (1.0 + 1e-12)) {
            out.holds = false;
            out.first_violation = k;
            break;
        }
    }
    return out;
}

double fit_biernacki_constant(const TaylorSeries &f, int m, double R)
{
    if (m < 1)
        throw DomainError("fit_biernacki_constant: m must be >= 1");
    const auto p = domination_profile(f, m, R, 1);
    double A = 0.0;
    for (int k = m + 1; k <= p.last_k(); ++k)
        A = std::max(A, static_cast<double>(m) / k * std::pow(p.at(k), 1.0 / (2.0 * m)));
    return A;
}

Recurrence extract_recurrence(const TaylorSeries &f, int m, double rho)
{
    if (m < 1)
        throw DomainError("extract_recurrence: m must be >= 1");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("extract_recurrence: rho must be positive");
    Recurrence rec;
    rec.m = m;
    rec.first_k = m;
    rec.rho = rho;
    for (int k = m; k <= f.order(); ++k) {
        std::vector<Complex> row(static_cast<std::size_t>(m));
        int jstar = 0;
        double w = 0.0;
        for (int j = 1; j <= m; ++j) {
            const double wj = std::abs(f[k - j]) * std::pow(rho, j);
            if (wj > w) {
                w = wj;
                jstar = j;
            }
        }
        if (jstar == 0) {
            if (f[k] != Complex{})
                throw DomainError("extract_recurrence: a_" + std::to_string(k) +
                                  " is nonzero but its m predecessors vanish");
        } else {
            row[jstar - 1] = f[k] / f[k - jstar];
            rec.K_bound = std::max(rec.K_bound, std::abs(row[jstar - 1]) / std::pow(rho, jstar));
        }
        rec.table.push_back(std::move(row));
    }
    return rec;
}

TaylorSeries generate_from_recurrence(const Recurrence &rec, const std::vector<Complex> &initial, int K)
{
    if (static_cast<int>(initial.size()) != rec.m)
        throw DomainError("generate_from_recurrence: need exactly m initial coefficients");
    if (K < std::max(1, rec.m - 1))
        throw DomainError("generate_from_recurrence: K too small");
    if (K > rec.last_k() || (K >= rec.m && rec.first_k != rec.m))
        throw DomainError("generate_from_recurrence: recurrence table does not cover k = m.." + std::to_string(K));
    std::vector<Complex> a(initial);
    a.resize(static_cast<std::size_t>(K) + 1);
    for (int k = rec.m; k <= K; ++k) {
        Complex acc{};
        for (int j = 1; j <= rec.m; ++j)
            acc += rec.c(j, k) * a[k - j];
        a[k] = acc;
    }
    return TaylorSeries(std::move(a), valency_radius(rec.m, rec.K_bound, rec.rho));
}

double valency_radius(int m, double K_bound, double rho)
{
    if (m < 1 || K_bound < 0.0 || !(rho > 0.0))
        throw DomainError("valency_radius: need m >= 1, K >= 0, rho > 0");
    return 1.0 / (std::ldexp(1.0, 3 * m + 1) * (2.0 * K_bound + 2.0) * rho);
}

} // namespace valentkit
