#include "valentkit/io.hpp"

#include <cmath>
#include <fstream>

#include "valentkit/error.hpp"

namespace valentkit {

json read_json(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("input not found: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

namespace {

double finite_number(const json &v, const std::string &what)
{
    if (!v.is_number())
        throw InputError(what + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw InputError(what + ": non-finite value");
    return x;
}

const json &field(const json &j, const char *key, const std::string &what)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(what + ": missing \"" + key + "\"");
    return j.at(key);
}

} // namespace

std::vector<Complex> complex_list(const json &j, const std::string &what)
{
    if (!j.is_array())
        throw InputError(what + ": expected an array of [re, im] pairs");
    std::vector<Complex> out;
    for (const json &e : j) {
        if (e.is_number()) {
            out.emplace_back(finite_number(e, what), 0.0);
            continue;
        }
        if (!e.is_array() || e.size() != 2)
            throw InputError(what + ": each entry must be [re, im]");
        out.emplace_back(finite_number(e[0], what), finite_number(e[1], what));
    }
    return out;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const std::vector<Complex> &v)
{
    json a = json::array();
    for (const Complex &z : v)
        a.push_back(to_json(z));
    return a;
}

PointSet points_from_json(const json &j)
{
    return PointSet(complex_list(field(j, "points", "points file"), "points"));
}

Polynomial polynomial_from_json(const json &j)
{
    return Polynomial(complex_list(field(j, "coeffs", "polynomial file"), "coeffs"));
}

TaylorSeries series_from_json(const json &j)
{
    auto c = complex_list(field(j, "coeffs", "series file"), "coeffs");
    const double r = finite_number(field(j, "radius", "series file"), "radius");
    std::optional<double> tail;
    if (j.contains("tail_bound") && !j.at("tail_bound").is_null())
        tail = finite_number(j.at("tail_bound"), "tail_bound");
    return TaylorSeries(std::move(c), r, tail);
}

AnalyticFn function_from_json(const json &j)
{
    if (j.is_object() && j.contains("radius"))
        return AnalyticFn(series_from_json(j));
    return AnalyticFn(polynomial_from_json(j));
}

Recurrence recurrence_from_json(const json &j)
{
    const json &r = j.contains("recurrence") ? j.at("recurrence") : j;
    Recurrence rec;
    rec.m = field(r, "m", "recurrence").get<int>();
    rec.first_k = r.value("first_k", rec.m);
    rec.rho = finite_number(field(r, "rho", "recurrence"), "rho");
    rec.K_bound = finite_number(field(r, "K_bound", "recurrence"), "K_bound");
    for (const json &row : field(r, "table", "recurrence")) {
        auto c = complex_list(row, "recurrence table row");
        if (static_cast<int>(c.size()) != rec.m)
            throw InputError("recurrence table rows must have m entries");
        rec.table.push_back(std::move(c));
    }
    return rec;
}

PointSet read_points(const std::filesystem::path &p) { return points_from_json(read_json(p)); }
Polynomial read_polynomial(const std::filesystem::path &p) { return polynomial_from_json(read_json(p)); }
TaylorSeries read_series(const std::filesystem::path &p) { return series_from_json(read_json(p)); }
AnalyticFn read_function(const std::filesystem::path &p) { return function_from_json(read_json(p)); }

std::vector<Complex> read_zeros(const std::filesystem::path &p)
{
    const json j = read_json(p);
    if (j.is_array())
        return complex_list(j, "zeros");
    if (j.contains("zeros"))
        return complex_list(j.at("zeros"), "zeros");
    return complex_list(field(j, "points", "zeros file"), "zeros");
}

json to_json(const PointSet &z)
{
    return json{{"points", to_json(std::vector<Complex>(z.points().begin(), z.points().end()))}};
}

json to_json(const Polynomial &p) { return json{{"coeffs", to_json(p.coeffs())}}; }

json to_json(const TaylorSeries &f)
{
    json j{{"coeffs", to_json(f.coeffs())}, {"radius", f.working_radius()}};
    if (f.tail_bound())
        j["tail_bound"] = *f.tail_bound();
    return j;
}

json to_json(const Disk &d) { return json{{"center", to_json(d.center)}, {"radius", d.radius}}; }

json to_json(const CartanResult &r)
{
    json disks = json::array();
    for (const Disk &d : r.covering.disks)
        disks.push_back(to_json(d));
    return json{{"value", r.value},
                {"alpha", r.alpha},
                {"d", r.d},
                {"mode", to_string(r.mode)},
                {"exact", r.exact},
                {"covering", {{"disks", disks}, {"assignment", r.covering.assignment}}}};
}

json to_json(const CoveringNumberCurve &c)
{
    json b = json::array();
    for (const CoveringStep &s : c.breakpoints)
        b.push_back(json{{"eps", s.eps}, {"M", s.count}});
    return json{{"initial", c.initial}, {"breakpoints", b}};
}

json to_json(const DominationProfile &p)
{
    json rows = json::array();
    for (int k = p.N + 1; k <= p.last_k(); ++k)
        rows.push_back(json{{"k", k}, {"S_req", p.at(k)}});
    return json{{"N", p.N}, {"R", p.R}, {"first_index", p.first_index}, {"base", p.base}, {"profile", rows}};
}

json to_json(const Recurrence &r)
{
    json table = json::array();
    for (const auto &row : r.table)
        table.push_back(to_json(row));
    return json{{"m", r.m}, {"first_k", r.first_k}, {"rho", r.rho}, {"K_bound", r.K_bound}, {"table", table}};
}

json to_json(const ZeroCount &z)
{
    return json{{"count", z.count},         {"circle_radius", z.circle_radius}, {"min_modulus", z.min_modulus},
                {"winding", z.winding},     {"samples", z.samples},             {"certified", z.certified}};
}

json to_json(const ValencyProbe &v)
{
    json detail = json::array();
    for (const ProbeRecord &r : v.detail)
        detail.push_back(json{{"kind", r.kind}, {"index", r.index}, {"c", to_json(r.c)}, {"count", r.count}});
    return json{{"s", v.s},
                {"R", v.R},
                {"trials", v.trials},
                {"seed", v.seed},
                {"coeff_bound", v.coeff_bound},
                {"max_count", v.max_count},
                {"witness", to_json(v.witness)},
                {"witness_kind", v.witness_kind},
                {"probes", v.probes},
                {"skipped", v.skipped},
                {"detail", detail}};
}

json to_json(const ExaReport &r)
{
    json rows = json::array();
    for (const ExaRow &row : r.rows) {
        json j{{"s", row.s},           {"max_count", row.max_count}, {"expected", row.expected},
               {"probes", row.probes}, {"skipped", row.skipped},     {"pass", row.pass}};
        if (row.structured_count >= 0)
            j["structured_count"] = row.structured_count;
        rows.push_back(j);
    }
    return json{{"p", r.p}, {"N", r.N}, {"R", r.R}, {"rows", rows}, {"pass", r.pass}};
}

namespace {

json point_json(const DistortionPoint &p)
{
    return json{{"x", to_json(p.x)}, {"g_abs", p.g_abs}, {"lower", p.lower}, {"upper", p.upper}};
}

} // namespace

json to_json(const DistortionReport &r)
{
    json v = json::array();
    for (const auto &p : r.violations)
        v.push_back(point_json(p));
    return json{{"s", r.s},
                {"p", r.p},
                {"leading", to_json(r.leading)},
                {"cert_radius", r.cert_radius},
                {"cert_count", r.cert_count},
                {"g0", to_json(r.g0)},
                {"deflation_residual", r.deflation_residual},
                {"min_margin", r.min_margin},
                {"worst", point_json(r.worst)},
                {"points", r.points},
                {"violations", v},
                {"holds", r.holds}};
}

json to_json(const CounterexampleReport &r)
{
    return json{{"p", r.p}, {"N", r.N}, {"c", r.c}, {"count", r.count}, {"expected", r.N - r.p}, {"not_p_valent", r.not_p_valent}};
}

json to_json(const KdResult &k)
{
    json s = json::array();
    for (const auto &[a, b] : k.samples)
        s.push_back(json::array({a, b}));
    return json{{"value", k.value}, {"alpha_star", k.alpha_star}, {"samples", s}};
}

json to_json(const RemezReport &r)
{
    return json{{"lhs", r.lhs},
                {"rhs", r.rhs},
                {"constant_used", r.constant_used},
                {"alpha", r.alpha},
                {"max_on_z", r.max_on_z},
                {"cartan", r.cartan},
                {"degree", r.degree},
                {"holds", r.holds},
                {"margin", r.margin}};
}

json to_json(const AnalyticRemezReport &r)
{
    json j = to_json(r.base);
    j.erase("cartan");
    j["s"] = r.s;
    j["p"] = r.p;
    j["R"] = r.R;
    j["rho"] = r.rho;
    j["sigma"] = r.sigma;
    j["K_s"] = r.K_s;
    j["K_alpha_star"] = r.K_alpha_star;
    j["zero_count"] = r.zero_count;
    return j;
}

json to_json(const PairedReport &r)
{
    json rows = json::array();
    for (const auto &row : r.rows)
        rows.push_back(json{{"alpha", row.alpha},
                            {"cartan", row.cartan},
                            {"closed_upper", row.closed_upper},
                            {"within_upper", row.within_upper}});
    const auto &g = r.geometry;
    return json{{"d", g.d},
                {"h", g.h},
                {"eta", g.eta},
                {"D", g.D},
                {"points", to_json(g.points)["points"]},
                {"kappa", r.kappa},
                {"omega_d", r.omega_d},
                {"omega_d_closed", r.omega_d_closed},
                {"omega_cd", r.omega_cd},
                {"omega_cd_closed", r.omega_cd_closed},
                {"alpha_rows", rows},
                {"cartan_kappa", r.cartan_kappa},
                {"equality_alpha", r.equality_alpha},
                {"equality_error", r.equality_error},
                {"bound_alpha1", r.bound_alpha1},
                {"bound_kappa", r.bound_kappa},
                {"bound_kappa_log_form", r.bound_kappa_log_form},
                {"k_d", r.k_d},
                {"k_d_alpha_star", r.k_d_alpha_star},
                {"checks",
                 {{"omega", r.omega_ok},
                  {"upper", r.upper_ok},
                  {"equality", r.equality_ok},
                  {"kappa", r.kappa_ok},
                  {"k_d", r.k_d_ok}}},
                {"pass", r.pass}};
}

json to_json(const std::vector<PairedSweepRow> &rows)
{
    json a = json::array();
    for (const auto &r : rows)
        a.push_back(json{{"h", r.h},
                         {"bound_alpha1", r.bound_alpha1},
                         {"bound_kappa", r.bound_kappa},
                         {"bound_kappa_log_form", r.bound_kappa_log_form}});
    return a;
}

} // namespace valentkit
