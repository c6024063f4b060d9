#include "valentkit/cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "valentkit/error.hpp"

namespace valentkit {

namespace {

std::string fmt17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv(const std::vector<std::string> &header, const std::vector<std::vector<double>> &rows)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << fmt17(row[i]);
        os << '\n';
    }
    return os.str();
}

double num(const json &v)
{
    return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

} // namespace

std::string emit_plot_data(const json &report, const std::string &kind)
{
    if (kind != "curve" && kind != "scatter")
        throw DomainError("plot kind must be curve or scatter");
    std::vector<std::vector<double>> rows;
    if (kind == "curve") {
        if (report.contains("curve")) {
            const json &c = report.at("curve");
            rows.push_back({0.0, c.at("initial").get<double>()});
            for (const json &b : c.at("breakpoints"))
                rows.push_back({b.at("eps").get<double>(), b.at("M").get<double>()});
            return csv({"eps", "M"}, rows);
        }
        if (report.contains("profile")) {
            for (const json &r : report.at("profile"))
                rows.push_back({r.at("k").get<double>(), r.at("S_req").get<double>()});
            return csv({"k", "S_req"}, rows);
        }
        if (report.contains("sweep")) {
            for (const json &r : report.at("sweep"))
                rows.push_back({num(r.at("h")), num(r.at("bound_alpha1")), num(r.at("bound_kappa"))});
            return csv({"h", "bound_alpha1", "bound_kappa"}, rows);
        }
    } else {
        if (report.contains("detail")) {
            double i = 0;
            for (const json &r : report.at("detail"))
                rows.push_back({i++, r.at("count").get<double>()});
            return csv({"probe", "count"}, rows);
        }
        if (report.contains("curve")) {
            for (const json &b : report.at("curve").at("breakpoints"))
                rows.push_back({b.at("eps").get<double>(), b.at("M").get<double>()});
            return csv({"eps", "M"}, rows);
        }
    }
    if (report.contains("samples")) {
        for (const json &s : report.at("samples"))
            rows.push_back({num(s[0]), num(s[1])});
        return csv({"alpha", "bound"}, rows);
    }
    throw DomainError("report has no data compatible with plot kind '" + kind + "'");
}

namespace {

struct Outcome {
    json payload;
    int code = kExitOk;
};

json error_json(const std::string &kind, const std::string &message)
{
    return json{{"error", {{"kind", kind}, {"message", message}}}};
}

json curve_json(const CoveringNumberCurve &c) { return to_json(c); }

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"valentkit: Cartan measures, covering numbers, Remez bounds and valency probes"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    std::string format = "json";
    std::string out_path;
    std::string plot_kind = "curve";
    std::uint64_t seed = 42;
    bool no_timing = false;
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--kind", plot_kind, "csv flavour: curve or scatter")->check(CLI::IsMember({"curve", "scatter"}));
    app.add_option("--seed", seed, "master seed for randomized harnesses");
    app.add_flag("--no-timing", no_timing, "omit timing_ms from the report");

    json config;
    std::function<Outcome()> action;

    // cartan
    std::string points_path;
    int d = 1;
    double alpha = 1.0;
    std::string mode = "exact";
    auto *cartan = app.add_subcommand("cartan", "(d, alpha)-Cartan measure of a point set");
    cartan->add_option("--points", points_path)->required();
    cartan->add_option("--d", d)->required();
    cartan->add_option("--alpha", alpha)->required();
    cartan->add_option("--mode", mode)->check(CLI::IsMember({"exact", "bnb", "heuristic"}));
    cartan->callback([&] {
        config = {{"points", points_path}, {"d", d}, {"alpha", alpha}, {"mode", mode}};
        action = [&] {
            const auto res = cartan_measure(read_points(points_path), d, alpha, parse_cartan_mode(mode));
            return Outcome{to_json(res)};
        };
    });

    // covnum
    double eps = 0.0;
    bool with_curve = false;
    auto *covnum = app.add_subcommand("covnum", "covering number M(eps, Z)");
    covnum->add_option("--points", points_path)->required();
    covnum->add_option("--eps", eps)->required();
    covnum->add_flag("--curve", with_curve, "also emit the full step function");
    covnum->callback([&] {
        config = {{"points", points_path}, {"eps", eps}, {"curve", with_curve}};
        action = [&] {
            const PointSet z = read_points(points_path);
            json j{{"value", covering_number(z, eps)}, {"exact", true}};
            if (with_curve)
                j["curve"] = curve_json(covering_curve(z));
            return Outcome{j};
        };
    });

    // omega
    std::string variant = "d";
    auto *omega = app.add_subcommand("omega", "omega_d, omega_cd or rho_d of a point set");
    omega->add_option("--points", points_path)->required();
    omega->add_option("--d", d)->required();
    omega->add_option("--variant", variant)->check(CLI::IsMember({"d", "cd", "rho"}));
    omega->callback([&] {
        config = {{"points", points_path}, {"d", d}, {"variant", variant}};
        action = [&] {
            const auto curve = covering_curve(read_points(points_path));
            double v = 0.0;
            if (variant == "d")
                v = omega_d(curve, d);
            else if (variant == "cd")
                v = omega_cd(curve, d);
            else
                v = d * d_center_radius(curve, d);
            return Outcome{json{{"value", v}, {"exact", true}, {"curve", curve_json(curve)}}};
        };
    });

    // paired
    double h = 0.01, eta = 0.2, D_target = 0.0;
    bool sweep = false;
    auto *paired = app.add_subcommand("paired", "paired-couples example: closed forms vs computed invariants");
    paired->add_option("--d", d)->required();
    paired->add_option("--h", h);
    paired->add_option("--eta", eta);
    paired->add_option("--D", D_target, "radius of the smallest enclosing disk (0 = tightest)");
    paired->add_flag("--sweep", sweep, "emit the two K_d bounds over a decade sweep of h");
    paired->callback([&] {
        config = {{"d", d}, {"h", h}, {"eta", eta}, {"D", D_target}, {"sweep", sweep}};
        action = [&] {
            if (sweep) {
                std::vector<double> hs;
                for (int k = 0; k <= 16; ++k)
                    hs.push_back(h * std::pow(10.0, -k / 4.0));
                return Outcome{json{{"sweep", to_json(paired_bound_sweep(d, eta, hs, D_target))}}};
            }
            const auto rep = paired_example_report(d, h, eta, D_target);
            return Outcome{to_json(rep), rep.pass ? kExitOk : kExitViolation};
        };
    });

    // maxmod
    std::string poly_path;
    double r = 1.0, tol = 1e-8;
    auto *maxmod = app.add_subcommand("maxmod", "certified max |P| on a circle");
    maxmod->add_option("--poly", poly_path)->required();
    maxmod->add_option("--r", r);
    maxmod->add_option("--tol", tol);
    maxmod->callback([&] {
        config = {{"poly", poly_path}, {"r", r}, {"tol", tol}};
        action = [&] {
            const auto m = max_modulus_circle(read_polynomial(poly_path), r, tol);
            return Outcome{json{{"value", m.value}, {"upper", m.upper}, {"argmax", to_json(m.argmax)}, {"certified", m.certified}}};
        };
    });

    // dominate
    std::string series_path, seq_text;
    int N = 1, first_index = 0;
    double R = 1.0;
    auto *dominate = app.add_subcommand("dominate", "Taylor domination profile and check");
    dominate->add_option("--series", series_path)->required();
    dominate->add_option("--N", N)->required();
    dominate->add_option("--R", R)->required();
    dominate->add_option("--S", seq_text, "const:c=.. | power:c=..,e=.. | biernacki:m=..,A=..");
    dominate->add_option("--first-index", first_index, "lowest index in the base max");
    dominate->callback([&] {
        config = {{"series", series_path}, {"N", N}, {"R", R}, {"S", seq_text}, {"first_index", first_index}};
        action = [&] {
            const auto prof = domination_profile(read_series(series_path), N, R, first_index);
            json j = to_json(prof);
            if (!seq_text.empty()) {
                const auto seq = parse_sequence(seq_text);
                const auto chk = check_domination(prof, seq);
                j["sequence"] = to_string(seq);
                j["holds"] = chk.holds;
                j["first_violation"] = chk.first_violation ? json(*chk.first_violation) : json(nullptr);
            }
            return Outcome{j};
        };
    });

    // recur
    std::string rec_path, initial_text;
    int m = 1, K = 0;
    double rho = 1.0;
    auto *recur = app.add_subcommand("recur", "bounded non-stationary recurrences");
    recur->require_subcommand(1);
    auto *extract = recur->add_subcommand("extract", "single-support recurrence from a series");
    extract->add_option("--series", series_path)->required();
    extract->add_option("--m", m)->required();
    extract->add_option("--rho", rho)->required();
    extract->callback([&] {
        config = {{"series", series_path}, {"m", m}, {"rho", rho}};
        action = [&] {
            const TaylorSeries f = read_series(series_path);
            const auto rec = extract_recurrence(f, m, rho);
            std::vector<Complex> init(f.coeffs().begin(), f.coeffs().begin() + m);
            return Outcome{json{{"recurrence", to_json(rec)},
                                {"initial", to_json(init)},
                                {"K", f.order()},
                                {"C_emp", rec.K_bound},
                                {"valency_radius", valency_radius(m, rec.K_bound, rho)}}};
        };
    });
    auto *generate = recur->add_subcommand("generate", "forward recursion from a recurrence file");
    generate->add_option("--recurrence", rec_path)->required();
    generate->add_option("--K", K, "last index (default: end of table)");
    generate->add_option("--initial", initial_text, "JSON array of [re, im] (default: file's \"initial\")");
    generate->callback([&] {
        config = {{"recurrence", rec_path}, {"K", K}, {"initial", initial_text}};
        action = [&] {
            const json j = read_json(rec_path);
            const Recurrence rec = recurrence_from_json(j);
            std::vector<Complex> init;
            if (!initial_text.empty()) {
                try {
                    init = complex_list(json::parse(initial_text), "initial");
                } catch (const json::exception &e) {
                    throw InputError(std::string("malformed --initial: ") + e.what());
                }
            } else if (j.contains("initial")) {
                init = complex_list(j.at("initial"), "initial");
            } else {
                throw InputError("no initial coefficients given");
            }
            const int last = K > 0 ? K : rec.last_k();
            return Outcome{to_json(generate_from_recurrence(rec, init, last))};
        };
    });

    // count
    std::string fn_path;
    auto *count = app.add_subcommand("count", "argument-principle zero count in |z| < r");
    count->add_option("--fn", fn_path)->required();
    count->add_option("--r", r)->required();
    count->callback([&] {
        config = {{"fn", fn_path}, {"r", r}};
        action = [&] { return Outcome{to_json(count_zeros(read_function(fn_path), r))}; };
    });

    // valency
    int s = 0, trials = 200;
    double coeff_bound = 1.0;
    auto *valency = app.add_subcommand("valency", "empirical (s,p)-valency probe");
    valency->add_option("--fn", fn_path)->required();
    valency->add_option("--s", s)->required();
    valency->add_option("--R", R)->required();
    valency->add_option("--trials", trials);
    valency->add_option("--coeff-bound", coeff_bound);
    valency->add_option("--seed", seed);
    valency->callback([&] {
        config = {{"fn", fn_path}, {"s", s}, {"R", R}, {"trials", trials}, {"coeff_bound", coeff_bound}, {"seed", seed}};
        action = [&] { return Outcome{to_json(valency_probe(read_function(fn_path), s, R, trials, coeff_bound, seed))}; };
    });

    // exa
    int p = 3;
    auto *exa = app.add_subcommand("exa", "x^p + x^N valency reproduction on D_{1/3}");
    exa->add_option("--p", p)->required();
    exa->add_option("--N", N)->required();
    exa->add_option("--trials", trials);
    exa->add_option("--seed", seed);
    exa->callback([&] {
        config = {{"p", p}, {"N", N}, {"trials", trials}, {"seed", seed}};
        action = [&] {
            const auto rep = example_exa_report(p, N, trials, seed);
            return Outcome{to_json(rep), rep.pass ? kExitOk : kExitViolation};
        };
    });

    // distortion
    std::string zeros_path, grid_text = "radial:24x12";
    bool counterexample = false;
    auto *distortion = app.add_subcommand("distortion", "distortion bounds for f / P on a radial grid");
    distortion->add_option("--fn", fn_path);
    distortion->add_option("--zeros", zeros_path);
    distortion->add_option("--p", p)->required();
    distortion->add_option("--grid", grid_text);
    distortion->add_flag("--counterexample", counterexample, "g = 1 + x^{N-p} solution count (needs --N)");
    distortion->add_option("--N", N);
    distortion->callback([&] {
        config = {{"fn", fn_path}, {"zeros", zeros_path}, {"p", p}, {"grid", grid_text}, {"counterexample", counterexample}};
        if (counterexample)
            config["N"] = N;
        action = [&] {
            if (counterexample) {
                const auto rep = distortion_counterexample(p, N);
                return Outcome{to_json(rep), rep.not_p_valent ? kExitOk : kExitViolation};
            }
            if (fn_path.empty() || zeros_path.empty())
                throw InputError("distortion needs --fn and --zeros (or --counterexample)");
            const auto zeros = read_zeros(zeros_path);
            const auto rep = distortion_check(read_function(fn_path), zeros, p, parse_grid(grid_text));
            return Outcome{to_json(rep), rep.holds ? kExitOk : kExitViolation};
        };
    });

    // remez
    auto *remez = app.add_subcommand("remez", "Remez-type inequalities");
    remez->require_subcommand(1);
    auto *rpoly = remez->add_subcommand("poly", "polynomial Remez inequality at fixed alpha");
    rpoly->add_option("--poly", poly_path)->required();
    rpoly->add_option("--points", points_path)->required();
    rpoly->add_option("--alpha", alpha);
    rpoly->callback([&] {
        config = {{"poly", poly_path}, {"points", points_path}, {"alpha", alpha}};
        action = [&] {
            const auto rep = remez_check_polynomial(read_polynomial(poly_path), read_points(points_path), alpha);
            return Outcome{to_json(rep), rep.holds ? kExitOk : kExitViolation};
        };
    });
    auto *rkd = remez->add_subcommand("kd", "optimal-alpha constant K_d(Z)");
    rkd->add_option("--points", points_path)->required();
    rkd->add_option("--d", d)->required();
    rkd->callback([&] {
        config = {{"points", points_path}, {"d", d}};
        action = [&] { return Outcome{to_json(k_d(read_points(points_path), d))}; };
    });
    auto *ranalytic = remez->add_subcommand("analytic", "Remez inequality for (s,p)-valent functions");
    ranalytic->add_option("--fn", fn_path)->required();
    ranalytic->add_option("--s", s)->required();
    ranalytic->add_option("--p", p)->required();
    ranalytic->add_option("--points", points_path)->required();
    ranalytic->add_option("--R", R)->required();
    ranalytic->callback([&] {
        config = {{"fn", fn_path}, {"s", s}, {"p", p}, {"points", points_path}, {"R", R}};
        action = [&] {
            const auto rep = remez_analytic_check(read_function(fn_path), s, p, read_points(points_path), R);
            return Outcome{to_json(rep), rep.base.holds ? kExitOk : kExitViolation};
        };
    });
    auto *rsigma = remez->add_subcommand("sigma", "sigma_p(R, rho)");
    double rho_arg = 0.0;
    rsigma->add_option("--R", R)->required();
    rsigma->add_option("--rho", rho_arg)->required();
    rsigma->add_option("--p", p)->required();
    rsigma->callback([&] {
        config = {{"R", R}, {"rho", rho_arg}, {"p", p}};
        action = [&] { return Outcome{json{{"value", sigma_p(R, rho_arg, p)}}}; };
    });

    // plot
    std::string report_path;
    auto *plot = app.add_subcommand("plot", "CSV plot data from a saved report");
    plot->add_option("--report", report_path)->required();
    plot->callback([&] {
        config = {{"report", report_path}, {"kind", plot_kind}};
        format = "plot";
    });

    std::vector<const char *> argv{"valentkit"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << error_json("usage_error", e.what()).dump() << '\n';
        return kExitError;
    }

    auto emit = [&](const std::string &text) {
        if (out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(out_path);
        if (!f)
            throw InputError("cannot write output: " + out_path);
        f << text;
    };

    try {
        if (format == "plot") {
            emit(emit_plot_data(read_json(report_path), plot_kind));
            return kExitOk;
        }
        for (const char *key : {"points", "poly", "series", "fn", "zeros", "recurrence"}) {
            if (config.contains(key) && config[key].is_string()) {
                const std::string path = config[key];
                if (!path.empty() && !std::filesystem::exists(path))
                    throw InputError("input not found: " + path);
            }
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome res = action();
        const auto t1 = std::chrono::steady_clock::now();

        std::string name = app.get_subcommands().front()->get_name();
        for (auto *sub = app.get_subcommands().front(); !sub->get_subcommands().empty();) {
            sub = sub->get_subcommands().front();
            name += " " + sub->get_name();
        }
        json report = res.payload;
        report["command"] = name;
        report["version"] = kVersion;
        report["config"] = config;
        if (!no_timing)
            report["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        emit(format == "csv" ? emit_plot_data(report, plot_kind) : report.dump(2) + "\n");
        return res.code;
    } catch (const InputError &e) {
        err << error_json("input_error", e.what()).dump() << '\n';
    } catch (const CertificationError &e) {
        json j = error_json("certification_error", e.what());
        j["error"]["sample"] = json::array({e.re, e.im});
        err << j.dump() << '\n';
    } catch (const DomainError &e) {
        err << error_json("domain_error", e.what()).dump() << '\n';
    } catch (const std::exception &e) {
        err << error_json("internal_error", e.what()).dump() << '\n';
    }
    return kExitError;
}

} // namespace valentkit
