#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "valentkit/cartan.hpp"
#include "valentkit/paired.hpp"
#include "valentkit/poly.hpp"
#include "valentkit/remez.hpp"
#include "valentkit/taylor.hpp"
#include "valentkit/valency.hpp"

namespace valentkit {

using json = nlohmann::json;

/// Raised for unreadable or malformed input files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

json read_json(const std::filesystem::path &path);

// File schemas:
//   points:     {"points": [[re, im], ...]}
//   polynomial: {"coeffs": [[re, im], ...]}          (ascending degree)
//   series:     {"coeffs": [...], "radius": r, "tail_bound": t?}
//   function:   polynomial or series (a "radius" key selects series)
//   zeros:      {"zeros": [[re, im], ...]}
//   recurrence: {"m", "first_k", "rho", "K_bound", "table": [[[re,im],...],...], "initial"?}
std::vector<Complex> complex_list(const json &j, const std::string &what);
json to_json(Complex z);
json to_json(const std::vector<Complex> &v);

PointSet points_from_json(const json &j);
Polynomial polynomial_from_json(const json &j);
TaylorSeries series_from_json(const json &j);
AnalyticFn function_from_json(const json &j);
Recurrence recurrence_from_json(const json &j);

PointSet read_points(const std::filesystem::path &p);
Polynomial read_polynomial(const std::filesystem::path &p);
TaylorSeries read_series(const std::filesystem::path &p);
AnalyticFn read_function(const std::filesystem::path &p);
std::vector<Complex> read_zeros(const std::filesystem::path &p);

json to_json(const PointSet &z);
json to_json(const Polynomial &p);
json to_json(const TaylorSeries &f);
json to_json(const Disk &d);
json to_json(const CartanResult &r);
json to_json(const CoveringNumberCurve &c);
json to_json(const DominationProfile &p);
json to_json(const Recurrence &r);
json to_json(const ZeroCount &z);
json to_json(const ValencyProbe &v);
json to_json(const ExaReport &r);
json to_json(const DistortionReport &r);
json to_json(const CounterexampleReport &r);
json to_json(const KdResult &k);
json to_json(const RemezReport &r);
json to_json(const AnalyticRemezReport &r);
json to_json(const PairedReport &r);
json to_json(const std::vector<PairedSweepRow> &rows);

} // namespace valentkit
