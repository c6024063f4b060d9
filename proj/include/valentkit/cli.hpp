#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "valentkit/io.hpp"

namespace valentkit {

inline constexpr const char *kVersion = "0.1.0";

/// Exit codes of `run`.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,     ///< usage, input or domain error (JSON on the error stream)
    kExitViolation = 2, ///< a check harness found an inequality violation
};

/// Entry point of the `valentkit` binary. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Plot-ready CSV (header + rows, 17 significant digits) from a report:
///   curve:   covering curve (eps, M), domination profile (k, S_req),
///            paired sweep (h, bound_alpha1, bound_kappa), K_d samples (alpha, bound)
///   scatter: probe detail (index, count), K_d samples, covering breakpoints
/// Throws DomainError for reports without compatible data.
std::string emit_plot_data(const json &report, const std::string &kind);

} // namespace valentkit
