#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "valentkit/series.hpp"

namespace valentkit {

/// Lower s-truncation: b_0 = 0, b_k = a_{s+k} for k >= 1. A tail bound T of
/// f on |z| <= R becomes T / R^s (maximum principle applied to tail / z^s).
TaylorSeries lower_truncation(const TaylorSeries &f, int s);

/// Required domination sequence of f at (N, R):
///   base = max_{i = first_index..N} |a_i| R^i,
///   S_req(k) = |a_k| R^k / base  for k = N+1..K.
struct DominationProfile {
    int N = 0;
    double R = 1.0;
    int first_index = 0;
    double base = 0.0;
    std::vector<double> required; ///< required[k - N - 1] = S_req(k)

    int last_k() const { return N + static_cast<int>(required.size()); }
    double at(int k) const { return required.at(static_cast<std::size_t>(k - N - 1)); }
};

DominationProfile domination_profile(const TaylorSeries &f, int N, double R, int first_index = 0);

/// Built-in candidate sequences S(k).
struct ConstantSeq {
    double c;
};
/// c * k^e
struct PowerSeq {
    double c;
    double e;
};
/// (A k / m)^(2m), the Biernacki template.
struct BiernackiSeq {
    int m;
    double A;
};
using Sequence = std::variant<ConstantSeq, PowerSeq, BiernackiSeq>;

double evaluate(const Sequence &s, int k);
/// Parses "const:c=1" (or "const:1"), "power:c=1,e=2", "biernacki:m=2,A=1.5".
Sequence parse_sequence(const std::string &text);
std::string to_string(const Sequence &s);

struct DominationCheck {
    bool holds = true;
    std::optional<int> first_violation;
};

/// Pointwise S_req(k) <= S(k) for k = N+1..K (relative slack 1e-12).
DominationCheck check_domination(const DominationProfile &p, const Sequence &s);

/// Smallest A >= 0 with S_req(k) <= (A k / m)^(2m) on all computed k, i.e.
/// max_k (m/k) S_req(k)^(1/(2m)), using the profile with N = m and the base
/// taken over indices 1..m.
double fit_biernacki_constant(const TaylorSeries &f, int m, double R);

/// Non-stationary recurrence a_k = sum_{j=1..m} c_j(k) a_{k-j} for k >= m.
struct Recurrence {
    int m = 1;
    int first_k = 1;                            ///< = m
    std::vector<std::vector<Complex>> table;    ///< table[k - first_k][j - 1] = c_j(k)
    double K_bound = 0.0;                       ///< |c_j(k)| <= K_bound * rho^j
    double rho = 1.0;

    int last_k() const { return first_k + static_cast<int>(table.size()) - 1; }
    Complex c(int j, int k) const { return table.at(static_cast<std::size_t>(k - first_k)).at(static_cast<std::size_t>(j - 1)); }
};

/// Single-support extraction: for each k >= m pick j* maximising
/// |a_{k-j}| rho^j (ties -> smallest j) and set c_{j*}(k) = a_k / a_{k-j*}.
/// K_bound is the empirical max_{j,k} |c_j(k)| / rho^j.
Recurrence extract_recurrence(const TaylorSeries &f, int m, double rho);

/// Forward recursion from a_0..a_{m-1} up to a_K; the working radius is
/// valency_radius(m, K_bound, rho).
TaylorSeries generate_from_recurrence(const Recurrence &rec, const std::vector<Complex> &initial, int K);

/// 1 / (2^(3m+1) (2K + 2) rho)
double valency_radius(int m, double K_bound, double rho);

} // namespace valentkit
