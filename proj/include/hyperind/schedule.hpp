#ifndef HYPERIND_SCHEDULE_HPP
#define HYPERIND_SCHEDULE_HPP

#include <string>
#include <vector>

namespace hyperind {

/// Round parameters of the nibble. All logarithms are natural.
///   eps = 1/log T, beta = 1/(1+eps), M0 = log T, M = floor(log T / 2)
///   alpha_m^{k-1} = M0 + sum_{j<m} beta^j,  gamma_m = alpha_m - alpha_{m-1}
///   t_m = T / e^m,  p_{m+1} = gamma_{m+1} / t_m
/// Arrays are indexed by m; gamma[0] and p[0] are unused and set to 0.
struct Schedule {
    double N = 0.0;
    double T = 0.0;
    int k = 0;
    bool strict = false;

    double epsilon = 0.0;
    double beta = 0.0;
    double M0 = 0.0;
    int M = 0;

    std::vector<double> alpha;  // 0..M
    std::vector<double> gamma;  // 1..M
    std::vector<double> t;      // 0..M
    std::vector<double> p;      // 1..M
    std::vector<double> n_lo;   // 0..M, (1-eps)^{m+1} N / e^m
    std::vector<double> n_hi;   // 0..M, (1+eps)^{m+1} N / e^m

    std::vector<std::string> warnings;  // regime notes in lax mode
};

/// Strict mode requires (log N)^3 <= T <= N^{1/(4k)} and throws OutOfRegime
/// otherwise; lax mode records a warning and continues.
Schedule build_schedule(double N, double T, int k, bool strict);

struct ScheduleCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Verifies the round invariants: log T <= alpha_m^{k-1} <= 1.5 log T, the
/// gamma window, alpha_{m+1}^{k-1} - alpha_m^{k-1} = beta^m,
/// 1/2 < beta^m <= 1, t_m / t_{m+1} = e, and sum gamma = alpha_M - alpha_0.
ScheduleCheck check_schedule(const Schedule& s, double rel_tol = 1e-9);

enum class BoundKind { Spencer, LogLog, Log, Main };

const char* to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& s);

/// Reference lower bounds, without constant factors:
///   Spencer  (1 - 1/k) n / d^{1/(k-1)}
///   LogLog   ((n/d) log log (n/d))^{1/(k-1)}
///   Log      ((n/d) log (n/d))^{1/(k-1)}
///   Main     (N/T) (log T)^{1/(k-1)}       (second argument is T)
/// Throws OutOfDomain where the expression is undefined or non-positive.
double reference_bound(double n, double d_or_t, int k, BoundKind kind);

}  // namespace hyperind

#endif
