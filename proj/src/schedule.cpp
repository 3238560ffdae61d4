#include "hyperind/schedule.hpp"

#include <cmath>
#include <sstream>

#include "hyperind/core.hpp"

namespace hyperind {

Schedule build_schedule(double N, double T, int k, bool strict) {
    if (!(N >= 2.0) || !(T > 1.0) || k < 2 || !std::isfinite(N) || !std::isfinite(T))
        throw Error(ErrorKind::InvalidArguments, "schedule needs N >= 2, T > 1, k >= 2");
    Schedule s;
    s.N = N;
    s.T = T;
    s.k = k;
    s.strict = strict;

    const double logT = std::log(T);
    const double logN = std::log(N);
    const double lo = logN * logN * logN;
    const double hi = std::pow(N, 1.0 / (4.0 * k));
    if (T < lo || T > hi) {
        std::ostringstream msg;
        msg << "T=" << T << " outside [(log N)^3, N^(1/(4k))] = [" << lo << ", " << hi << "]";
        if (strict) throw Error(ErrorKind::OutOfRegime, msg.str());
        s.warnings.push_back(msg.str());
    }

    s.epsilon = 1.0 / logT;
    s.beta = 1.0 / (1.0 + s.epsilon);
    s.M0 = logT;
    s.M = static_cast<int>(std::floor(logT / 2.0));

    const double root = 1.0 / (k - 1);
    double power = s.M0;  // alpha_m^{k-1}
    double beta_m = 1.0;
    for (int m = 0; m <= s.M; ++m) {
        s.alpha.push_back(std::pow(power, root));
        power += beta_m;
        beta_m *= s.beta;
        s.t.push_back(T / std::exp(static_cast<double>(m)));
        s.n_lo.push_back(std::pow(1.0 - s.epsilon, m + 1) * N / std::exp(static_cast<double>(m)));
        s.n_hi.push_back(std::pow(1.0 + s.epsilon, m + 1) * N / std::exp(static_cast<double>(m)));
    }
    s.gamma.assign(s.M + 1, 0.0);
    s.p.assign(s.M + 1, 0.0);
    for (int m = 1; m <= s.M; ++m) {
        s.gamma[m] = s.alpha[m] - s.alpha[m - 1];
        s.p[m] = s.gamma[m] / s.t[m - 1];
    }
    return s;
}

ScheduleCheck check_schedule(const Schedule& s, double rel_tol) {
    ScheduleCheck out;
    auto fail = [&](const std::string& what, int m) {
        out.ok = false;
        out.failures.push_back(what + " at m=" + std::to_string(m));
    };
    const double logT = std::log(s.T);
    const double km1 = s.k - 1;
    auto close = [&](double a, double b) {
        return std::fabs(a - b) <= rel_tol * std::max({1.0, std::fabs(a), std::fabs(b)});
    };

    for (int m = 0; m <= s.M; ++m) {
        const double am = std::pow(s.alpha[m], km1);
        if (am < logT * (1.0 - rel_tol) || am > 1.5 * logT * (1.0 + rel_tol)) fail("alpha^{k-1} window", m);
        const double bm = std::pow(s.beta, m);
        if (!(bm > 0.5 && bm <= 1.0 + rel_tol)) fail("beta^m window", m);
        if (m < s.M) {
            const double next = std::pow(s.alpha[m + 1], km1);
            if (!close(next - am, bm)) fail("alpha increment", m);
            if (!close(s.t[m] / s.t[m + 1], std::exp(1.0))) fail("t ratio", m);
            const double g = s.gamma[m + 1];
            const double g_lo = 0.5 / (km1 * std::pow(1.5 * logT, (s.k - 2) / km1));
            const double g_hi = 1.0 / (km1 * std::pow(logT, (s.k - 2) / km1));
            if (g < g_lo * (1.0 - rel_tol) || g > g_hi * (1.0 + rel_tol)) fail("gamma window", m + 1);
        }
    }
    double sum = 0.0;
    for (int m = 1; m <= s.M; ++m) sum += s.gamma[m];
    if (!close(sum, s.alpha[s.M] - s.alpha[0])) fail("telescoping sum", s.M);
    return out;
}

const char* to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::Spencer: return "Spencer";
        case BoundKind::LogLog: return "LogLog";
        case BoundKind::Log: return "Log";
        case BoundKind::Main: return "Main";
    }
    return "?";
}

BoundKind bound_kind_from_string(const std::string& s) {
    if (s == "Spencer" || s == "spencer") return BoundKind::Spencer;
    if (s == "LogLog" || s == "loglog") return BoundKind::LogLog;
    if (s == "Log" || s == "log") return BoundKind::Log;
    if (s == "Main" || s == "main") return BoundKind::Main;
    throw Error(ErrorKind::InvalidArguments, "unknown bound '" + s + "'");
}

double reference_bound(double n, double d_or_t, int k, BoundKind kind) {
    if (k < 2 || !(n > 0.0) || !(d_or_t > 0.0))
        throw Error(ErrorKind::InvalidArguments, "reference bound needs n > 0, d > 0, k >= 2");
    const double root = 1.0 / (k - 1);
    switch (kind) {
        case BoundKind::Spencer:
            return (1.0 - 1.0 / k) * n / std::pow(d_or_t, root);
        case BoundKind::LogLog: {
            const double r = n / d_or_t;
            if (!(r > std::exp(1.0))) throw Error(ErrorKind::OutOfDomain, "log log(n/d) needs n/d > e");
            return std::pow(r * std::log(std::log(r)), root);
        }
        case BoundKind::Log: {
            const double r = n / d_or_t;
            if (!(r > 1.0)) throw Error(ErrorKind::OutOfDomain, "log(n/d) needs n/d > 1");
            return std::pow(r * std::log(r), root);
        }
        case BoundKind::Main:
            if (!(d_or_t > 1.0)) throw Error(ErrorKind::OutOfDomain, "log T needs T > 1");
            return (n / d_or_t) * std::pow(std::log(d_or_t), root);
    }
    throw Error(ErrorKind::Internal, "unhandled bound kind");
}

}  // namespace hyperind
