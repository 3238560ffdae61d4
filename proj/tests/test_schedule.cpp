#include <doctest.h>

#include <cmath>

#include "hyperind/core.hpp"
#include "hyperind/schedule.hpp"

using namespace hyperind;

namespace {

// alpha_m^{k-1} = log T + (1 - beta^m) / (1 - beta): the geometric sum in closed form.
double alpha_closed(double T, int k, int m) {
    const double logT = std::log(T);
    const double beta = 1.0 / (1.0 + 1.0 / logT);
    return std::pow(logT + (1.0 - std::pow(beta, m)) / (1.0 - beta), 1.0 / (k - 1));
}

}  // namespace

TEST_CASE("schedule values for k = 4, T = e^9") {
    const double T = std::exp(9.0);
    auto s = build_schedule(1e6, T, 4, false);
    CHECK(s.M0 == doctest::Approx(9.0));
    CHECK(s.M == 4);
    CHECK(s.epsilon == doctest::Approx(1.0 / 9.0));
    CHECK(s.beta == doctest::Approx(0.9));
    CHECK(s.alpha[0] == doctest::Approx(std::cbrt(9.0)).epsilon(1e-12));
    CHECK(s.alpha[1] == doctest::Approx(std::cbrt(10.0)).epsilon(1e-12));
    CHECK(s.gamma[1] == doctest::Approx(std::cbrt(10.0) - std::cbrt(9.0)).epsilon(1e-12));
    // Frozen after the closed-form check above.
    CHECK(s.alpha[0] == doctest::Approx(2.080084).epsilon(1e-6));
    CHECK(s.alpha[1] == doctest::Approx(2.154435).epsilon(1e-6));
    CHECK(s.gamma[1] == doctest::Approx(0.0743509).epsilon(1e-5));
    CHECK(std::pow(s.alpha[s.M], 3) <= 13.5);
    for (int m = 0; m <= s.M; ++m) {
        CHECK(s.alpha[m] == doctest::Approx(alpha_closed(T, 4, m)).epsilon(1e-12));
        CHECK(s.t[m] == doctest::Approx(T / std::exp(m)));
        CHECK(s.n_lo[m] == doctest::Approx(std::pow(1 - 1.0 / 9, m + 1) * 1e6 / std::exp(m)));
        CHECK(s.n_hi[m] == doctest::Approx(std::pow(1 + 1.0 / 9, m + 1) * 1e6 / std::exp(m)));
    }
    for (int m = 1; m <= s.M; ++m) CHECK(s.p[m] == doctest::Approx(s.gamma[m] / s.t[m - 1]));
    CHECK(check_schedule(s).ok);
}

TEST_CASE("schedule regime handling") {
    // (log N)^3 = 2628 > e^7; lax records it, strict refuses.
    auto lax = build_schedule(5e5, std::exp(7.0), 3, false);
    CHECK_FALSE(lax.warnings.empty());
    CHECK_THROWS_AS(build_schedule(5e5, std::exp(7.0), 3, true), Error);
    try {
        build_schedule(5e5, std::exp(7.0), 3, true);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRegime);
    }
    CHECK_THROWS_AS(build_schedule(1.0, 10.0, 3, false), Error);
    CHECK(build_schedule(100, 5.0, 3, false).M == 0);
}

TEST_CASE("schedule invariants over a grid") {
    for (int k = 3; k <= 8; ++k)
        for (int e = 3; e <= 12; ++e) {
            const double T = std::exp(static_cast<double>(e));
            auto s = build_schedule(1e7, T, k, false);
            auto c = check_schedule(s);
            CHECK_MESSAGE(c.ok, "k=" << k << " T=e^" << e);
            const double logT = e;
            double sum = 0;
            for (int m = 0; m <= s.M; ++m) {
                const double a = std::pow(s.alpha[m], k - 1);
                CHECK(a >= logT * (1 - 1e-12));
                CHECK(a <= 1.5 * logT * (1 + 1e-12));
                if (m >= 1) {
                    const double lo = 0.5 / ((k - 1) * std::pow(1.5 * logT, (k - 2.0) / (k - 1)));
                    const double hi = 1.0 / ((k - 1) * std::pow(logT, (k - 2.0) / (k - 1)));
                    CHECK(s.gamma[m] >= lo);
                    CHECK(s.gamma[m] <= hi);
                    sum += s.gamma[m];
                }
            }
            CHECK(sum == doctest::Approx(s.alpha[s.M] - s.alpha[0]).epsilon(1e-9));
        }
}

TEST_CASE("reference bounds") {
    CHECK(reference_bound(100, 4, 3, BoundKind::Spencer) == doctest::Approx((2.0 / 3.0) * 100 / 2));
    CHECK(reference_bound(100, 4, 3, BoundKind::Spencer) == doctest::Approx(33.3333).epsilon(1e-5));
    const double main = reference_bound(1e6, std::exp(9.0), 4, BoundKind::Main);
    CHECK(main == doctest::Approx(1e6 / std::exp(9.0) * std::cbrt(9.0)));
    CHECK(main == doctest::Approx(256.7027).epsilon(1e-6));
    CHECK(reference_bound(1000, 10, 3, BoundKind::Log) == doctest::Approx(std::sqrt(100 * std::log(100.0))));
    CHECK(reference_bound(1000, 10, 3, BoundKind::LogLog) ==
          doctest::Approx(std::sqrt(100 * std::log(std::log(100.0)))));
    try {
        reference_bound(std::exp(1.0), 1.0, 3, BoundKind::LogLog);
        FAIL("expected OutOfDomain");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfDomain);
    }
    CHECK(bound_kind_from_string("Main") == BoundKind::Main);
}
