#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hl/closed_form.hpp"
#include "hl/rng.hpp"
#include "hl/stats.hpp"

using namespace hl;
using namespace hl::closed_form;

TEST_CASE("c_alpha") {
    CHECK(c_alpha(0.5) == 0.0);
    CHECK(c_alpha(0.2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c_alpha(0.8) == doctest::Approx(-1.0).epsilon(1e-12));
    // Antisymmetry about 1/2.
    for (double a : {0.1, 0.23, 0.4}) CHECK(c_alpha(a) == doctest::Approx(-c_alpha(1 - a)));
    CHECK_THROWS_AS(c_alpha(0.0), std::domain_error);
    CHECK_THROWS_AS(c_alpha(1.0), std::domain_error);
}

TEST_CASE("expected_max_shifted closed form and MC oracle") {
    CHECK(expected_max_shifted(0.0) == 1.5);
    CHECK(expected_max_shifted(1.0) == doctest::Approx(2.0 + std::exp(-1.0) / 2));
    CHECK_THROWS_AS(expected_max_shifted(-0.1), std::domain_error);

    for (double c : {0.0, 1.0}) {
        Rng rng(RngSeed{77, static_cast<uint64_t>(c * 10)});
        RunningStats st;
        for (int i = 0; i < 1000000; ++i)
            st.push(std::max(rng.exponential(), rng.exponential() + c));
        CHECK(std::abs(st.mean() - expected_max_shifted(c)) <= 3 * st.std_error());
    }
}

TEST_CASE("expected_min_shifted_pair") {
    CHECK(expected_min_shifted_pair(0.5) == 0.5);
    CHECK_THROWS_AS(expected_min_shifted_pair(0.6), std::domain_error);
    CHECK_THROWS_AS(expected_min_shifted_pair(0.0), std::domain_error);
    CHECK(expected_min_shifted_pair(1e-12) < 1e-6);

    // MC oracle with offset bookkeeping. The direct expectation of
    // min{X1 + s1, X2 + s2} (s1 >= s2 >= 0) is s2 + 1 - e^(-(s1-s2))/2,
    // so the formula value e^(-c)/2 equals 1 + s2 - E[min].
    for (double a : {0.5, 0.3}) {
        double s1 = -0.5 * std::log2(a), s2 = -0.5 * std::log2(1 - a);
        Rng rng(RngSeed{78, static_cast<uint64_t>(a * 100)});
        RunningStats st;
        for (int i = 0; i < 1000000; ++i)
            st.push(std::min(rng.exponential() + s1, rng.exponential() + s2));
        CHECK(std::abs((1.0 + s2 - st.mean()) - expected_min_shifted_pair(a)) <=
              3 * st.std_error());
    }
}

TEST_CASE("g_heavy endpoints, interior, shape") {
    CHECK(g_heavy(0.0) == 1.0);
    CHECK(g_heavy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g_heavy(0.25) > 1.0);
    CHECK_THROWS_AS(g_heavy(0.6), std::domain_error);

    // Increasing then decreasing on [0, 1/2]: one sign change of
    // finite differences.
    const int N = 10000;
    int sign_changes = 0;
    double prev_diff = 0.0;
    double prev = g_heavy(0.0);
    for (int i = 1; i <= N; ++i) {
        double a = 0.5 * i / N;
        double v = g_heavy(a);
        double diff = v - prev;
        if (i > 1 && diff * prev_diff < 0) ++sign_changes;
        if (diff != 0) prev_diff = diff;
        prev = v;
        CHECK(v >= 1.0 - 1e-12);
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("g_heavy consistency with its own derivation chain") {
    for (int i = 1; i <= 100; ++i) {
        double a = 0.5 * i / 100;
        double lhs = g_heavy(a);
        double rhs = 0.5 * std::log2(a) + expected_max_shifted(c_alpha(a));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("g_heavy interior value vs MC of the defining expectation") {
    double a = 0.25;
    Rng rng(RngSeed{79, 0});
    RunningStats st;
    for (int i = 0; i < 1000000; ++i)
        st.push(std::max(rng.exponential() + 0.5 * std::log2(a),
                         rng.exponential() + 0.5 * std::log2(1 - a)));
    CHECK(std::abs(st.mean() - g_heavy(a)) <= 3 * st.std_error());
}

TEST_CASE("g_light nondecreasing with max 1/2 at a=1/2") {
    CHECK(g_light(0.0) == 0.0);
    CHECK(g_light(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        double a = 0.5 * i / 10000;
        double v = g_light(a);
        CHECK(v >= prev);
        CHECK(v <= 0.5 + 1e-15);
        prev = v;
    }
    CHECK(g_light(0.25) == doctest::Approx(0.5 * std::pow(1.0 / 3.0, 1.0 / std::log(4.0))));

    // MC oracle of the min-expectation at a = 1/4 with the same offset
    // bookkeeping as for expected_min_shifted_pair.
    double a = 0.25;
    double s2 = -0.5 * std::log2(1 - a);
    Rng rng(RngSeed{80, 0});
    RunningStats st;
    for (int i = 0; i < 1000000; ++i)
        st.push(std::min(rng.exponential() - 0.5 * std::log2(a),
                         rng.exponential() + s2));
    CHECK(std::abs((1.0 + s2 - st.mean()) - g_light(a)) <= 3 * st.std_error());
}

TEST_CASE("bound_report") {
    auto r1 = bound_report(1, 0.0);
    CHECK(r1.heavy_bound == 0.0);
    CHECK(r1.light_bound == 1.0);

    auto r2 = bound_report(10, 9.0);
    CHECK(r2.heavy_bound == 13.5);
    CHECK(r2.light_bound == 5.5);
    CHECK(r2.heavy_bound == r2.asymptotic_heavy - 1.0);

    CHECK(cubic_heavy_rate() == doctest::Approx(1.1038).epsilon(1e-4));
    CHECK(cubic_heavy_rate() > 1.1);
    CHECK(cubic_light_rate() == doctest::Approx(0.8962).epsilon(1e-3));
    CHECK(fold_half(0.7) == doctest::Approx(0.3));
}
