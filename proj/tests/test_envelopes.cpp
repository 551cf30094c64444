#include <cmath>

#include <doctest.h>

#include "mirrad/envelopes.hpp"
#include "mirrad/quadrature.hpp"

using namespace mirrad;

TEST_CASE("contact limits") {
    CHECK(envelope_f1(0.0) == doctest::Approx(14.0 / 15.0).epsilon(1e-15));
    CHECK(envelope_f2(0.0) == doctest::Approx(11.0 / 15.0).epsilon(1e-15));
    CHECK(envelope_f3(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(envelope_f4(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(envelope_f5(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(envelope_f6(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("even in x") {
    for (double x : {0.1, 0.49, 0.51, 3.7}) {
        CHECK(envelope_f1(-x) == envelope_f1(x));
        CHECK(envelope_f5(-x) == envelope_f5(x));
        CHECK(cosine_moment(2, -x) == cosine_moment(2, x));
    }
}

TEST_CASE("series and closed forms agree across the switch band") {
    double worst = 0.0;
    for (int i = 0; i <= 300; ++i) {
        const double x = 0.25 + 0.75 * i / 300.0;
        for (int idx = 1; idx <= 6; ++idx) {
            const double series = envelope_detail::series_form(idx, x);
            const double closed = envelope_detail::closed_form(idx, x);
            worst = std::max(worst, std::abs(series - closed) / std::abs(closed));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("moment representation reproduces every envelope") {
    // Each envelope equals a fixed direction-cosine moment of cos(2xu);
    // integrate the moments directly and compare.
    auto moment = [](double x, auto weight) {
        QuadratureOptions opts;
        opts.rel_tol = 1e-13;
        return adaptive_quad([&](double u) { return weight(u) * std::cos(2.0 * x * u); }, -1.0,
                             1.0, opts)
            .value;
    };
    for (double x : {0.3, 1.0, 4.0, 12.5}) {
        CHECK(envelope_f1(x) ==
              doctest::Approx(0.5 * moment(x, [](double u) {
                  return (1.0 - u * u) * (1.0 + 2.0 * u * u);
              })).epsilon(1e-10));
        CHECK(envelope_f2(x) == doctest::Approx(0.5 * moment(x, [](double u) {
                                    return u * u * (1.0 + 2.0 * u * u);
                                })).epsilon(1e-10));
        CHECK(envelope_f3(x) ==
              doctest::Approx(0.25 * moment(x, [](double u) { return 1.0 - u * u; }))
                  .epsilon(1e-10));
        CHECK(envelope_f4(x) ==
              doctest::Approx(moment(x, [](double u) { return u * u; })).epsilon(1e-10));
        CHECK(envelope_f5(x) ==
              doctest::Approx(0.5 * moment(x, [](double u) { return 1.0 - 2.0 * u * u; }))
                  .epsilon(1e-10));
    }
}

TEST_CASE("f6 is f4") {
    for (int i = 1; i <= 500; ++i) {
        const double x = 50.0 * i / 500.0;
        CHECK(envelope_f6(x) == envelope_f4(x));
    }
}

TEST_CASE("large-x decay bound") {
    for (int i = 0; i <= 970; ++i) {
        const double x = 3.0 + 0.1 * i;
        for (int idx = 1; idx <= 6; ++idx)
            CHECK(std::abs(envelope_detail::closed_form(idx, x)) <= 3.0 / x);
    }
}

TEST_CASE("cosine moments match direct quadrature") {
    QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    for (double x : {0.2, 0.7, 5.0}) {
        for (int n : {0, 1, 2}) {
            const double direct =
                adaptive_quad([&](double u) { return std::pow(u, 2 * n) * std::cos(2.0 * x * u); },
                              -1.0, 1.0, opts)
                    .value;
            CHECK(cosine_moment(n, x) == doctest::Approx(direct).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(cosine_moment(3, 1.0), std::invalid_argument);
}
