#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "trendlab/analysis.hpp"
#include "trendlab/error.hpp"
#include "trendlab/stats.hpp"

using namespace trendlab;
using test::make_series;

namespace {

ValueSeries daily_values(const std::vector<double>& values, std::int64_t first_day = 0) {
    ValueSeries out;
    out.resolution = Resolution::Daily;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.timestamps.push_back((first_day + static_cast<std::int64_t>(i)) *
                                 kSecondsPerDay);
        out.values.push_back(values[i]);
    }
    return out;
}

/// Paired returns with sample correlation exactly rho, via Gram-Schmidt.
PairedReturns constructed_pairs(std::size_t n, double rho, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(0.0, 0.01);
    std::vector<double> x(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = normal(rng);
        z[i] = normal(rng);
    }
    const double mx = mean(x), mz = mean(z);
    std::vector<double> cx(n), cz(n);
    for (std::size_t i = 0; i < n; ++i) {
        cx[i] = x[i] - mx;
        cz[i] = z[i] - mz;
    }
    double nx = 0.0, dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        nx += cx[i] * cx[i];
        dot += cz[i] * cx[i];
    }
    double nz = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cz[i] -= dot / nx * cx[i];  // orthogonal to cx, still zero-mean
        nz += cz[i] * cz[i];
    }
    PairedReturns pairs;
    pairs.a = x;
    pairs.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        pairs.b[i] = rho * cx[i] / std::sqrt(nx) +
                     std::sqrt(1.0 - rho * rho) * cz[i] / std::sqrt(nz);
        pairs.days.push_back(static_cast<std::int64_t>(i));
    }
    return pairs;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("align_daily pairs identical series with identical returns") {
    std::mt19937 rng(1);
    const std::vector<double> prices = test::random_walk_prices(rng, 30);
    const ValueSeries series = daily_values(prices);
    const PairedReturns pairs = align_daily(series, series);
    REQUIRE(pairs.size() == 29);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs.a[i] == pairs.b[i]);
        CHECK(pairs.a[i] == doctest::Approx(prices[i + 1] / prices[i] - 1.0));
    }
}

TEST_CASE("align_daily rejects disjoint date sets") {
    // Weekdays Mon Jan 5 1970.. vs the surrounding weekend days.
    ValueSeries weekdays = daily_values({1, 2, 3}, 4);   // days 4, 5, 6
    ValueSeries weekend = daily_values({1, 2}, 2);       // days 2, 3
    CHECK_THROWS_WITH_AS(align_daily(weekdays, weekend),
                         doctest::Contains("empty intersection"), Error);
}

TEST_CASE("align_daily reduces hourly input to the last bar of each day") {
    std::vector<double> hourly(48);
    for (std::size_t i = 0; i < hourly.size(); ++i) {
        hourly[i] = 100.0 + static_cast<double>(i);
    }
    const ValueSeries btc = to_value_series(make_series(hourly, Resolution::Hourly, 0));
    const ValueSeries spx = daily_values({50.0, 55.0});
    const PairedReturns pairs = align_daily(btc, spx);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs.a[0] == doctest::Approx(hourly[47] / hourly[23] - 1.0));
    CHECK(pairs.b[0] == doctest::Approx(0.1));
}

TEST_CASE("rolling correlation of a series with itself is one") {
    std::mt19937 rng(3);
    const std::vector<double> prices = test::random_walk_prices(rng, 120);
    const ValueSeries series = daily_values(prices);
    const PairedReturns pairs = align_daily(series, series);
    const CorrelationSeries corr = rolling_correlation(pairs, 20);
    for (std::size_t i = 0; i < corr.size(); ++i) {
        if (i < 19) {
            CHECK(std::isnan(corr.values[i]));
        } else {
            CHECK(corr.values[i] == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("rolling correlation of antithetic returns is minus one") {
    std::mt19937 rng(4);
    PairedReturns pairs;
    std::normal_distribution<double> normal(0.0, 0.01);
    for (int i = 0; i < 80; ++i) {
        const double r = normal(rng);
        pairs.days.push_back(i);
        pairs.a.push_back(r);
        pairs.b.push_back(-r);
    }
    const CorrelationSeries corr = rolling_correlation(pairs, 10);
    for (std::size_t i = 9; i < corr.size(); ++i) {
        CHECK(corr.values[i] == doctest::Approx(-1.0).epsilon(1e-9));
    }
}

TEST_CASE("rolling correlation of independent pairs centers near zero") {
    std::mt19937 rng(20200101);
    PairedReturns pairs;
    std::normal_distribution<double> normal(0.0, 0.015);
    for (int i = 0; i < 5000; ++i) {
        pairs.days.push_back(i);
        pairs.a.push_back(normal(rng));
        pairs.b.push_back(normal(rng));
    }
    const CorrelationSeries corr = rolling_correlation(pairs, 20);
    double sum = 0.0;
    std::size_t count = 0;
    for (const double v : corr.values) {
        if (!std::isnan(v)) {
            sum += v;
            ++count;
        }
    }
    CHECK(count == 5000 - 19);
    CHECK(std::fabs(sum / static_cast<double>(count)) < 0.05);
}

TEST_CASE("zero-variance windows are undefined") {
    PairedReturns pairs;
    for (int i = 0; i < 10; ++i) {
        pairs.days.push_back(i);
        pairs.a.push_back(0.01);  // constant
        pairs.b.push_back(i % 2 ? 0.02 : -0.01);
    }
    const CorrelationSeries corr = rolling_correlation(pairs, 4);
    for (std::size_t i = 3; i < corr.size(); ++i) CHECK(std::isnan(corr.values[i]));
}

TEST_CASE("rolling window bounds are validated") {
    PairedReturns pairs = constructed_pairs(30, 0.5, 9);
    CHECK_THROWS_WITH_AS(rolling_correlation(pairs, 1), doctest::Contains("window < 2"),
                         Error);
    CHECK_THROWS_AS(rolling_correlation(pairs, 31), Error);
}

TEST_CASE("full-length rolling window equals the full-period correlation") {
    const PairedReturns pairs = constructed_pairs(64, 0.3, 17);
    const CorrelationSeries corr =
        rolling_correlation(pairs, static_cast<int>(pairs.size()));
    const CorrelationTest test = correlation_significance(pairs);
    CHECK(corr.values.back() == doctest::Approx(test.r).epsilon(1e-9));
}

TEST_CASE("correlation is symmetric and affine-invariant") {
    PairedReturns pairs = constructed_pairs(100, -0.4, 23);
    PairedReturns swapped;
    swapped.days = pairs.days;
    swapped.a = pairs.b;
    swapped.b = pairs.a;
    CHECK(correlation_significance(pairs).r == correlation_significance(swapped).r);

    PairedReturns shifted = pairs;
    for (double& v : shifted.a) v = 3.5 * v + 0.001;
    for (double& v : shifted.b) v = 0.25 * v - 0.002;
    CHECK(correlation_significance(shifted).r ==
          doctest::Approx(correlation_significance(pairs).r).epsilon(1e-9));
}

TEST_CASE("significance null and boundary cases") {
    PairedReturns null_pairs;
    null_pairs.a = {1, -1, 1, -1};
    null_pairs.b = {1, 1, -1, -1};
    null_pairs.days = {0, 1, 2, 3};
    const CorrelationTest null_test = correlation_significance(null_pairs);
    CHECK(null_test.r == doctest::Approx(0.0));
    CHECK(null_test.t_statistic == doctest::Approx(0.0));
    CHECK(null_test.p_value == doctest::Approx(1.0));

    PairedReturns perfect;
    perfect.a = {0.01, -0.02, 0.03, 0.005};
    perfect.b = perfect.a;
    perfect.days = {0, 1, 2, 3};
    const CorrelationTest perfect_test = correlation_significance(perfect);
    CHECK(perfect_test.r == doctest::Approx(1.0));
    CHECK(std::isinf(perfect_test.t_statistic));
    CHECK(perfect_test.p_value == 0.0);

    PairedReturns degenerate;
    degenerate.a = {0.01, 0.01, 0.01};
    degenerate.b = {0.0, 0.02, 0.04};
    degenerate.days = {0, 1, 2};
    CHECK_THROWS_WITH_AS(correlation_significance(degenerate),
                         doctest::Contains("degenerate"), Error);

    PairedReturns tiny;
    tiny.a = {0.1, 0.2};
    tiny.b = {0.3, 0.1};
    tiny.days = {0, 1};
    CHECK_THROWS_AS(correlation_significance(tiny), Error);
}

TEST_CASE("the n=102 r=0.2 fixture reproduces the frozen t and p") {
    const PairedReturns pairs = constructed_pairs(102, 0.2, 102);
    const CorrelationTest test = correlation_significance(pairs);
    CHECK(test.r == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(test.t_statistic == doctest::Approx(2.041241452319315).epsilon(1e-9));
    CHECK(test.p_value == doctest::Approx(0.04386088426016922).epsilon(1e-6));
    // Same answer from the quadrature oracle.
    CHECK(test.p_value ==
          doctest::Approx(test::simpson_t_two_sided_p(test.t_statistic, 100)).epsilon(1e-6));
}

TEST_CASE("incomplete beta identities") {
    CHECK(incomplete_beta(1, 1, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
    CHECK(incomplete_beta(2, 1, 0.6) == doctest::Approx(0.36).epsilon(1e-12));
    for (const double x : {0.05, 0.3, 0.62, 0.97}) {
        CHECK(incomplete_beta(3.5, 1.25, x) ==
              doctest::Approx(1.0 - incomplete_beta(1.25, 3.5, 1.0 - x)).epsilon(1e-12));
    }
    for (const auto& [t, dof] : std::vector<std::pair<double, double>>{
             {1.0, 10.0}, {2.5, 30.0}, {0.3, 12.0}}) {
        CHECK(student_t_two_sided_p(t, dof) ==
              doctest::Approx(test::simpson_t_two_sided_p(t, dof)).epsilon(1e-6));
    }
}

TEST_SUITE_END();
