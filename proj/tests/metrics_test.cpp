#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "testutil.hpp"
#include "trendlab/error.hpp"
#include "trendlab/metrics.hpp"

using namespace trendlab;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("per_bar_returns") {
    const std::vector<double> r = per_bar_returns(std::vector<double>{100, 110, 99});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(0.10));
    CHECK(r[1] == doctest::Approx(-0.10));

    const std::vector<double> flat = per_bar_returns(std::vector<double>{5, 5, 5});
    for (const double x : flat) CHECK(x == 0.0);

    CHECK_THROWS_WITH_AS(per_bar_returns(std::vector<double>{100}),
                         doctest::Contains("insufficient data"), Error);
}

TEST_CASE("sharpe_ratio") {
    CHECK(*sharpe_ratio(std::vector<double>{0.01, -0.01, 0.01, -0.01}, 1) ==
          doctest::Approx(0.0));
    CHECK_FALSE(sharpe_ratio(std::vector<double>{0, 0, 0}, 8760).has_value());
    // mean 0.02 over sample stdev sqrt(2e-4), annualized by sqrt(8760).
    CHECK(*sharpe_ratio(std::vector<double>{0.01, 0.03}, 8760) ==
          doctest::Approx(132.36313686219438).epsilon(1e-9));
}

TEST_CASE("sortino_ratio") {
    CHECK_FALSE(sortino_ratio(std::vector<double>{0.01, 0.02}, 1).has_value());
    CHECK(*sortino_ratio(std::vector<double>{0.02, -0.02}, 1) == doctest::Approx(0.0));
    // mean -0.01, downside rms 0.01: exactly -1 at one bar per year.
    CHECK(*sortino_ratio(std::vector<double>{-0.01, -0.01}, 1) ==
          doctest::Approx(-1.0));
}

TEST_CASE("max_drawdown") {
    CHECK(max_drawdown(std::vector<double>{10, 5, 8}) == doctest::Approx(0.5));
    CHECK(max_drawdown(std::vector<double>{1, 2, 3, 4}) == 0.0);
    CHECK(max_drawdown(std::vector<double>{10, 12, 6, 11}) == doctest::Approx(0.5));
}

TEST_CASE("exposure counts bars holding at the close") {
    BacktestResult result;
    result.equity.assign(10, 1.0);
    result.bars_in_market = 0;
    CHECK(exposure(result) == 0.0);
    result.bars_in_market = 3;  // bought at bar 2, sold at bar 5
    CHECK(exposure(result) == doctest::Approx(0.3));
    result.bars_in_market = 10;  // long from bar 0 onward
    CHECK(exposure(result) == doctest::Approx(1.0));
}

TEST_CASE("total and annualized return") {
    // Doubling over exactly one year of bars.
    std::vector<double> year(8761);
    for (std::size_t i = 0; i < year.size(); ++i) {
        year[i] = 100.0 * std::pow(2.0, static_cast<double>(i) / 8760.0);
    }
    auto [total, annualized] = total_and_annualized_return(year, 8760);
    CHECK(total == doctest::Approx(1.0));
    CHECK(annualized == doctest::Approx(1.0));

    auto [t0, a0] = total_and_annualized_return(std::vector<double>{7, 7, 7}, 8760);
    CHECK(t0 == 0.0);
    CHECK(a0 == 0.0);

    // 738x over eight years of annual bars.
    std::vector<double> eight(9);
    for (std::size_t i = 0; i < eight.size(); ++i) {
        eight[i] = std::pow(738.0, static_cast<double>(i) / 8.0);
    }
    auto [t8, a8] = total_and_annualized_return(eight, 1);
    CHECK(t8 == doctest::Approx(737.0).epsilon(1e-9));
    CHECK(a8 == doctest::Approx(1.2830059598418346).epsilon(1e-6));

    CHECK_THROWS_AS(total_and_annualized_return(std::vector<double>{1.0}, 1), Error);
}

TEST_CASE("metrics of a zero-trade backtest") {
    BacktestResult result;
    result.equity.assign(50, 10'000.0);
    const PerformanceMetrics m = compute_metrics(result, 8760);
    CHECK_FALSE(m.sharpe.has_value());
    CHECK_FALSE(m.sortino.has_value());
    CHECK(m.max_drawdown == 0.0);
    CHECK(m.exposure == 0.0);
    CHECK(m.total_return == 0.0);
    CHECK(m.n_trades == 0);
}

TEST_CASE("metrics are invariant under uniform equity scaling") {
    std::mt19937 rng(8);
    std::vector<double> equity = test::random_walk_prices(rng, 400, 10'000.0, 0.0, 0.02);
    BacktestResult base;
    base.equity = equity;
    base.bars_in_market = 200;
    const PerformanceMetrics m0 = compute_metrics(base, 8760);

    BacktestResult scaled = base;
    for (double& e : scaled.equity) e *= 1e4;
    const PerformanceMetrics m1 = compute_metrics(scaled, 8760);

    CHECK(*m1.sharpe == doctest::Approx(*m0.sharpe).epsilon(1e-9));
    CHECK(*m1.sortino == doctest::Approx(*m0.sortino).epsilon(1e-9));
    CHECK(m1.max_drawdown == doctest::Approx(m0.max_drawdown).epsilon(1e-9));
    CHECK(m1.total_return == doctest::Approx(m0.total_return).epsilon(1e-9));
    CHECK(m1.annualized_return == doctest::Approx(m0.annualized_return).epsilon(1e-9));
}

TEST_CASE("ratios flip sign when returns are negated") {
    const std::vector<double> returns = {0.02, -0.01, 0.015, -0.03, 0.01};
    std::vector<double> negated = returns;
    for (double& r : negated) r = -r;

    CHECK(*sharpe_ratio(negated, 252) == doctest::Approx(-*sharpe_ratio(returns, 252)));

    // Sortino sign flip holds for sets symmetric about zero, where downside
    // rms of -r equals that of r.
    const std::vector<double> symmetric = {0.02, -0.02, 0.01, -0.01, 0.005, -0.005, 0.03};
    std::vector<double> mirrored = symmetric;
    for (double& r : mirrored) r = -r;
    const double up = *sortino_ratio(symmetric, 252);
    const double down = *sortino_ratio(mirrored, 252);
    CHECK(up > 0.0);
    CHECK(down < 0.0);
}

TEST_CASE("drawdown is zero exactly for monotone non-decreasing curves") {
    std::mt19937 rng(12);
    for (int round = 0; round < 50; ++round) {
        std::vector<double> equity = test::random_walk_prices(rng, 100, 50.0, 0.0, 0.03);
        const bool monotone = [&] {
            for (std::size_t i = 1; i < equity.size(); ++i) {
                if (equity[i] < equity[i - 1]) return false;
            }
            return true;
        }();
        CHECK((max_drawdown(equity) == 0.0) == monotone);

        std::sort(equity.begin(), equity.end());
        CHECK(max_drawdown(equity) == 0.0);
    }
}

TEST_SUITE_END();
