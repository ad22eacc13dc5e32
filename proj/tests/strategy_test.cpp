#include <doctest.h>

#include "testutil.hpp"
#include "trendlab/error.hpp"
#include "trendlab/strategy.hpp"

using namespace trendlab;
using test::make_series;

namespace {

std::vector<Signal> signals_of(const std::vector<double>& prices, IndicatorKind kind,
                               int short_w, int long_w, bool entry_on_start = true) {
    return crossover_signals(make_series(prices), StrategySpec{kind, short_w, long_w},
                             entry_on_start)
        .signals;
}

}  // namespace

TEST_SUITE_BEGIN("strategy");

TEST_CASE("equality at the first defined bar holds until a real ordering") {
    // SMA(1) vs SMA(3) on a step series: both averages are 1 at bar 2, Buy
    // fires at bar 3 when the short average jumps ahead.
    const auto s = signals_of({1, 1, 1, 10, 10, 10}, IndicatorKind::Sma, 1, 3);
    const std::vector<Signal> expected = {Signal::Hold, Signal::Hold, Signal::Hold,
                                          Signal::Buy, Signal::Hold, Signal::Hold};
    CHECK(s == expected);
}

TEST_CASE("constant prices never cross") {
    const auto s = signals_of(std::vector<double>(30, 4.0), IndicatorKind::Sma, 3, 9);
    for (const Signal sig : s) CHECK(sig == Signal::Hold);
}

TEST_CASE("a falling series sells at the first defined bar") {
    const auto s = signals_of({10, 9, 8, 7, 6}, IndicatorKind::Sma, 1, 2);
    const std::vector<Signal> expected = {Signal::Hold, Signal::Sell, Signal::Hold,
                                          Signal::Hold, Signal::Hold};
    CHECK(s == expected);
}

TEST_CASE("entry_on_start=false waits for a true crossing") {
    const auto falling =
        signals_of({10, 9, 8, 7, 6}, IndicatorKind::Sma, 1, 2, false);
    for (const Signal sig : falling) CHECK(sig == Signal::Hold);

    // Down then up: the initial Sell is suppressed, the Buy crossing is not.
    const auto vee = signals_of({10, 9, 8, 7, 9, 12, 14}, IndicatorKind::Sma, 1, 3, false);
    std::size_t buys = 0, sells = 0;
    for (const Signal sig : vee) {
        buys += sig == Signal::Buy;
        sells += sig == Signal::Sell;
    }
    CHECK(buys == 1);
    CHECK(sells == 0);
}

TEST_CASE("first_active matches the slower indicator") {
    const SignalSeries s = crossover_signals(
        make_series({1, 2, 3, 4, 5, 6}), StrategySpec{IndicatorKind::Sma, 2, 4});
    CHECK(s.first_active == 3);
    for (std::size_t i = 0; i < s.first_active; ++i) CHECK(s.signals[i] == Signal::Hold);

    const SignalSeries e = crossover_signals(
        make_series({1, 2, 3, 4, 5, 6}), StrategySpec{IndicatorKind::Ema, 2, 4});
    CHECK(e.first_active == 0);
}

TEST_CASE("StrategySpec validation") {
    const PriceSeries prices = make_series({1, 2, 3, 4});
    CHECK_THROWS_WITH_AS(
        crossover_signals(prices, StrategySpec{IndicatorKind::Sma, 3, 3}),
        doctest::Contains("short must be < long"), Error);
    CHECK_THROWS_AS(crossover_signals(prices, StrategySpec{IndicatorKind::Sma, 0, 2}),
                    Error);
    CHECK_THROWS_WITH_AS(
        crossover_signals(prices, StrategySpec{IndicatorKind::Sma, 2, 5}),
        doctest::Contains("window exceeds data"), Error);
}

TEST_CASE("buy and sell strictly alternate on random walks") {
    std::mt19937 rng(314159);
    for (int round = 0; round < 60; ++round) {
        const std::vector<double> prices =
            test::random_walk_prices(rng, 300, 100.0, 0.0, 0.03);
        for (const bool entry : {true, false}) {
            const auto s = signals_of(prices, IndicatorKind::Sma, 3, 17, entry);
            Signal last = Signal::Hold;
            for (const Signal sig : s) {
                if (sig == Signal::Hold) continue;
                CHECK(sig != last);
                last = sig;
            }
        }
    }
}

TEST_CASE("signals are invariant under uniform price scaling") {
    std::mt19937 rng(2718);
    const std::vector<double> prices = test::random_walk_prices(rng, 400, 50.0, 0.0, 0.02);
    for (const double factor : {1e-3, 7.0, 1e4}) {
        std::vector<double> scaled = prices;
        for (double& p : scaled) p *= factor;
        for (const IndicatorKind kind :
             {IndicatorKind::Sma, IndicatorKind::Ema, IndicatorKind::Dema}) {
            CHECK(signals_of(prices, kind, 5, 21) == signals_of(scaled, kind, 5, 21));
        }
    }
}

TEST_CASE("non-hold count is bounded by indicator sign changes plus one") {
    std::mt19937 rng(5);
    for (int round = 0; round < 40; ++round) {
        const std::vector<double> prices =
            test::random_walk_prices(rng, 250, 100.0, 0.0, 0.025);
        const PriceSeries series = make_series(prices);
        const IndicatorSeries short_ind = sma(series, 4);
        const IndicatorSeries long_ind = sma(series, 12);

        std::size_t sign_changes = 0;
        int last_sign = 0;
        for (std::size_t i = long_ind.warmup; i < prices.size(); ++i) {
            const double diff = short_ind.values[i] - long_ind.values[i];
            const int sign = diff > 0 ? 1 : diff < 0 ? -1 : 0;
            if (sign != 0) {
                if (last_sign != 0 && sign != last_sign) ++sign_changes;
                last_sign = sign;
            }
        }
        const auto s = signals_of(prices, IndicatorKind::Sma, 4, 12);
        std::size_t non_hold = 0;
        for (const Signal sig : s) non_hold += sig != Signal::Hold;
        CHECK(non_hold <= sign_changes + 1);
    }
}

TEST_SUITE_END();
