#pragma once

#include <cstddef>
#include <vector>

#include "trendlab/marketdata.hpp"
#include "trendlab/strategy.hpp"

namespace trendlab {

struct BacktestConfig {
    double initial_cash = 10'000.0;
    bool entry_on_start = true;
};

enum class Side : std::uint8_t { Buy, Sell };

struct Trade {
    std::size_t bar = 0;
    Side side = Side::Buy;
    double price = 0.0;
    double units = 0.0;
};

/// Equity curve and trade list for one all-in long/flat run. Equity is
/// cash + units * close, recorded at every bar.
struct BacktestResult {
    std::vector<double> equity;
    std::vector<Trade> trades;
    std::size_t bars_in_market = 0;
};

/// All-in long/flat simulation: a Buy while flat converts all cash to units
/// at the bar's close, a Sell while long converts all units back to cash.
/// Fractional units, no fees, no slippage; open positions are marked to
/// market at the end.
BacktestResult run_backtest(const PriceSeries& prices, const SignalSeries& signals,
                            const BacktestConfig& config);

}  // namespace trendlab
