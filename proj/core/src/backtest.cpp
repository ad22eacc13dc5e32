#include "trendlab/backtest.hpp"

#include "trendlab/error.hpp"

namespace trendlab {

BacktestResult run_backtest(const PriceSeries& prices, const SignalSeries& signals,
                            const BacktestConfig& config) {
    if (prices.size() != signals.size()) {
        throw Error("signal series length does not match price series");
    }
    if (config.initial_cash <= 0.0) {
        throw Error("initial cash must be positive");
    }

    BacktestResult result;
    result.equity.resize(prices.size());

    double cash = config.initial_cash;
    double units = 0.0;
    for (std::size_t i = 0; i < prices.size(); ++i) {
        const double close = prices.close(i);
        switch (signals.signals[i]) {
            case Signal::Buy:
                if (units == 0.0) {
                    units = cash / close;
                    result.trades.push_back(Trade{i, Side::Buy, close, units});
                    cash = 0.0;
                }
                break;
            case Signal::Sell:
                if (units != 0.0) {
                    cash = units * close;
                    result.trades.push_back(Trade{i, Side::Sell, close, units});
                    units = 0.0;
                }
                break;
            case Signal::Hold:
                break;
        }
        result.equity[i] = cash + units * close;
        if (units != 0.0) ++result.bars_in_market;
    }
    return result;
}

}  // namespace trendlab
