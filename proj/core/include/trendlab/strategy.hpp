#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trendlab/indicators.hpp"
#include "trendlab/marketdata.hpp"

namespace trendlab {

enum class Signal : std::uint8_t { Hold, Buy, Sell };

/// A crossover strategy: one indicator kind evaluated at a short and a long
/// window, with 1 <= short < long.
struct StrategySpec {
    IndicatorKind kind = IndicatorKind::Sma;
    int short_window = 0;
    int long_window = 0;
};

void validate(const StrategySpec& spec);

/// Per-bar trade directives aligned to the source price series. Everything
/// before `first_active` (the first bar where both indicators are defined)
/// is Hold, and Buy/Sell entries strictly alternate.
struct SignalSeries {
    std::vector<Signal> signals;
    std::size_t first_active = 0;

    std::size_t size() const { return signals.size(); }
};

/// Crossover rule: Buy when the short average rises above the long average,
/// Sell when it falls below; equality holds the current state. With
/// entry_on_start the first defined bar emits the signal matching the
/// initial ordering; otherwise the strategy waits for a true crossing.
SignalSeries crossover_signals(const PriceSeries& prices, const StrategySpec& spec,
                               bool entry_on_start = true);

/// Same state machine over two precomputed indicator series (the grid
/// search path; must agree with crossover_signals bit for bit).
SignalSeries crossover_from_indicators(std::span<const double> short_values,
                                       std::size_t short_warmup,
                                       std::span<const double> long_values,
                                       std::size_t long_warmup,
                                       bool entry_on_start = true);

}  // namespace trendlab
