#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trendlab/marketdata.hpp"

namespace trendlab {

enum class IndicatorKind { Sma, Ema, Dema };

const char* indicator_name(IndicatorKind kind);
IndicatorKind parse_indicator(const std::string& text);

/// A rolling-average series aligned index-for-index with its source prices.
/// Entries before `warmup` are undefined (stored as NaN).
struct IndicatorSeries {
    IndicatorKind kind = IndicatorKind::Sma;
    int window = 1;
    std::size_t warmup = 0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    bool defined(std::size_t i) const { return i >= warmup; }
};

/// Simple moving average: value at i (0-based, i >= N-1) is the mean of the
/// trailing N closes. Maintained as a running sum, recomputed from scratch
/// every 4096 bars to bound floating-point drift.
IndicatorSeries sma(const PriceSeries& prices, int window);

/// Exponential moving average with alpha = 2/(N+1), seeded with the first
/// price. Defined at every index (warmup 0).
IndicatorSeries ema(const PriceSeries& prices, int window);

/// Double EMA: 2*EMA - EMA(EMA), both with the same window and seeding.
IndicatorSeries dema(const PriceSeries& prices, int window);

IndicatorSeries indicator(const PriceSeries& prices, IndicatorKind kind, int window);

/// Raw-buffer variants; the PriceSeries overloads delegate here and the
/// optimizer's shared cache uses them directly.
std::vector<double> sma_values(std::span<const double> prices, int window);
std::vector<double> ema_values(std::span<const double> prices, int window);
std::vector<double> dema_values(std::span<const double> prices, int window);

}  // namespace trendlab
