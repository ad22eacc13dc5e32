#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "trendlab/marketdata.hpp"

namespace trendlab::bench {

inline PriceSeries synthetic_hourly(std::size_t bars, unsigned seed = 42) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> step(0.0001, 0.012);
    PriceSeries series;
    series.asset_id = "bench";
    series.resolution = Resolution::Hourly;
    double price = 20.0;
    for (std::size_t i = 0; i < bars; ++i) {
        price *= std::exp(step(rng));
        series.bars.push_back(
            Bar{static_cast<Timestamp>(i) * kSecondsPerHour, price, false});
    }
    return series;
}

}  // namespace trendlab::bench
