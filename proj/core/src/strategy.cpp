#include "trendlab/strategy.hpp"

#include <algorithm>

#include "trendlab/error.hpp"

namespace trendlab {

void validate(const StrategySpec& spec) {
    if (spec.short_window < 1) {
        throw Error("invalid window " + std::to_string(spec.short_window));
    }
    if (spec.short_window >= spec.long_window) {
        throw Error("short must be < long");
    }
}

SignalSeries crossover_from_indicators(std::span<const double> short_values,
                                       std::size_t short_warmup,
                                       std::span<const double> long_values,
                                       std::size_t long_warmup,
                                       bool entry_on_start) {
    const std::size_t n = short_values.size();
    SignalSeries out;
    out.signals.assign(n, Signal::Hold);
    out.first_active = std::min(n, std::max(short_warmup, long_warmup));

    enum class State { Unset, Above, Below };
    State state = State::Unset;
    for (std::size_t i = out.first_active; i < n; ++i) {
        const double s = short_values[i];
        const double l = long_values[i];
        if (s > l && state != State::Above) {
            // A crossing from the unset state is the series-start entry; it
            // only trades when entry_on_start is enabled.
            if (state != State::Unset || entry_on_start) out.signals[i] = Signal::Buy;
            state = State::Above;
        } else if (s < l && state != State::Below) {
            if (state != State::Unset || entry_on_start) out.signals[i] = Signal::Sell;
            state = State::Below;
        }
        // Equality emits Hold and leaves the state unchanged.
    }
    return out;
}

SignalSeries crossover_signals(const PriceSeries& prices, const StrategySpec& spec,
                               bool entry_on_start) {
    validate(spec);
    if (static_cast<std::size_t>(spec.long_window) > prices.size()) {
        throw Error("window exceeds data");
    }
    const IndicatorSeries short_ind = indicator(prices, spec.kind, spec.short_window);
    const IndicatorSeries long_ind = indicator(prices, spec.kind, spec.long_window);
    return crossover_from_indicators(short_ind.values, short_ind.warmup,
                                     long_ind.values, long_ind.warmup, entry_on_start);
}

}  // namespace trendlab
