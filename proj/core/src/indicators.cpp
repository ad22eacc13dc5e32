#include "trendlab/indicators.hpp"

#include <limits>

#include "trendlab/error.hpp"

namespace trendlab {

namespace {

constexpr std::size_t kRollingRefreshInterval = 4096;

void validate_window(int window, std::size_t length) {
    if (window < 1) throw Error("invalid window " + std::to_string(window));
    if (static_cast<std::size_t>(window) > length) throw Error("window exceeds data");
}

}  // namespace

const char* indicator_name(IndicatorKind kind) {
    switch (kind) {
        case IndicatorKind::Sma: return "sma";
        case IndicatorKind::Ema: return "ema";
        case IndicatorKind::Dema: return "dema";
    }
    return "?";
}

IndicatorKind parse_indicator(const std::string& text) {
    if (text == "sma") return IndicatorKind::Sma;
    if (text == "ema") return IndicatorKind::Ema;
    if (text == "dema") return IndicatorKind::Dema;
    throw Error("unknown strategy kind '" + text + "' (expected sma, ema or dema)");
}

std::vector<double> sma_values(std::span<const double> prices, int window) {
    validate_window(window, prices.size());
    const std::size_t n = prices.size();
    const std::size_t w = static_cast<std::size_t>(window);
    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += prices[i];
        if (i >= w) sum -= prices[i - w];
        if (i + 1 >= w) {
            if ((i + 1) % kRollingRefreshInterval == 0) {
                // Rebuild the running sum to shed accumulated rounding error.
                sum = 0.0;
                for (std::size_t j = i + 1 - w; j <= i; ++j) sum += prices[j];
            }
            out[i] = sum / static_cast<double>(w);
        }
    }
    return out;
}

std::vector<double> ema_values(std::span<const double> prices, int window) {
    validate_window(window, prices.size());
    const double alpha = 2.0 / (window + 1.0);
    std::vector<double> out(prices.size());
    out[0] = prices[0];  // seed: first observation
    for (std::size_t i = 1; i < prices.size(); ++i) {
        out[i] = alpha * prices[i] + (1.0 - alpha) * out[i - 1];
    }
    return out;
}

std::vector<double> dema_values(std::span<const double> prices, int window) {
    std::vector<double> e = ema_values(prices, window);
    const std::vector<double> ee = ema_values(e, window);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = 2.0 * e[i] - ee[i];
    }
    return e;
}

namespace {

IndicatorSeries wrap(IndicatorKind kind, int window, std::size_t warmup,
                     std::vector<double> values) {
    IndicatorSeries series;
    series.kind = kind;
    series.window = window;
    series.warmup = warmup;
    series.values = std::move(values);
    return series;
}

}  // namespace

IndicatorSeries sma(const PriceSeries& prices, int window) {
    return wrap(IndicatorKind::Sma, window, static_cast<std::size_t>(window) - 1,
                sma_values(prices.closes(), window));
}

IndicatorSeries ema(const PriceSeries& prices, int window) {
    return wrap(IndicatorKind::Ema, window, 0, ema_values(prices.closes(), window));
}

IndicatorSeries dema(const PriceSeries& prices, int window) {
    return wrap(IndicatorKind::Dema, window, 0, dema_values(prices.closes(), window));
}

IndicatorSeries indicator(const PriceSeries& prices, IndicatorKind kind, int window) {
    switch (kind) {
        case IndicatorKind::Sma: return sma(prices, window);
        case IndicatorKind::Ema: return ema(prices, window);
        case IndicatorKind::Dema: return dema(prices, window);
    }
    throw Error("unknown indicator kind");
}

}  // namespace trendlab
