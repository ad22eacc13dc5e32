#include "trendlab/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "trendlab/error.hpp"
#include "trendlab/stats.hpp"

namespace trendlab {

std::vector<double> per_bar_returns(std::span<const double> equity) {
    if (equity.size() < 2) throw Error("insufficient data");
    std::vector<double> returns;
    returns.reserve(equity.size() - 1);
    for (std::size_t i = 1; i < equity.size(); ++i) {
        returns.push_back(equity[i] / equity[i - 1] - 1.0);
    }
    return returns;
}

std::optional<double> sharpe_ratio(std::span<const double> returns, double bars_per_year) {
    if (returns.empty()) return std::nullopt;
    const double sd = sample_stdev(returns);
    if (sd == 0.0) return std::nullopt;
    return mean(returns) / sd * std::sqrt(bars_per_year);
}

std::optional<double> sortino_ratio(std::span<const double> returns, double bars_per_year) {
    if (returns.empty()) return std::nullopt;
    double downside_sq = 0.0;
    for (const double r : returns) {
        const double d = std::min(r, 0.0);
        downside_sq += d * d;
    }
    const double downside_dev = std::sqrt(downside_sq / static_cast<double>(returns.size()));
    if (downside_dev == 0.0) return std::nullopt;
    return mean(returns) / downside_dev * std::sqrt(bars_per_year);
}

double max_drawdown(std::span<const double> equity) {
    double peak = 0.0;
    double worst = 0.0;
    for (const double e : equity) {
        peak = std::max(peak, e);
        worst = std::max(worst, (peak - e) / peak);
    }
    return worst;
}

double exposure(const BacktestResult& result) {
    if (result.equity.empty()) return 0.0;
    return static_cast<double>(result.bars_in_market) /
           static_cast<double>(result.equity.size());
}

std::pair<double, double> total_and_annualized_return(std::span<const double> equity,
                                                      double bars_per_year) {
    if (equity.size() < 2) throw Error("insufficient data");
    const double total = equity.back() / equity.front() - 1.0;
    const double periods = static_cast<double>(equity.size() - 1);
    const double annualized = std::pow(1.0 + total, bars_per_year / periods) - 1.0;
    return {total, annualized};
}

double annualized_return_arithmetic(std::span<const double> returns, double bars_per_year) {
    if (returns.empty()) return 0.0;
    return mean(returns) * bars_per_year;
}

PerformanceMetrics compute_metrics(const BacktestResult& result, double bars_per_year) {
    PerformanceMetrics m;
    m.n_trades = result.trades.size();
    m.exposure = exposure(result);
    if (result.equity.empty()) return m;
    m.max_drawdown = max_drawdown(result.equity);
    if (result.equity.size() < 2) return m;
    const std::vector<double> returns = per_bar_returns(result.equity);
    m.sharpe = sharpe_ratio(returns, bars_per_year);
    m.sortino = sortino_ratio(returns, bars_per_year);
    std::tie(m.total_return, m.annualized_return) =
        total_and_annualized_return(result.equity, bars_per_year);
    return m;
}

}  // namespace trendlab
