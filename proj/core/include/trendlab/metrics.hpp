#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trendlab/backtest.hpp"

namespace trendlab {

/// Risk and return statistics of one equity curve. Sharpe and Sortino are
/// absent (not zero) when undefined: zero trades or zero return variance.
struct PerformanceMetrics {
    std::optional<double> sharpe;
    std::optional<double> sortino;
    double max_drawdown = 0.0;
    double exposure = 0.0;
    double total_return = 0.0;
    double annualized_return = 0.0;
    std::size_t n_trades = 0;
};

/// Simple per-bar returns r_t = e_t / e_{t-1} - 1. Length is input - 1.
std::vector<double> per_bar_returns(std::span<const double> equity);

/// Annualized mean/stdev ratio with zero risk-free rate; sample (n-1)
/// standard deviation. Absent when the deviation is zero.
std::optional<double> sharpe_ratio(std::span<const double> returns, double bars_per_year);

/// Annualized mean over downside deviation, where the downside deviation is
/// the root mean square of min(r, 0) over all n returns (target 0).
std::optional<double> sortino_ratio(std::span<const double> returns, double bars_per_year);

/// Largest peak-to-trough fraction of the running maximum. 0 for monotone
/// non-decreasing curves.
double max_drawdown(std::span<const double> equity);

/// Fraction of bars holding a nonzero position at the bar's close.
double exposure(const BacktestResult& result);

/// (total, annualized) return; annualization is geometric:
/// (1 + total)^(bars_per_year / (len - 1)) - 1.
std::pair<double, double> total_and_annualized_return(std::span<const double> equity,
                                                      double bars_per_year);

/// Arithmetic alternative: mean per-bar return scaled by bars_per_year.
double annualized_return_arithmetic(std::span<const double> returns, double bars_per_year);

PerformanceMetrics compute_metrics(const BacktestResult& result, double bars_per_year);

}  // namespace trendlab
