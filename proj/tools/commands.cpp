#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trendlab/analysis.hpp"
#include "trendlab/error.hpp"
#include "trendlab/strategy.hpp"
#include "trendlab/walkforward.hpp"

namespace trendlab::cli {

namespace fs = std::filesystem;

PriceSeries load_series(const DataOptions& data, RunManifest& manifest) {
    std::string content;
    std::string label = data.path;
    if (data.path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        content = buffer.str();
        label = "<stdin>";
    } else {
        std::ifstream file(data.path, std::ios::binary);
        if (!file) throw Error("no data: cannot open '" + data.path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        content = buffer.str();
        manifest.add_input(data.path);
    }

    std::istringstream stream(content);
    PriceSeries series;
    if (data.format == "ticks") {
        const TickSeries ticks = parse_tick_csv(stream);
        const Resolution res =
            parse_resolution(data.resample.empty() ? "1h" : data.resample);
        series = resample(ticks, res, fs::path(label).stem().string());
    } else if (data.format == "ohlc") {
        if (!data.resample.empty() && parse_resolution(data.resample) != Resolution::Daily) {
            throw Error("ohlc input is daily; cannot resample to " + data.resample);
        }
        series = parse_ohlc_csv(stream, fs::path(label).stem().string());
        if (series.empty()) throw Error("no data: '" + label + "' has no usable rows");
    } else {
        throw Error("unknown format '" + data.format + "' (expected ticks or ohlc)");
    }

    if (!data.from.empty() || !data.to.empty()) {
        const Timestamp from =
            data.from.empty() ? series.start() : parse_iso_date(data.from);
        const Timestamp to =
            data.to.empty() ? series.end_exclusive() : parse_iso_date(data.to);
        series = slice(series, from, to);
    }
    return series;
}

GridSpec resolve_grid(const GridOptions& options, Resolution resolution) {
    if (options.grid.empty()) {
        return resolution == Resolution::Hourly ? default_hourly_grid()
                                                : default_daily_grid();
    }
    GridSpec spec;
    char tail = 0;
    if (std::sscanf(options.grid.c_str(), "%d,%d,%d%c", &spec.min_window,
                    &spec.max_window, &spec.step, &tail) != 3) {
        throw Error("bad --grid '" + options.grid + "' (expected min,max,step)");
    }
    validate(spec);
    return spec;
}

BacktestConfig backtest_config(const CommonOptions& common) {
    if (common.initial_cash <= 0.0) throw Error("initial cash must be positive");
    return BacktestConfig{common.initial_cash, common.entry_on_start};
}

namespace {

fs::path prepare_out_dir(const CommonOptions& common) {
    fs::path dir(common.out_dir);
    fs::create_directories(dir);
    return dir;
}

nlohmann::json series_json(const PriceSeries& series) {
    return {{"asset_id", series.asset_id},
            {"resolution", resolution_name(series.resolution)},
            {"bars", series.size()},
            {"filled", series.filled_count()},
            {"start", format_iso_datetime(series.start())},
            {"end", format_iso_datetime(series.end_exclusive())}};
}

StrategySpec make_spec(const StrategyOptions& options) {
    StrategySpec spec{parse_indicator(options.kind), options.short_window,
                      options.long_window};
    validate(spec);
    return spec;
}

}  // namespace

int cmd_ingest(const DataOptions& data, const CommonOptions& common,
               RunManifest& manifest) {
    const PriceSeries series = load_series(data, manifest);
    const fs::path dir = prepare_out_dir(common);

    write_text(dir / "bars.csv", bars_csv(series));
    write_json(dir / "summary.json", series_json(series));
    manifest.outputs = {"bars.csv", "summary.json"};
    manifest.parameters = {{"format", data.format}, {"resample", data.resample}};
    manifest.write(dir);

    std::cout << series.asset_id << ": " << series.size() << " bars ("
              << series.filled_count() << " filled), "
              << format_iso_date(series.start()) << " to "
              << format_iso_date(series.end_exclusive()) << "\n";
    return 0;
}

int cmd_backtest(const DataOptions& data, const CommonOptions& common,
                 const StrategyOptions& strategy, RunManifest& manifest) {
    const StrategySpec spec = make_spec(strategy);
    const PriceSeries series = load_series(data, manifest);
    const BacktestConfig config = backtest_config(common);

    const SignalSeries signals = crossover_signals(series, spec, config.entry_on_start);
    const BacktestResult result = run_backtest(series, signals, config);
    const PerformanceMetrics metrics =
        compute_metrics(result, bars_per_year(series.resolution));

    const fs::path dir = prepare_out_dir(common);
    nlohmann::json doc;
    doc["series"] = series_json(series);
    doc["strategy"] = {{"kind", strategy.kind},
                       {"short", spec.short_window},
                       {"long", spec.long_window},
                       {"entry_on_start", config.entry_on_start}};
    doc["initial_cash"] = config.initial_cash;
    doc["bars_per_year"] = bars_per_year(series.resolution);
    doc["metrics"] = metrics_to_json(metrics);
    write_json(dir / "metrics.json", doc);
    write_text(dir / "equity.csv", equity_csv(series, result));
    write_text(dir / "trades.csv", trades_csv(series, result));

    manifest.outputs = {"metrics.json", "equity.csv", "trades.csv"};
    manifest.parameters = doc["strategy"];
    manifest.write(dir);

    std::cout << "sharpe="
              << (metrics.sharpe ? format_double(*metrics.sharpe) : "n/a")
              << " total_return=" << format_double(metrics.total_return)
              << " trades=" << metrics.n_trades << "\n";
    return 0;
}

int cmd_grid(const DataOptions& data, const CommonOptions& common,
             const std::string& kind, const GridOptions& grid, RunManifest& manifest) {
    const IndicatorKind indicator_kind = parse_indicator(kind);
    const PriceSeries series = load_series(data, manifest);
    const GridSpec grid_spec = resolve_grid(grid, series.resolution);
    const BacktestConfig config = backtest_config(common);

    const SharpeSurface surface =
        grid_search(series, indicator_kind, grid_spec, config, common.threads);

    const fs::path dir = prepare_out_dir(common);
    write_text(dir / "surface.csv", surface_csv(surface));
    nlohmann::json doc = surface_matrix_json(surface);
    try {
        const BestParams best = best_params(surface);
        doc["best"] = {{"short", best.short_window},
                       {"long", best.long_window},
                       {"metrics", metrics_to_json(best.metrics)}};
    } catch (const Error&) {
        doc["best"] = nullptr;  // surface exists but nothing tradeable
    }
    write_json(dir / "surface.json", doc);

    manifest.outputs = {"surface.csv", "surface.json"};
    manifest.parameters = {{"kind", kind},
                           {"grid", {{"min", grid_spec.min_window},
                                     {"max", grid_spec.max_window},
                                     {"step", grid_spec.step}}}};
    manifest.write(dir);

    std::cout << surface.cells.size() << " cells";
    if (!doc["best"].is_null()) {
        std::cout << ", best short=" << doc["best"]["short"]
                  << " long=" << doc["best"]["long"]
                  << " sharpe=" << doc["best"]["metrics"]["sharpe"];
    }
    std::cout << "\n";
    return 0;
}

int cmd_walkforward(const DataOptions& data, const CommonOptions& common,
                    const std::string& kind, const GridOptions& grid,
                    const std::string& annualization, RunManifest& manifest) {
    if (annualization != "geometric" && annualization != "arithmetic") {
        throw Error("bad --annualization '" + annualization +
                    "' (expected geometric or arithmetic)");
    }
    const IndicatorKind indicator_kind = parse_indicator(kind);
    const PriceSeries series = load_series(data, manifest);
    const GridSpec grid_spec = resolve_grid(grid, series.resolution);
    const BacktestConfig config = backtest_config(common);

    const WalkForwardReport report = walk_forward(series, indicator_kind, grid_spec,
                                                  config, kSecondsPerYear, common.threads);

    const fs::path dir = prepare_out_dir(common);
    nlohmann::json doc = walkforward_json(report, annualization);
    doc["series"] = series_json(series);
    doc["kind"] = kind;
    write_json(dir / "walkforward.json", doc);
    write_text(dir / "parameters.csv", walkforward_parameters_csv(report));

    manifest.outputs = {"walkforward.json", "parameters.csv"};
    manifest.parameters = {{"kind", kind},
                           {"annualization", annualization},
                           {"grid", {{"min", grid_spec.min_window},
                                     {"max", grid_spec.max_window},
                                     {"step", grid_spec.step}}}};
    manifest.write(dir);

    std::cout << report.periods.size() << " periods, combined_total_return="
              << format_double(report.combined_total_return) << "\n";
    return 0;
}

namespace {

PairedReturns strategy_paired_returns(const PriceSeries& a, const PriceSeries& b,
                                      const StrategySpec& spec,
                                      const BacktestConfig& config) {
    const auto equity_for = [&](const PriceSeries& series) {
        const SignalSeries signals =
            crossover_signals(series, spec, config.entry_on_start);
        return equity_series(series, run_backtest(series, signals, config));
    };
    return align_daily(equity_for(a), equity_for(b));
}

}  // namespace

int cmd_correlate(const DataOptions& data_a, const DataOptions& data_b,
                  const CommonOptions& common, int window,
                  const std::optional<StrategyOptions>& strategy,
                  RunManifest& manifest) {
    if (window < 2) throw Error("window < 2");
    const PriceSeries series_a = load_series(data_a, manifest);
    const PriceSeries series_b = load_series(data_b, manifest);

    const PairedReturns price_pairs =
        align_daily(to_value_series(series_a), to_value_series(series_b));
    const CorrelationSeries price_rolling = rolling_correlation(price_pairs, window);
    const CorrelationTest price_test = correlation_significance(price_pairs);

    const fs::path dir = prepare_out_dir(common);
    write_text(dir / "rolling_correlation.csv", correlation_csv(price_rolling));
    write_text(dir / "scatter.csv", scatter_csv(price_pairs));

    nlohmann::json doc;
    doc["window"] = window;
    doc["price_returns"] = significance_json(price_test);
    manifest.outputs = {"rolling_correlation.csv", "scatter.csv"};

    if (strategy) {
        const StrategySpec spec = make_spec(*strategy);
        const BacktestConfig config = backtest_config(common);
        const PairedReturns strat_pairs =
            strategy_paired_returns(series_a, series_b, spec, config);
        write_text(dir / "strategy_rolling_correlation.csv",
                   correlation_csv(rolling_correlation(strat_pairs, window)));
        write_text(dir / "strategy_scatter.csv", scatter_csv(strat_pairs));
        doc["strategy_returns"] = significance_json(correlation_significance(strat_pairs));
        doc["strategy"] = {{"kind", strategy->kind},
                           {"short", spec.short_window},
                           {"long", spec.long_window}};
        manifest.outputs.push_back("strategy_rolling_correlation.csv");
        manifest.outputs.push_back("strategy_scatter.csv");
    } else {
        doc["strategy_returns"] = nullptr;
    }
    write_json(dir / "significance.json", doc);
    manifest.outputs.push_back("significance.json");
    manifest.parameters = {{"window", window}};
    manifest.write(dir);

    std::cout << "n=" << price_test.n << " r=" << format_double(price_test.r)
              << " p=" << format_double(price_test.p_value) << "\n";
    return 0;
}

}  // namespace trendlab::cli
