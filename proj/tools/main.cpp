#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "trendlab/error.hpp"
#include "trendlab/version.hpp"

namespace {

using trendlab::cli::CommonOptions;
using trendlab::cli::DataOptions;
using trendlab::cli::GridOptions;
using trendlab::cli::StrategyOptions;

void add_data_options(CLI::App* cmd, DataOptions& data, bool required = true) {
    auto* opt = cmd->add_option("--data", data.path, "Input CSV ('-' for stdin)");
    if (required) opt->required();
    cmd->add_option("--format", data.format, "Input format: ticks|ohlc")
        ->check(CLI::IsMember({"ticks", "ohlc"}))
        ->capture_default_str();
    cmd->add_option("--resample", data.resample, "Bar resolution: 1h|1d (ticks default 1h)");
    cmd->add_option("--from", data.from, "Slice start, ISO date (inclusive)");
    cmd->add_option("--to", data.to, "Slice end, ISO date (exclusive)");
}

void add_common_options(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--out", common.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--threads", common.threads, "Worker threads (0 = all cores)")
        ->envname("TRENDLAB_THREADS");
    cmd->add_option("--entry-on-start", common.entry_on_start,
                    "Enter at the first bar matching the indicator ordering")
        ->capture_default_str();
    cmd->add_option("--cash", common.initial_cash, "Starting cash")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moving-average trend-following backtester"};
    app.set_version_flag("--version", trendlab::kVersion);
    app.require_subcommand(1);

    DataOptions data;
    CommonOptions common;
    StrategyOptions strategy;
    GridOptions grid;
    std::string annualization = "geometric";

    auto* ingest = app.add_subcommand("ingest", "Parse, resample and inspect a price file");
    add_data_options(ingest, data);
    add_common_options(ingest, common);

    auto* backtest = app.add_subcommand("backtest", "Run one crossover strategy");
    add_data_options(backtest, data);
    add_common_options(backtest, common);
    backtest->add_option("--kind", strategy.kind, "Indicator: sma|ema|dema")
        ->capture_default_str();
    backtest->add_option("--short", strategy.short_window, "Short window (bars)")
        ->required();
    backtest->add_option("--long", strategy.long_window, "Long window (bars)")
        ->required();

    auto* grid_cmd = app.add_subcommand("grid", "Sharpe surface over the (short, long) grid");
    add_data_options(grid_cmd, data);
    add_common_options(grid_cmd, common);
    grid_cmd->add_option("--kind", strategy.kind, "Indicator: sma|ema|dema")
        ->capture_default_str();
    grid_cmd->add_option("--grid", grid.grid, "Window grid as min,max,step");

    auto* walk = app.add_subcommand("walkforward", "Yearly walk-forward evaluation");
    add_data_options(walk, data);
    add_common_options(walk, common);
    walk->add_option("--kind", strategy.kind, "Indicator: sma|ema|dema")
        ->capture_default_str();
    walk->add_option("--grid", grid.grid, "Window grid as min,max,step");
    walk->add_option("--annualization", annualization,
                     "Combined-return annualization: geometric|arithmetic")
        ->capture_default_str();

    DataOptions data_b;
    int window = 20;
    auto* correlate = app.add_subcommand("correlate", "Cross-asset daily return correlation");
    add_data_options(correlate, data);
    correlate->add_option("--data2", data_b.path, "Second input CSV")->required();
    correlate->add_option("--format2", data_b.format, "Second input format: ticks|ohlc")
        ->check(CLI::IsMember({"ticks", "ohlc"}))
        ->capture_default_str();
    correlate->add_option("--resample2", data_b.resample, "Second input resolution");
    correlate->add_option("--window", window, "Rolling window (days)")
        ->capture_default_str();
    correlate->add_option("--kind", strategy.kind,
                          "Also correlate strategy equity returns of this indicator");
    correlate->add_option("--short", strategy.short_window, "Short window (bars)");
    correlate->add_option("--long", strategy.long_window, "Long window (bars)");
    add_common_options(correlate, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    auto manifest = trendlab::cli::make_manifest(argc, argv);
    try {
        if (ingest->parsed()) return cmd_ingest(data, common, manifest);
        if (backtest->parsed()) return cmd_backtest(data, common, strategy, manifest);
        if (grid_cmd->parsed()) {
            return cmd_grid(data, common, strategy.kind, grid, manifest);
        }
        if (walk->parsed()) {
            return cmd_walkforward(data, common, strategy.kind, grid, annualization,
                                   manifest);
        }
        if (correlate->parsed()) {
            data_b.from = data.from;
            data_b.to = data.to;
            std::optional<StrategyOptions> strat;
            if (correlate->count("--kind")) strat = strategy;
            return cmd_correlate(data, data_b, common, window, strat, manifest);
        }
    } catch (const trendlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
