#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trendlab/analysis.hpp"
#include "trendlab/backtest.hpp"
#include "trendlab/metrics.hpp"
#include "trendlab/optimizer.hpp"
#include "trendlab/walkforward.hpp"

namespace trendlab::cli {

/// Reproducibility record written next to every command's outputs. The
/// manifest is the only file that may differ between identical runs (its
/// timestamps); everything else is byte-identical.
struct RunManifest {
    std::string command;
    std::string tool_version;
    std::string started;
    std::vector<std::pair<std::string, std::string>> input_files;  // path, digest
    nlohmann::json parameters;
    std::vector<std::string> outputs;

    void add_input(const std::filesystem::path& path);
    /// Stamps `finished` and writes manifest.json into out_dir.
    void write(const std::filesystem::path& out_dir);
};

RunManifest make_manifest(int argc, char** argv);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex chars.
std::string file_digest(const std::filesystem::path& path);

nlohmann::json metrics_to_json(const PerformanceMetrics& metrics);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& value);

std::string equity_csv(const PriceSeries& prices, const BacktestResult& result);
std::string trades_csv(const PriceSeries& prices, const BacktestResult& result);
std::string bars_csv(const PriceSeries& prices);
std::string surface_csv(const SharpeSurface& surface);
nlohmann::json surface_matrix_json(const SharpeSurface& surface);
nlohmann::json walkforward_json(const WalkForwardReport& report,
                                const std::string& annualization);
std::string walkforward_parameters_csv(const WalkForwardReport& report);
std::string correlation_csv(const CorrelationSeries& series);
std::string scatter_csv(const PairedReturns& pairs);
nlohmann::json significance_json(const CorrelationTest& test);

/// Fixed "%.12g" rendering so CSV output is byte-stable across runs.
std::string format_double(double value);

}  // namespace trendlab::cli
