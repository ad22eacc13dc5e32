#include "reports.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include "trendlab/error.hpp"
#include "trendlab/time.hpp"
#include "trendlab/version.hpp"

namespace trendlab::cli {

namespace {

std::string now_iso() {
    const auto now = std::chrono::system_clock::now();
    return format_iso_datetime(std::chrono::duration_cast<std::chrono::seconds>(
                                   now.time_since_epoch())
                                   .count());
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("no data: cannot open '" + path.string() + "'");
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char chunk[65536];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 0x100000001b3ull;
        }
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

RunManifest make_manifest(int argc, char** argv) {
    RunManifest manifest;
    for (int i = 0; i < argc; ++i) {
        if (i) manifest.command += ' ';
        manifest.command += argv[i];
    }
    manifest.tool_version = kVersion;
    manifest.started = now_iso();
    return manifest;
}

void RunManifest::add_input(const std::filesystem::path& path) {
    input_files.emplace_back(path.string(), file_digest(path));
}

void RunManifest::write(const std::filesystem::path& out_dir) {
    nlohmann::json doc;
    doc["command"] = command;
    doc["tool_version"] = tool_version;
    doc["started"] = started;
    doc["finished"] = now_iso();
    doc["input_files"] = nlohmann::json::array();
    for (const auto& [path, digest] : input_files) {
        doc["input_files"].push_back({{"path", path}, {"digest", digest}});
    }
    doc["parameters"] = parameters;
    doc["outputs"] = outputs;
    write_json(out_dir / "manifest.json", doc);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
    write_text(path, value.dump(2) + "\n");
}

nlohmann::json metrics_to_json(const PerformanceMetrics& m) {
    nlohmann::json doc;
    doc["sharpe"] = m.sharpe ? nlohmann::json(*m.sharpe) : nlohmann::json(nullptr);
    doc["sortino"] = m.sortino ? nlohmann::json(*m.sortino) : nlohmann::json(nullptr);
    doc["max_drawdown"] = m.max_drawdown;
    doc["exposure"] = m.exposure;
    doc["total_return"] = m.total_return;
    doc["annualized_return"] = m.annualized_return;
    doc["n_trades"] = m.n_trades;
    return doc;
}

std::string equity_csv(const PriceSeries& prices, const BacktestResult& result) {
    std::string out = "timestamp,iso_time,equity\n";
    for (std::size_t i = 0; i < result.equity.size(); ++i) {
        out += std::to_string(prices.bars[i].timestamp);
        out += ',';
        out += format_iso_datetime(prices.bars[i].timestamp);
        out += ',';
        out += format_double(result.equity[i]);
        out += '\n';
    }
    return out;
}

std::string trades_csv(const PriceSeries& prices, const BacktestResult& result) {
    std::string out = "bar,timestamp,iso_time,side,price,units\n";
    for (const Trade& trade : result.trades) {
        out += std::to_string(trade.bar);
        out += ',';
        out += std::to_string(prices.bars[trade.bar].timestamp);
        out += ',';
        out += format_iso_datetime(prices.bars[trade.bar].timestamp);
        out += ',';
        out += trade.side == Side::Buy ? "buy" : "sell";
        out += ',';
        out += format_double(trade.price);
        out += ',';
        out += format_double(trade.units);
        out += '\n';
    }
    return out;
}

std::string bars_csv(const PriceSeries& prices) {
    std::string out = "timestamp,iso_time,close,filled\n";
    for (const Bar& bar : prices.bars) {
        out += std::to_string(bar.timestamp);
        out += ',';
        out += format_iso_datetime(bar.timestamp);
        out += ',';
        out += format_double(bar.close);
        out += ',';
        out += bar.filled ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string surface_csv(const SharpeSurface& surface) {
    std::string out = "kind,short,long,sharpe,sortino,max_drawdown,exposure,total_return,n_trades\n";
    const char* kind = indicator_name(surface.kind);
    for (const SurfaceCell& cell : surface.cells) {
        const PerformanceMetrics& m = cell.metrics;
        out += kind;
        out += ',';
        out += std::to_string(cell.short_window);
        out += ',';
        out += std::to_string(cell.long_window);
        out += ',';
        if (m.sharpe) out += format_double(*m.sharpe);
        out += ',';
        if (m.sortino) out += format_double(*m.sortino);
        out += ',';
        out += format_double(m.max_drawdown);
        out += ',';
        out += format_double(m.exposure);
        out += ',';
        out += format_double(m.total_return);
        out += ',';
        out += std::to_string(m.n_trades);
        out += '\n';
    }
    return out;
}

nlohmann::json surface_matrix_json(const SharpeSurface& surface) {
    // Dense (short x long) Sharpe matrix for heat-map rendering; invalid
    // pairs (short >= long, or windows missing from the slice) are null.
    std::vector<int> windows;
    for (const SurfaceCell& cell : surface.cells) {
        windows.push_back(cell.short_window);
        windows.push_back(cell.long_window);
    }
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());

    const auto index_of = [&](int w) {
        return static_cast<std::size_t>(
            std::find(windows.begin(), windows.end(), w) - windows.begin());
    };
    std::vector<std::vector<nlohmann::json>> matrix(
        windows.size(), std::vector<nlohmann::json>(windows.size(), nullptr));
    for (const SurfaceCell& cell : surface.cells) {
        if (cell.metrics.sharpe) {
            matrix[index_of(cell.short_window)][index_of(cell.long_window)] =
                *cell.metrics.sharpe;
        }
    }

    nlohmann::json doc;
    doc["kind"] = indicator_name(surface.kind);
    doc["slice"] = {{"start", format_iso_datetime(surface.slice_start)},
                    {"end", format_iso_datetime(surface.slice_end)}};
    doc["grid"] = {{"min", surface.grid.min_window},
                   {"max", surface.grid.max_window},
                   {"step", surface.grid.step}};
    doc["windows"] = windows;
    doc["sharpe"] = matrix;  // rows: short window, columns: long window
    return doc;
}

nlohmann::json walkforward_json(const WalkForwardReport& report,
                                const std::string& annualization) {
    nlohmann::json periods = nlohmann::json::array();
    for (const WalkForwardPeriod& p : report.periods) {
        nlohmann::json entry;
        entry["train"] = {{"start", format_iso_datetime(p.train.start)},
                          {"end", format_iso_datetime(p.train.end)}};
        entry["test"] = {{"start", format_iso_datetime(p.test.start)},
                         {"end", format_iso_datetime(p.test.end)}};
        entry["fitted"] = p.fitted ? nlohmann::json{{"short", p.fitted->short_window},
                                                    {"long", p.fitted->long_window}}
                                   : nlohmann::json(nullptr);
        entry["test_metrics"] =
            p.test_metrics ? metrics_to_json(*p.test_metrics) : nlohmann::json(nullptr);
        entry["skipped_reason"] =
            p.skipped() ? nlohmann::json(p.skipped_reason) : nlohmann::json(nullptr);
        entry["period_return"] = p.period_return();
        periods.push_back(std::move(entry));
    }

    nlohmann::json doc;
    doc["periods"] = std::move(periods);
    doc["combined_total_return"] = report.combined_total_return;
    doc["combined_annualized_geometric"] = report.combined_annualized_geometric;
    doc["combined_annualized_arithmetic"] = report.combined_annualized_arithmetic;
    doc["annualization"] = annualization;
    doc["combined_annualized_return"] = annualization == "arithmetic"
                                            ? report.combined_annualized_arithmetic
                                            : report.combined_annualized_geometric;
    return doc;
}

std::string walkforward_parameters_csv(const WalkForwardReport& report) {
    std::string out = "date,short,long\n";
    for (const WalkForwardPeriod& p : report.periods) {
        if (!p.fitted) continue;
        out += format_iso_date(p.test.start);
        out += ',';
        out += std::to_string(p.fitted->short_window);
        out += ',';
        out += std::to_string(p.fitted->long_window);
        out += '\n';
    }
    return out;
}

std::string correlation_csv(const CorrelationSeries& series) {
    std::string out = "date,correlation\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_iso_date(series.days[i] * kSecondsPerDay);
        out += ',';
        if (!std::isnan(series.values[i])) out += format_double(series.values[i]);
        out += '\n';
    }
    return out;
}

std::string scatter_csv(const PairedReturns& pairs) {
    std::string out = "date,return_a,return_b\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out += format_iso_date(pairs.days[i] * kSecondsPerDay);
        out += ',';
        out += format_double(pairs.a[i]);
        out += ',';
        out += format_double(pairs.b[i]);
        out += '\n';
    }
    return out;
}

nlohmann::json significance_json(const CorrelationTest& test) {
    nlohmann::json doc;
    doc["r"] = test.r;
    doc["t_statistic"] = std::isinf(test.t_statistic)
                             ? nlohmann::json(test.t_statistic > 0 ? "inf" : "-inf")
                             : nlohmann::json(test.t_statistic);
    doc["p_value"] = test.p_value;
    doc["n"] = test.n;
    return doc;
}

}  // namespace trendlab::cli
