#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypermorph/filter_lab.hpp"

namespace hypermorph {

enum class Command { Filter, Sweep, Bench, Ops };
enum class ReportFormat { Csv, Text };

struct CliConfig {
    Command command = Command::Filter;
    std::filesystem::path input;
    std::filesystem::path output;
    std::optional<std::filesystem::path> reference;
    FilterFamily family = FilterFamily::HypergraphASF;
    unsigned lambda = 1;
    int window = 3;
    /// Percent, as in the noise-ratio column of the benchmark tables.
    double noise_percent = 10.0;
    std::uint64_t seed = 1;
    unsigned lambda_max = 7;
    std::optional<std::filesystem::path> report;
    ReportFormat format = ReportFormat::Text;
    /// Operator name for the ops command.
    std::string op;
    /// Worker cap for bench; 0 means use HYPERMORPH_THREADS or the hardware.
    unsigned threads = 0;
};

/// Throws std::invalid_argument naming the first missing or inconsistent
/// field for the selected command.
void validate(const CliConfig& cfg);

// Each command returns the process exit status and reports on `out`.
// Errors are thrown; the CLI front end turns them into one-line diagnostics.
int cmd_filter(const CliConfig& cfg, std::ostream& out);
int cmd_sweep(const CliConfig& cfg, std::ostream& out);
int cmd_bench(const CliConfig& cfg, std::ostream& out);
int cmd_ops(const CliConfig& cfg, std::ostream& out);
int run_command(const CliConfig& cfg, std::ostream& out);

/// Names accepted by cmd_ops.
const std::vector<std::string>& ops_names();

struct BenchCell {
    unsigned best_scale = 0;
    double best_mse_percent = 0.0;
};

struct BenchRow {
    double noise_percent = 0.0;
    double achieved_noise_percent = 0.0;
    BenchCell median;
    BenchCell graph_asf;
    BenchCell hypergraph_asf;
};

struct BenchOptions {
    std::vector<double> noise_percents{5.0, 10.0, 15.0, 20.0};
    std::vector<int> windows{3, 5, 7};
    unsigned lambda_max = 7;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

/// Runs the (noise level x filter family) grid on one clean image. Jobs run
/// concurrently; the result does not depend on the worker count.
std::vector<BenchRow> run_benchmark(const BinaryImage& clean, const BenchOptions& options);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
/// Aligned table with "value(scale)" cells, e.g. "1.76(1)" and "1.58 (3x3)".
void write_bench_text(std::ostream& out, const std::vector<BenchRow>& rows);

/// Worker count from HYPERMORPH_THREADS, else hardware concurrency, capped
/// by `jobs` and at least 1.
unsigned worker_count(unsigned requested, std::size_t jobs);

}  // namespace hypermorph
