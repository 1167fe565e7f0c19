#include "hypermorph/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hypermorph/netpbm.hpp"

namespace hypermorph {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

bool is_asf(FilterFamily f) { return f != FilterFamily::Median; }

std::vector<int> odd_windows_up_to(int largest) {
    std::vector<int> out;
    for (int k = 3; k <= largest; k += 2) out.push_back(k);
    return out;
}

NoiseSpec noise_spec(double percent, std::uint64_t seed) { return {percent / 100.0, seed}; }

std::string format_mse(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

}  // namespace

void validate(const CliConfig& cfg) {
    require(!cfg.input.empty(), "--input is required");
    switch (cfg.command) {
        case Command::Filter:
            require(!cfg.output.empty(), "filter needs --output");
            if (cfg.family == FilterFamily::Median)
                require(cfg.window >= 3 && cfg.window % 2 == 1, "--window must be odd and >= 3");
            break;
        case Command::Sweep:
            require(cfg.noise_percent >= 0.0 && cfg.noise_percent <= 100.0, "--noise-ratio must lie in [0, 100]");
            if (cfg.family == FilterFamily::Median)
                require(cfg.window >= 3 && cfg.window % 2 == 1, "--window must be odd and >= 3");
            break;
        case Command::Bench:
            break;
        case Command::Ops: {
            require(!cfg.output.empty(), "ops needs --output");
            require(is_asf(cfg.family), "ops needs --family graph-asf or hypergraph-asf");
            const auto& names = ops_names();
            require(std::find(names.begin(), names.end(), cfg.op) != names.end(), "unknown --op '" + cfg.op + "'");
            break;
        }
    }
}

int cmd_filter(const CliConfig& cfg, std::ostream& out) {
    validate(cfg);
    const auto img = read_image(cfg.input);
    const auto filtered =
        cfg.family == FilterFamily::Median ? median_filter(img, cfg.window) : asf_denoise(img, cfg.family, cfg.lambda);
    write_image(filtered, cfg.output);
    out << to_string(cfg.family) << " scale="
        << (cfg.family == FilterFamily::Median ? static_cast<unsigned>(cfg.window) : cfg.lambda);
    if (cfg.reference) out << " mse_percent=" << format_mse(mse_percent(filtered, read_image(*cfg.reference)));
    out << '\n';
    return 0;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out) {
    validate(cfg);
    // With --reference the input is already noisy; otherwise noise is added
    // to the clean input.
    BinaryImage clean;
    BinaryImage noisy;
    if (cfg.reference) {
        noisy = read_image(cfg.input);
        clean = read_image(*cfg.reference);
    } else {
        clean = read_image(cfg.input);
        noisy = add_salt_pepper(clean, noise_spec(cfg.noise_percent, cfg.seed)).image;
    }
    SweepReport report;
    if (cfg.family == FilterFamily::Median) {
        const auto windows = odd_windows_up_to(cfg.window);
        report = run_median_sweep(clean, noisy, windows);
    } else {
        report = run_asf_sweep(clean, noisy, cfg.family, cfg.lambda_max);
    }

    std::ostringstream csv;
    write_sweep_csv(csv, report);
    if (cfg.report) write_file_atomic(*cfg.report, csv.str());
    if (cfg.format == ReportFormat::Csv) out << csv.str();
    const auto& best = report.best();
    out << "best " << to_string(report.family) << " scale=" << best.scale
        << " mse_percent=" << format_mse(best.mse_percent) << '\n';
    return 0;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("HYPERMORPH_THREADS")) {
            char* end = nullptr;
            const auto v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
        }
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::clamp<std::size_t>(n, 1, std::max<std::size_t>(jobs, 1)));
}

std::vector<BenchRow> run_benchmark(const BinaryImage& clean, const BenchOptions& options) {
    const auto levels = options.noise_percents.size();
    std::vector<BenchRow> rows(levels);
    std::vector<BinaryImage> noisy(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        const auto n = add_salt_pepper(clean, noise_spec(options.noise_percents[i], options.seed + i));
        noisy[i] = n.image;
        rows[i].noise_percent = options.noise_percents[i];
        rows[i].achieved_noise_percent = 100.0 * n.achieved_ratio;
    }

    constexpr FilterFamily kFamilies[] = {FilterFamily::Median, FilterFamily::GraphASF, FilterFamily::HypergraphASF};
    std::vector<std::function<void()>> jobs;
    for (std::size_t i = 0; i < levels; ++i)
        for (auto family : kFamilies)
            jobs.emplace_back([&, i, family] {
                const auto report = family == FilterFamily::Median
                                        ? run_median_sweep(clean, noisy[i], options.windows)
                                        : run_asf_sweep(clean, noisy[i], family, options.lambda_max);
                const BenchCell cell{report.best().scale, report.best().mse_percent};
                switch (family) {
                    case FilterFamily::Median: rows[i].median = cell; break;
                    case FilterFamily::GraphASF: rows[i].graph_asf = cell; break;
                    case FilterFamily::HypergraphASF: rows[i].hypergraph_asf = cell; break;
                }
            });

    // Each job writes a distinct cell, so workers only share the job counter.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
                jobs[j]();
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    const auto n = worker_count(options.threads, jobs.size());
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    const auto flags = out.flags();
    out << "noise_percent,achieved_noise_percent,median_mse,median_window,graph_asf_mse,graph_asf_lambda,"
           "hypergraph_asf_mse,hypergraph_asf_lambda\n"
        << std::fixed;
    for (const auto& r : rows)
        out << std::setprecision(2) << r.noise_percent << ',' << std::setprecision(4) << r.achieved_noise_percent
            << ',' << r.median.best_mse_percent << ',' << r.median.best_scale << ',' << r.graph_asf.best_mse_percent
            << ',' << r.graph_asf.best_scale << ',' << r.hypergraph_asf.best_mse_percent << ','
            << r.hypergraph_asf.best_scale << '\n';
    out.flags(flags);
}

void write_bench_text(std::ostream& out, const std::vector<BenchRow>& rows) {
    auto cell = [](double mse, const std::string& scale) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(2) << mse << scale;
        return s.str();
    };
    const auto flags = out.flags();
    out << std::left << std::setw(12) << "Noise Ratio" << std::setw(16) << "Median Filter" << std::setw(12)
        << "Graph ASF" << "Hypergraph ASF\n";
    for (const auto& r : rows) {
        const auto k = std::to_string(r.median.best_scale);
        std::ostringstream noise;
        noise << r.noise_percent;
        out << std::setw(12) << noise.str() << std::setw(16)
            << cell(r.median.best_mse_percent, " (" + k + "x" + k + ")") << std::setw(12)
            << cell(r.graph_asf.best_mse_percent, "(" + std::to_string(r.graph_asf.best_scale) + ")")
            << cell(r.hypergraph_asf.best_mse_percent, "(" + std::to_string(r.hypergraph_asf.best_scale) + ")")
            << '\n';
    }
    out.flags(flags);
}

int cmd_bench(const CliConfig& cfg, std::ostream& out) {
    validate(cfg);
    const auto clean = read_image(cfg.input);
    BenchOptions options;
    options.seed = cfg.seed;
    options.lambda_max = cfg.lambda_max;
    options.threads = cfg.threads;
    options.windows = odd_windows_up_to(std::max(cfg.window, 7));
    const auto rows = run_benchmark(clean, options);

    std::ostringstream csv;
    write_bench_csv(csv, rows);
    if (cfg.report) write_file_atomic(*cfg.report, csv.str());
    if (cfg.format == ReportFormat::Csv)
        out << csv.str();
    else
        write_bench_text(out, rows);
    return 0;
}

const std::vector<std::string>& ops_names() {
    static const std::vector<std::string> names{"dilate",   "erode",     "open",          "close",
                                                "halfopen", "halfclose", "granulo-open",  "granulo-close",
                                                "asf"};
    return names;
}

int cmd_ops(const CliConfig& cfg, std::ostream& out) {
    validate(cfg);
    const auto img = read_image(cfg.input);
    const auto h = build_grid_hypergraph({grid_kind_for(cfg.family), img.width(), img.height()});
    const auto x = image_to_subhypergraph(img, h);
    const OperatorScale scale(cfg.lambda);

    SubHypergraph y;
    const auto& op = cfg.op;
    if (op == "dilate") y = pair_dilate(h, x);
    else if (op == "erode") y = pair_erode(h, x);
    else if (op == "open") y = pair_open1(h, x);
    else if (op == "close") y = pair_close1(h, x);
    else if (op == "halfopen") y = pair_halfopen(h, x);
    else if (op == "halfclose") y = pair_halfclose(h, x);
    else if (op == "granulo-open") y = granulometry_open(h, x, scale);
    else if (op == "granulo-close") y = granulometry_close(h, x, scale);
    else y = asf(h, x, cfg.lambda);

    const auto result = subhypergraph_to_image(y, img.width(), img.height());
    write_image(result, cfg.output);
    out << op << ' ' << to_string(cfg.family) << " vertices=" << y.vertices.count() << " edges=" << y.hedges.count()
        << '\n';
    return 0;
}

int run_command(const CliConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
        case Command::Filter: return cmd_filter(cfg, out);
        case Command::Sweep: return cmd_sweep(cfg, out);
        case Command::Bench: return cmd_bench(cfg, out);
        case Command::Ops: return cmd_ops(cfg, out);
    }
    return 2;
}

}  // namespace hypermorph
