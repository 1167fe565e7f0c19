// hypermorph: hypergraph morphology filters for binary PBM/PGM images.
//
//   hypermorph filter --input noisy.pbm --output out.pbm --family hypergraph-asf --lambda 1
//   hypermorph sweep  --input clean.pbm --noise-ratio 10 --seed 7 --lambda-max 7 --report sweep.csv
//   hypermorph bench  --input clean.pbm --seed 7 --report table.csv --format text
//   hypermorph ops    --input in.pbm --output out.pbm --family graph-asf --op halfopen

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hypermorph/commands.hpp"

namespace {

using hypermorph::CliConfig;

void add_common(CLI::App* sub, CliConfig& cfg, std::string& family) {
    sub->add_option("--input", cfg.input, "Input PBM/PGM image")->required();
    sub->add_option("--family", family, "median | graph-asf | hypergraph-asf")
        ->check(CLI::IsMember({"median", "graph-asf", "hypergraph-asf"}));
    sub->add_option("--seed", cfg.seed, "Noise generator seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morphological filtering of binary images on graphs and hypergraphs"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string family = "hypergraph-asf";
    std::string reference;
    std::string report;
    std::string format = "text";
    std::string output;

    auto* filter = app.add_subcommand("filter", "Apply one filter at one scale");
    auto* sweep = app.add_subcommand("sweep", "MSE versus filter scale");
    auto* bench = app.add_subcommand("bench", "Noise level x filter family table");
    auto* ops = app.add_subcommand("ops", "Apply a single morphological operator");

    for (auto* sub : {filter, sweep, bench, ops}) add_common(sub, cfg, family);
    for (auto* sub : {filter, ops}) sub->add_option("--output", output, "Output PBM (P4)")->required();
    for (auto* sub : {filter, sweep}) sub->add_option("--reference", reference, "Clean reference image");
    for (auto* sub : {filter, ops}) sub->add_option("--lambda", cfg.lambda, "ASF / granulometry scale");
    for (auto* sub : {filter, sweep, bench}) sub->add_option("--window", cfg.window, "Median window (largest for sweeps)");
    sweep->add_option("--noise-ratio", cfg.noise_percent, "Noise level in percent")->check(CLI::Range(0.0, 100.0));
    for (auto* sub : {sweep, bench}) {
        sub->add_option("--lambda-max", cfg.lambda_max, "Largest ASF scale");
        sub->add_option("--report", report, "CSV report path");
        sub->add_option("--format", format, "Console output format")->check(CLI::IsMember({"csv", "text"}));
    }
    bench->add_option("--threads", cfg.threads, "Worker cap (default: HYPERMORPH_THREADS or all cores)");
    ops->add_option("--op", cfg.op, "Operator name")->required()->check(CLI::IsMember(hypermorph::ops_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors
    }

    const std::map<CLI::App*, hypermorph::Command> commands{{filter, hypermorph::Command::Filter},
                                                            {sweep, hypermorph::Command::Sweep},
                                                            {bench, hypermorph::Command::Bench},
                                                            {ops, hypermorph::Command::Ops}};
    cfg.command = commands.at(app.get_subcommands().front());
    cfg.family = *hypermorph::parse_filter_family(family);
    cfg.output = output;
    if (!reference.empty()) cfg.reference = reference;
    if (!report.empty()) cfg.report = report;
    cfg.format = format == "csv" ? hypermorph::ReportFormat::Csv : hypermorph::ReportFormat::Text;

    try {
        return hypermorph::run_command(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "hypermorph: " << e.what() << '\n';
        return 1;
    }
}
